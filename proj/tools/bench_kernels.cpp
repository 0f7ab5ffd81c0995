// Times the parallel kernels against the serial reference implementations
// and verifies the outputs are bit-identical. Exits nonzero on any mismatch,
// so this doubles as a determinism check under OpenMP.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "stego/blockmatch.hpp"
#include "stego/colorspace.hpp"
#include "stego/iwt.hpp"
#include "stego/metrics.hpp"
#include "stego/reference.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using clock_type = std::chrono::steady_clock;

stego::ImagePlane random_plane(int w, int h, std::mt19937& rng, int lo = 0, int hi = 255) {
    stego::ImagePlane p(w, h);
    std::uniform_int_distribution<int32_t> dist(lo, hi);
    for (auto& s : p.samples)
        s = dist(rng);
    return p;
}

template <typename F>
double time_ms(int reps, F&& f) {
    const auto t0 = clock_type::now();
    for (int i = 0; i < reps; ++i)
        f();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

int failures = 0;

void report(const std::string& name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-14s %10.2f ms %10.2f ms %7.2fx  %s\n", name.c_str(), serial_ms,
                parallel_ms, serial_ms / parallel_ms, identical ? "identical" : "MISMATCH");
    if (!identical)
        ++failures;
}

} // namespace

int main() {
    std::mt19937 rng(20240811);

#ifdef _OPENMP
    std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("openmp disabled; both columns run serial code\n");
#endif
    std::printf("%-14s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

    // Forward/inverse transform on a large plane.
    {
        const stego::ImagePlane p = random_plane(2048, 2048, rng);
        stego::SubBands a, b;
        const double ts = time_ms(5, [&] { a = stego::ref::forward_iwt(p); });
        const double tp = time_ms(5, [&] { b = stego::forward_iwt(p); });
        report("forward_iwt", ts, tp, a == b);

        stego::ImagePlane xa, xb;
        const double ts2 = time_ms(5, [&] { xa = stego::ref::inverse_iwt(a); });
        const double tp2 = time_ms(5, [&] { xb = stego::inverse_iwt(a); });
        report("inverse_iwt", ts2, tp2, xa == xb && xa == p);
    }

    // Exhaustive block matching at the pipeline's working size.
    {
        const stego::ImagePlane cover_ll = random_plane(128, 128, rng);
        const stego::ImagePlane secret_ll = random_plane(64, 64, rng);
        stego::MatchKey ka, kb;
        const double ts = time_ms(3, [&] { ka = stego::ref::build_key(cover_ll, secret_ll); });
        const double tp = time_ms(3, [&] { kb = stego::build_key(cover_ll, secret_ll); });
        report("build_key", ts, tp, ka == kb);
    }

    // Color conversions both ways.
    {
        stego::RgbImage img{random_plane(2048, 2048, rng), random_plane(2048, 2048, rng),
                            random_plane(2048, 2048, rng)};
        stego::YcbcrImage ya, yb;
        const double ts = time_ms(5, [&] { ya = stego::ref::rgb_to_ycbcr(img); });
        const double tp = time_ms(5, [&] { yb = stego::rgb_to_ycbcr(img); });
        report("rgb_to_ycbcr", ts, tp, ya == yb);

        stego::RgbImage ra, rb;
        const double ts2 = time_ms(5, [&] { ra = stego::ref::ycbcr_to_rgb(ya); });
        const double tp2 = time_ms(5, [&] { rb = stego::ycbcr_to_rgb(ya); });
        report("ycbcr_to_rgb", ts2, tp2, ra == rb);
    }

    // Metrics reduction.
    {
        const stego::ImagePlane a = random_plane(2048, 2048, rng);
        const stego::ImagePlane b = random_plane(2048, 2048, rng);
        double ma = 0, mb = 0;
        const double ts = time_ms(10, [&] { ma = stego::ref::mse(a, b); });
        const double tp = time_ms(10, [&] { mb = stego::mse(a, b); });
        report("mse", ts, tp, ma == mb);
    }

    if (failures > 0) {
        std::fprintf(stderr, "%d kernel(s) differ from the reference\n", failures);
        return 1;
    }
    return 0;
}
