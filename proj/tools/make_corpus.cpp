// Deterministic generator for the bundled test corpus: two 256x256 color
// covers and two 128x128 grey secrets. Everything is a pure function of the
// pixel coordinates (noise comes from a counter-based hash), so the output
// never depends on evaluation order or platform RNG.
//
// The covers imitate the channel statistics of the classic colorful test
// images: green and blue stay in a dark-to-mid range with heavy texture
// (real scenes rarely have bright green/blue), while the chrominance planes
// are smooth and span a wide range thanks to strongly colored regions. The
// secrets contain bright content that green/blue cannot represent but the
// chroma planes can, which is what gives the chroma-domain embedding its
// reconstruction edge. All values keep headroom from 0/255 so the embedding
// perturbation rarely clamps.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>

#include "stego/image.hpp"
#include "stego/image_io.hpp"

namespace {

constexpr int kCoverSize = 256;
constexpr int kSecretSize = 128;

uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Hash noise in [-1, 1], independent per (x, y, tag).
double noise(int x, int y, uint64_t tag) {
    const uint64_t h = mix64((static_cast<uint64_t>(x) << 40) ^
                             (static_cast<uint64_t>(y) << 16) ^ tag);
    return static_cast<double>(h >> 11) / static_cast<double>(1ull << 53) * 2.0 - 1.0;
}

double smoothstep(double e0, double e1, double v) {
    const double t = std::clamp((v - e0) / (e1 - e0), 0.0, 1.0);
    return t * t * (3.0 - 2.0 * t);
}

struct Rgb {
    double r, g, b;
};

// A palette color occupying smooth irregular regions of the image. The mass
// field is a low-frequency oscillation; softmax blending turns the fields
// into a smooth partition of unity, giving broad color masses with soft
// borders (and therefore smooth, wide-ranging chrominance).
struct Mass {
    Rgb color;
    double fx, fy, sx, sy, px, py; // field frequencies and phases
};

double mass_field(const Mass& m, double x, double y) {
    return std::sin(m.fx * x + 1.7 * std::sin(m.sx * y) + m.px) *
           std::cos(m.fy * y + 1.3 * std::sin(m.sy * x) + m.py);
}

template <size_t N>
Rgb blend_masses(const Mass (&masses)[N], double x, double y, double sharpness) {
    double w[N], total = 0.0;
    for (size_t i = 0; i < N; ++i) {
        w[i] = std::exp(sharpness * mass_field(masses[i], x, y));
        total += w[i];
    }
    Rgb out{0, 0, 0};
    for (size_t i = 0; i < N; ++i) {
        const double f = w[i] / total;
        out.r += f * masses[i].color.r;
        out.g += f * masses[i].color.g;
        out.b += f * masses[i].color.b;
    }
    return out;
}

template <typename F>
stego::RgbImage render_cover(F&& field) {
    stego::RgbImage img{stego::ImagePlane(kCoverSize, kCoverSize),
                        stego::ImagePlane(kCoverSize, kCoverSize),
                        stego::ImagePlane(kCoverSize, kCoverSize)};
    for (int y = 0; y < kCoverSize; ++y) {
        for (int x = 0; x < kCoverSize; ++x) {
            const Rgb p = field(x, y);
            img.r.at(y, x) = std::clamp(static_cast<int>(std::lround(p.r)), 0, 255);
            img.g.at(y, x) = std::clamp(static_cast<int>(std::lround(p.g)), 0, 255);
            img.b.at(y, x) = std::clamp(static_cast<int>(std::lround(p.b)), 0, 255);
        }
    }
    return img;
}

// Mandrill stand-in: fur-like ridge texture and strong noise over warm and
// cool color masses (red muzzle, blue flanks, olive fur, mossy green).
Rgb textured_cover(int x, int y) {
    static const Mass masses[] = {
        {{190, 96, 58}, 0.021, 0.017, 0.011, 0.009, 0.3, 1.9},  // red-orange
        {{72, 94, 140}, 0.016, 0.023, 0.013, 0.010, 2.1, 0.4},  // blue flank
        {{118, 116, 78}, 0.026, 0.019, 0.008, 0.012, 4.4, 2.8}, // olive fur
        {{62, 135, 60}, 0.018, 0.027, 0.010, 0.014, 1.2, 5.0},  // moss green
        {{46, 64, 142}, 0.024, 0.021, 0.012, 0.011, 3.6, 1.1},  // deep blue
    };
    Rgb p = blend_masses(masses, x, y, 2.2);

    const double fx = x, fy = y;
    const double ridge = std::sin(0.30 * (fx + fy) + 2.2 * std::sin(0.07 * fx)) *
                         std::cos(0.23 * (fx - 0.6 * fy));
    const double grain = 26.0 * noise(x, y, 0xAB01) + 8.0 * ridge;
    p.r += 1.0 * grain + 7.0 * noise(x, y, 0xAB02);
    p.g += 0.75 * grain + 6.0 * noise(x, y, 0xAB03);
    p.b += 0.60 * grain + 6.0 * noise(x, y, 0xAB04);
    return p;
}

// Vegetable-heap stand-in: bigger, smoother color masses (peppers, eggplant)
// with gentle lighting and a little skin speckle.
Rgb blob_cover(int x, int y) {
    static const Mass masses[] = {
        {{198, 64, 54}, 0.013, 0.011, 0.007, 0.006, 0.9, 2.6},  // red pepper
        {{66, 142, 60}, 0.010, 0.014, 0.006, 0.008, 3.3, 0.2},  // green pepper
        {{205, 128, 52}, 0.015, 0.009, 0.008, 0.005, 5.1, 1.5}, // orange pepper
        {{84, 56, 168}, 0.011, 0.013, 0.005, 0.007, 2.0, 4.1},  // eggplant
        {{70, 66, 150}, 0.016, 0.010, 0.009, 0.006, 4.6, 0.8},  // plum
        {{48, 96, 50}, 0.014, 0.012, 0.007, 0.009, 1.6, 3.4},   // dark leaves
    };
    Rgb p = blend_masses(masses, x, y, 3.4);

    const double fx = x, fy = y;
    const double shade = 10.0 * std::sin(0.045 * fx + 1.0) * std::cos(0.05 * fy - 0.5);
    const double speckle = 12.0 * noise(x, y, 0xEE01);
    p.r += shade + speckle + 4.0 * noise(x, y, 0xEE02);
    p.g += 0.8 * (shade + speckle) + 4.0 * noise(x, y, 0xEE03);
    p.b += 0.6 * (shade + speckle) + 4.0 * noise(x, y, 0xEE04);
    return p;
}

template <typename F>
stego::ImagePlane render_secret(F&& field) {
    stego::ImagePlane plane(kSecretSize, kSecretSize);
    for (int y = 0; y < kSecretSize; ++y)
        for (int x = 0; x < kSecretSize; ++x)
            plane.at(y, x) = std::clamp(static_cast<int>(std::lround(field(x, y))), 0, 255);
    return plane;
}

// Lambert-shaded sphere over a mid-grey gradient sky; the highlight reaches
// values no green/blue cover channel contains.
double globe_secret(int x, int y) {
    const double cx = 62.0, cy = 60.0, r = 44.0;
    const double dx = (x - cx) / r, dy = (y - cy) / r;
    const double d2 = dx * dx + dy * dy;
    double v = 96.0 + 28.0 * (y / 127.0); // background
    if (d2 < 1.12) {
        const double nz = std::sqrt(std::max(0.0, 1.0 - std::min(d2, 1.0)));
        const double lambert = std::max(0.0, -0.45 * dx - 0.35 * dy + 0.82 * nz);
        const double sphere = 100.0 + 85.0 * lambert;
        v = v + (sphere - v) * smoothstep(1.12, 0.97, d2);
    }
    return v;
}

// Glossy ball with two dark seams and a soft ground shadow.
double ball_secret(int x, int y) {
    const double cx = 64.0, cy = 66.0, r = 42.0;
    const double dx = (x - cx) / r, dy = (y - cy) / r;
    const double d2 = dx * dx + dy * dy;
    double v = 130.0 - 30.0 * (x / 127.0); // background

    // ground shadow
    const double sx = (x - 70.0) / 48.0, sy = (y - 112.0) / 14.0;
    v -= 8.0 * std::exp(-(sx * sx + sy * sy));

    if (d2 < 1.10) {
        const double nz = std::sqrt(std::max(0.0, 1.0 - std::min(d2, 1.0)));
        const double lambert = std::max(0.0, 0.50 * dx - 0.55 * dy + 0.67 * nz);
        double ball = 96.0 + 89.0 * std::pow(lambert, 0.9);
        const double seam1 = std::abs(dx * dx - dy + 0.15);
        const double seam2 = std::abs(dy * dy + 0.7 * dx - 0.2);
        ball -= 30.0 * (1.0 - smoothstep(0.035, 0.085, seam1)) * nz;
        ball -= 26.0 * (1.0 - smoothstep(0.035, 0.085, seam2)) * nz;
        v = v + (ball - v) * smoothstep(1.10, 0.97, d2);
    }
    return v;
}

void describe(const char* name, const stego::RgbImage& img) {
    auto span = [](const stego::ImagePlane& p) {
        const auto [lo, hi] = std::minmax_element(p.samples.begin(), p.samples.end());
        return std::pair<int, int>(*lo, *hi);
    };
    const auto [rl, rh] = span(img.r);
    const auto [gl, gh] = span(img.g);
    const auto [bl, bh] = span(img.b);
    std::printf("%s: %dx%d r[%d,%d] g[%d,%d] b[%d,%d]\n", name, img.width(),
                img.height(), rl, rh, gl, gh, bl, bh);
}

void describe(const char* name, const stego::ImagePlane& p) {
    const auto [lo, hi] = std::minmax_element(p.samples.begin(), p.samples.end());
    std::printf("%s: %dx%d grey range [%d, %d]\n", name, p.width, p.height,
                static_cast<int>(*lo), static_cast<int>(*hi));
}

} // namespace

int main(int argc, char** argv) {
    const std::string outdir = argc > 1 ? argv[1] : "assets";
    std::filesystem::create_directories(outdir);

    const stego::RgbImage baboon = render_cover(textured_cover);
    const stego::RgbImage peppers = render_cover(blob_cover);
    const stego::ImagePlane globe = render_secret(globe_secret);
    const stego::ImagePlane ball = render_secret(ball_secret);

    stego::save_rgb(outdir + "/cover_baboon.bmp", baboon);
    stego::save_rgb(outdir + "/cover_peppers.bmp", peppers);
    stego::save_grey(outdir + "/secret_globe.pgm", globe);
    stego::save_grey(outdir + "/secret_ball.pgm", ball);

    describe("cover_baboon", baboon);
    describe("cover_peppers", peppers);
    describe("secret_globe", globe);
    describe("secret_ball", ball);
    return 0;
}
