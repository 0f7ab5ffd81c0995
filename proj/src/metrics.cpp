#include "stego/metrics.hpp"

#include <cmath>
#include <limits>

namespace stego {

namespace {

int64_t ssd(const ImagePlane& a, const ImagePlane& b) {
    int64_t sum = 0;
    const int64_t n = static_cast<int64_t>(a.size());
#pragma omp parallel for schedule(static) reduction(+ : sum)
    for (int64_t i = 0; i < n; ++i) {
        const int64_t d = a.samples[i] - b.samples[i];
        sum += d * d;
    }
    return sum;
}

double psnr_from_mse(double m, int peak) {
    if (m == 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(static_cast<double>(peak) * peak / m);
}

} // namespace

double mse(const ImagePlane& a, const ImagePlane& b) {
    if (!a.same_shape(b))
        throw DimensionMismatch("mse: plane shapes differ");
    return static_cast<double>(ssd(a, b)) / static_cast<double>(a.size());
}

double psnr(const ImagePlane& a, const ImagePlane& b, int peak) {
    return psnr_from_mse(mse(a, b), peak);
}

double rgb_mse(const RgbImage& a, const RgbImage& b) {
    if (!a.r.same_shape(b.r) || !a.g.same_shape(b.g) || !a.b.same_shape(b.b))
        throw DimensionMismatch("rgb_mse: image shapes differ");
    const int64_t total = ssd(a.r, b.r) + ssd(a.g, b.g) + ssd(a.b, b.b);
    return static_cast<double>(total) / (3.0 * static_cast<double>(a.r.size()));
}

double rgb_psnr(const RgbImage& a, const RgbImage& b, int peak) {
    return psnr_from_mse(rgb_mse(a, b), peak);
}

} // namespace stego
