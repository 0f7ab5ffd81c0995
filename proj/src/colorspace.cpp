#include "stego/colorspace.hpp"

#include <algorithm>
#include <cmath>

namespace stego {

namespace {

// Round n/256 half away from zero. Exact: the half case is n == 128 mod 256.
inline int32_t round_div256(int32_t n) {
    return n >= 0 ? (n + 128) >> 8 : -((-n + 128) >> 8);
}

inline int32_t clamp255(int32_t v) { return std::clamp(v, 0, 255); }

inline int32_t round_away(double v) {
    return static_cast<int32_t>(v >= 0.0 ? std::floor(v + 0.5) : std::ceil(v - 0.5));
}

} // namespace

YcbcrImage rgb_to_ycbcr(const RgbImage& img) {
    const int w = img.width(), h = img.height();
    YcbcrImage out{ImagePlane(w, h), ImagePlane(w, h), ImagePlane(w, h)};
    const int64_t n = static_cast<int64_t>(w) * h;
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) {
        const int32_t r = img.r.samples[i];
        const int32_t g = img.g.samples[i];
        const int32_t b = img.b.samples[i];
        out.y.samples[i] = clamp255(round_div256(77 * r + 150 * g + 29 * b));
        out.cb.samples[i] = clamp255(round_div256(-44 * r - 87 * g + 131 * b + 32768));
        out.cr.samples[i] = clamp255(round_div256(131 * r - 110 * g - 21 * b + 32768));
    }
    return out;
}

RgbImage ycbcr_to_rgb(const YcbcrImage& img) {
    const int w = img.width(), h = img.height();
    RgbImage out{ImagePlane(w, h), ImagePlane(w, h), ImagePlane(w, h)};
    const int64_t n = static_cast<int64_t>(w) * h;
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) {
        const double y = img.y.samples[i];
        const double cb = img.cb.samples[i] - 128.0;
        const double cr = img.cr.samples[i] - 128.0;
        out.r.samples[i] = clamp255(round_away(y + 1.371 * cr));
        out.g.samples[i] = clamp255(round_away(y - 0.698 * cr - 0.336 * cb));
        out.b.samples[i] = clamp255(round_away(y + 1.732 * cb));
    }
    return out;
}

} // namespace stego
