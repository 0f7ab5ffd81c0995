#pragma once

#include "stego/image.hpp"

namespace stego {

/// Luminance plus blue/red chrominance planes, all clamped to [0, 255].
struct YcbcrImage {
    ImagePlane y, cb, cr;

    int width() const { return y.width; }
    int height() const { return y.height; }

    friend bool operator==(const YcbcrImage&, const YcbcrImage&) = default;
};

// Forward conversion with /256 rational coefficients:
//   Y  = ( 77 R + 150 G +  29 B) / 256
//   Cb = (-44 R -  87 G + 131 B) / 256 + 128
//   Cr = (131 R - 110 G -  21 B) / 256 + 128
// rounded half away from zero after the full expression, then clamped.
// Grey input (R=G=B=v) maps exactly to (v, 128, 128).
YcbcrImage rgb_to_ycbcr(const RgbImage& img);

// Inverse with the decimal coefficients as commonly tabulated:
//   R = Y + 1.371 (Cr - 128)
//   G = Y - 0.698 (Cr - 128) - 0.336 (Cb - 128)
//   B = Y + 1.732 (Cb - 128)
// same rounding and clamping. Not an exact inverse at integer precision:
// the round trip stays within +-2 per channel except where the forward
// conversion clamped chroma (saturated corner colors, where the error can
// reach 6).
RgbImage ycbcr_to_rgb(const YcbcrImage& img);

} // namespace stego
