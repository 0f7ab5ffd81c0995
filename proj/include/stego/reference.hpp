#pragma once

// Serial reference implementations of the hot kernels, written as plain
// straight-line loops. The OpenMP kernels in the main library must produce
// bit-identical results; tests compare the two and the benchmark tool
// times them against each other.

#include "stego/blockmatch.hpp"
#include "stego/colorspace.hpp"
#include "stego/image.hpp"
#include "stego/iwt.hpp"

namespace stego::ref {

SubBands forward_iwt(const ImagePlane& p);
ImagePlane inverse_iwt(const SubBands& sb);

MatchKey build_key(const ImagePlane& cover_ll, const ImagePlane& secret_ll);

YcbcrImage rgb_to_ycbcr(const RgbImage& img);
RgbImage ycbcr_to_rgb(const YcbcrImage& img);

double mse(const ImagePlane& a, const ImagePlane& b);

} // namespace stego::ref
