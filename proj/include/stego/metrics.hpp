#pragma once

#include "stego/image.hpp"

namespace stego {

/// Mean squared error, exact integer sum with one final division.
/// Throws DimensionMismatch.
double mse(const ImagePlane& a, const ImagePlane& b);

/// 10 * log10(peak^2 / mse), +infinity when the planes are identical.
double psnr(const ImagePlane& a, const ImagePlane& b, int peak = 255);

/// Color PSNR from the MSE pooled over all 3*N samples.
double rgb_psnr(const RgbImage& a, const RgbImage& b, int peak = 255);

double rgb_mse(const RgbImage& a, const RgbImage& b);

} // namespace stego
