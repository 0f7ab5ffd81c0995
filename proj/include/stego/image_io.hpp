#pragma once

#include <string>

#include "stego/image.hpp"

namespace stego {

// Lossless formats only: 24-bit uncompressed BMP and binary PPM (P6) for
// color, binary PGM (P5) for grey. Writing decides by file extension and
// refuses lossy formats; reading sniffs the magic bytes.

RgbImage load_rgb(const std::string& path);
ImagePlane load_grey(const std::string& path);

void save_rgb(const std::string& path, const RgbImage& img);
void save_grey(const std::string& path, const ImagePlane& plane);

std::vector<uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const std::vector<uint8_t>& bytes);

} // namespace stego
