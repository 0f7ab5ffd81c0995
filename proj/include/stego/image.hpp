#pragma once

#include <cstdint>
#include <vector>

#include "stego/errors.hpp"

namespace stego {

/// One channel worth of samples, row-major, origin top-left. The same type
/// carries 8-bit pixels (0..255) and wavelet coefficients (any int32), so
/// transforms never need a conversion step.
struct ImagePlane {
    int width = 0;
    int height = 0;
    std::vector<int32_t> samples; // samples.size() == width * height

    ImagePlane() = default;
    ImagePlane(int w, int h, int32_t fill = 0)
        : width(w), height(h), samples(static_cast<size_t>(w) * h, fill) {}

    int32_t& at(int row, int col) { return samples[static_cast<size_t>(row) * width + col]; }
    int32_t at(int row, int col) const { return samples[static_cast<size_t>(row) * width + col]; }

    size_t size() const { return samples.size(); }
    bool same_shape(const ImagePlane& o) const { return width == o.width && height == o.height; }

    friend bool operator==(const ImagePlane&, const ImagePlane&) = default;
};

/// Three pixel-domain planes of identical shape.
struct RgbImage {
    ImagePlane r, g, b;

    int width() const { return r.width; }
    int height() const { return r.height; }

    friend bool operator==(const RgbImage&, const RgbImage&) = default;
};

enum class Channel { red, green, blue };

const char* channel_name(Channel c);

/// Which two channels carry the secrets in the RGB pipeline.
struct ChannelPair {
    Channel first = Channel::green;
    Channel second = Channel::blue;
};

/// Throws RangeError unless the two selectors are distinct.
void validate_channel_pair(const ChannelPair& p);

/// Returns deep copies of the r, g, b planes.
std::tuple<ImagePlane, ImagePlane, ImagePlane> split_channels(const RgbImage& img);

/// Inverse of split_channels. Throws DimensionMismatch on shape disagreement
/// and RangeError if any sample is outside [0, 255].
RgbImage merge_channels(const ImagePlane& r, const ImagePlane& g, const ImagePlane& b);

/// Clamps every sample into [0, 255].
ImagePlane clamp_to_pixel(const ImagePlane& p);

/// True if every sample already lies in [0, 255].
bool is_pixel_domain(const ImagePlane& p);

} // namespace stego
