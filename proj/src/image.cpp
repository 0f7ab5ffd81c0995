#include "stego/image.hpp"

#include <algorithm>
#include <tuple>

namespace stego {

const char* channel_name(Channel c) {
    switch (c) {
    case Channel::red:
        return "red";
    case Channel::green:
        return "green";
    case Channel::blue:
        return "blue";
    }
    return "?";
}

void validate_channel_pair(const ChannelPair& p) {
    if (p.first == p.second)
        throw RangeError("channel pair must name two distinct channels");
}

std::tuple<ImagePlane, ImagePlane, ImagePlane> split_channels(const RgbImage& img) {
    return {img.r, img.g, img.b};
}

RgbImage merge_channels(const ImagePlane& r, const ImagePlane& g, const ImagePlane& b) {
    if (!r.same_shape(g) || !r.same_shape(b))
        throw DimensionMismatch("merge_channels: plane shapes differ");
    for (const ImagePlane* p : {&r, &g, &b})
        if (!is_pixel_domain(*p))
            throw RangeError("merge_channels: sample outside [0,255]");
    return RgbImage{r, g, b};
}

ImagePlane clamp_to_pixel(const ImagePlane& p) {
    ImagePlane out = p;
    for (auto& s : out.samples)
        s = std::clamp(s, 0, 255);
    return out;
}

bool is_pixel_domain(const ImagePlane& p) {
    return std::all_of(p.samples.begin(), p.samples.end(),
                       [](int32_t s) { return s >= 0 && s <= 255; });
}

} // namespace stego
