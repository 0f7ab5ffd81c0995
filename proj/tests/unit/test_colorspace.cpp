#include <doctest.h>

#include <cstdlib>
#include <random>

#include "stego/colorspace.hpp"
#include "../testutil.hpp"

using namespace stego;

namespace {

RgbImage pixel(int r, int g, int b) {
    return RgbImage{ImagePlane(1, 1, r), ImagePlane(1, 1, g), ImagePlane(1, 1, b)};
}

} // namespace

TEST_SUITE("colorspace") {

TEST_CASE("forward conversion hits the pinned values") {
    // Grey input: the Y weights sum to 256/256 and the chroma weights cancel.
    YcbcrImage grey = rgb_to_ycbcr(pixel(200, 200, 200));
    CHECK(grey.y.at(0, 0) == 200);
    CHECK(grey.cb.at(0, 0) == 128);
    CHECK(grey.cr.at(0, 0) == 128);

    // Pure red: Cr saturates and clamps to 255.
    YcbcrImage red = rgb_to_ycbcr(pixel(255, 0, 0));
    CHECK(red.y.at(0, 0) == 77);
    CHECK(red.cb.at(0, 0) == 84);
    CHECK(red.cr.at(0, 0) == 255);

    YcbcrImage black = rgb_to_ycbcr(pixel(0, 0, 0));
    CHECK(black.y.at(0, 0) == 0);
    CHECK(black.cb.at(0, 0) == 128);
    CHECK(black.cr.at(0, 0) == 128);
}

TEST_CASE("inverse conversion hits the pinned values") {
    YcbcrImage mid{ImagePlane(1, 1, 128), ImagePlane(1, 1, 128), ImagePlane(1, 1, 128)};
    RgbImage back = ycbcr_to_rgb(mid);
    CHECK(back.r.at(0, 0) == 128);
    CHECK(back.g.at(0, 0) == 128);
    CHECK(back.b.at(0, 0) == 128);

    // The decimal inverse coefficients are not the exact matrix inverse, so
    // saturated red comes back as (251, 3, 1) rather than (255, 0, 0).
    YcbcrImage red{ImagePlane(1, 1, 77), ImagePlane(1, 1, 84), ImagePlane(1, 1, 255)};
    RgbImage r = ycbcr_to_rgb(red);
    CHECK(r.r.at(0, 0) == 251);
    CHECK(r.g.at(0, 0) == 3);
    CHECK(r.b.at(0, 0) == 1);
}

TEST_CASE("every grey level maps to (v,128,128) exactly and back") {
    for (int v = 0; v <= 255; ++v) {
        YcbcrImage ycc = rgb_to_ycbcr(pixel(v, v, v));
        REQUIRE(ycc.y.at(0, 0) == v);
        REQUIRE(ycc.cb.at(0, 0) == 128);
        REQUIRE(ycc.cr.at(0, 0) == 128);
        RgbImage back = ycbcr_to_rgb(ycc);
        REQUIRE(back.r.at(0, 0) == v);
        REQUIRE(back.g.at(0, 0) == v);
        REQUIRE(back.b.at(0, 0) == v);
    }
}

TEST_CASE("round trip stays within +-2 per channel for 1000 random pixels") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> pix(0, 255);
    for (int i = 0; i < 1000; ++i) {
        const int r = pix(rng), g = pix(rng), b = pix(rng);
        RgbImage back = ycbcr_to_rgb(rgb_to_ycbcr(pixel(r, g, b)));
        CAPTURE(r);
        CAPTURE(g);
        CAPTURE(b);
        CHECK(std::abs(back.r.at(0, 0) - r) <= 2);
        CHECK(std::abs(back.g.at(0, 0) - g) <= 2);
        CHECK(std::abs(back.b.at(0, 0) - b) <= 2);
    }
}

TEST_CASE("conversion preserves image shape and pixel range") {
    std::mt19937 rng(77);
    const RgbImage img = testutil::random_rgb(rng, 34, 18);
    YcbcrImage ycc = rgb_to_ycbcr(img);
    CHECK(ycc.y.same_shape(img.r));
    CHECK(is_pixel_domain(ycc.y));
    CHECK(is_pixel_domain(ycc.cb));
    CHECK(is_pixel_domain(ycc.cr));
    RgbImage back = ycbcr_to_rgb(ycc);
    CHECK(back.r.same_shape(img.r));
    CHECK(is_pixel_domain(back.r));
    CHECK(is_pixel_domain(back.g));
    CHECK(is_pixel_domain(back.b));
}

}
