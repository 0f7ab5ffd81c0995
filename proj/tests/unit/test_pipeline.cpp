#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string>

#include "stego/colorspace.hpp"
#include "stego/image_io.hpp"
#include "stego/iwt.hpp"
#include "stego/metrics.hpp"
#include "stego/pipeline.hpp"
#include "../testutil.hpp"

using namespace stego;
using testutil::TempDir;

namespace {

RgbImage corpus_cover(const char* name) {
    return load_rgb((testutil::assets_dir() / name).string());
}

ImagePlane corpus_secret(const char* name) {
    return load_grey((testutil::assets_dir() / name).string());
}

EmbedRequest corpus_request(Domain domain, const std::string& pass) {
    EmbedRequest req;
    req.cover = corpus_cover("cover_baboon.bmp");
    req.secret1 = corpus_secret("secret_globe.pgm");
    req.secret2 = corpus_secret("secret_ball.pgm");
    req.passphrase = CipherSpec(pass);
    req.domain = domain;
    return req;
}

const ImagePlane& plane_of(const RgbImage& img, Channel c) {
    switch (c) {
    case Channel::red: return img.r;
    case Channel::green: return img.g;
    default: return img.b;
    }
}

MatchKey expected_key(const ImagePlane& carrier, const ImagePlane& secret) {
    return build_key(forward_iwt(carrier).ll, forward_iwt(secret).ll);
}

} // namespace

TEST_SUITE("pipeline") {

TEST_CASE("rgb embedding leaves the approximation bands and the third channel alone") {
    const EmbedRequest req = corpus_request(Domain::rgb, "unit pass");
    const RgbImage stego = embed_rgb(req);

    CHECK(stego.r == req.cover.r); // red is not a carrier by default
    CHECK(forward_iwt(stego.g).ll == forward_iwt(req.cover.g).ll);
    CHECK(forward_iwt(stego.b).ll == forward_iwt(req.cover.b).ll);
    CHECK(is_pixel_domain(stego.g));
    CHECK(is_pixel_domain(stego.b));
}

TEST_CASE("rgb extraction recovers both keys bit for bit") {
    const EmbedRequest req = corpus_request(Domain::rgb, "unit pass");
    const RgbImage stego = embed_rgb(req);
    const ExtractResult got = extract_rgb(stego, req.passphrase);

    CHECK(got.key1 == expected_key(req.cover.g, req.secret1));
    CHECK(got.key2 == expected_key(req.cover.b, req.secret2));
    CHECK(got.secret1.width == 128);
    CHECK(got.secret2.height == 128);
}

TEST_CASE("rgb extraction equals the offline rebuild from cover and key") {
    const EmbedRequest req = corpus_request(Domain::rgb, "offline");
    const RgbImage stego = embed_rgb(req);
    const ExtractResult got = extract_rgb(stego, req.passphrase);

    const ImagePlane cover_ll = forward_iwt(req.cover.g).ll;
    const MatchKey k1 = expected_key(req.cover.g, req.secret1);
    CHECK(got.secret1 == rebuild_secret(reconstruct_ll(cover_ll, k1)));
}

TEST_CASE("alternate carrier pairs work and disagreeing pairs fail to decode") {
    EmbedRequest req = corpus_request(Domain::rgb, "channels");
    req.channels = ChannelPair{Channel::red, Channel::green};
    const RgbImage stego = embed_rgb(req);

    CHECK(stego.b == req.cover.b);
    const ExtractResult got = extract_rgb(stego, req.passphrase, req.channels);
    CHECK(got.key1 == expected_key(req.cover.r, req.secret1));
    CHECK(got.key2 == expected_key(req.cover.g, req.secret2));

    CHECK_THROWS_AS(extract_rgb(stego, req.passphrase), DecodeError); // default gb
}

TEST_CASE("identical channel selectors are rejected") {
    EmbedRequest req = corpus_request(Domain::rgb, "dup");
    req.channels = ChannelPair{Channel::blue, Channel::blue};
    CHECK_THROWS_AS(embed_rgb(req), RangeError);
}

TEST_CASE("a wrong passphrase fails loudly or wrongly, never silently right") {
    const EmbedRequest req = corpus_request(Domain::rgb, "right phrase");
    const RgbImage stego = embed_rgb(req);
    CHECK_THROWS_AS(extract_rgb(stego, CipherSpec("wrong phrase")), DecodeError);
}

TEST_CASE("ycbcr embedding round trips keys through the color conversion") {
    const EmbedRequest req = corpus_request(Domain::ycbcr, "chroma pass");
    const RgbImage stego = embed_ycbcr(req);
    const ExtractResult got = extract_ycbcr(stego, req.passphrase);

    const YcbcrImage ycc = rgb_to_ycbcr(req.cover);
    CHECK(got.key1 == expected_key(ycc.cb, req.secret1));
    CHECK(got.key2 == expected_key(ycc.cr, req.secret2));
}

TEST_CASE("ycbcr embedding perturbs luminance only through rounding") {
    const EmbedRequest req = corpus_request(Domain::ycbcr, "luma check");
    const RgbImage stego = embed_ycbcr(req);
    const YcbcrImage before = rgb_to_ycbcr(req.cover);
    const YcbcrImage after = rgb_to_ycbcr(stego);
    int32_t max_dy = 0;
    for (size_t i = 0; i < before.y.samples.size(); ++i)
        max_dy = std::max(max_dy, std::abs(after.y.samples[i] - before.y.samples[i]));
    CHECK(max_dy <= 2);
}

TEST_CASE("a grey cover embeds on constant chroma and still round trips keys") {
    EmbedRequest req;
    req.cover = RgbImage{ImagePlane(256, 256), ImagePlane(256, 256), ImagePlane(256, 256)};
    for (int y = 0; y < 256; ++y)
        for (int x = 0; x < 256; ++x) {
            const int v = (x + y) / 2;
            req.cover.r.at(y, x) = v;
            req.cover.g.at(y, x) = v;
            req.cover.b.at(y, x) = v;
        }
    req.secret1 = corpus_secret("secret_globe.pgm");
    req.secret2 = corpus_secret("secret_ball.pgm");
    req.passphrase = CipherSpec("grey cover");
    req.domain = Domain::ycbcr;

    const YcbcrImage ycc = rgb_to_ycbcr(req.cover);
    CHECK(ycc.cb == ImagePlane(256, 256, 128));
    CHECK(ycc.cr == ImagePlane(256, 256, 128));

    const RgbImage stego = embed_ycbcr(req);
    const ExtractResult got = extract_ycbcr(stego, req.passphrase);
    CHECK(got.key1 == expected_key(ycc.cb, req.secret1));
    CHECK(got.key2 == expected_key(ycc.cr, req.secret2));
}

TEST_CASE("stego images survive file save and load in both domains") {
    TempDir tmp;
    for (Domain d : {Domain::rgb, Domain::ycbcr}) {
        const EmbedRequest req = corpus_request(d, "file trip");
        const RgbImage stego = d == Domain::rgb ? embed_rgb(req) : embed_ycbcr(req);
        const std::string path = (tmp / (std::string(domain_name(d)) + ".bmp")).string();
        save_rgb(path, stego);
        const RgbImage loaded = load_rgb(path);
        REQUIRE(loaded == stego);

        const ExtractResult mem = d == Domain::rgb
                                      ? extract_rgb(stego, req.passphrase)
                                      : extract_ycbcr(stego, req.passphrase);
        const ExtractResult file = d == Domain::rgb
                                       ? extract_rgb(loaded, req.passphrase)
                                       : extract_ycbcr(loaded, req.passphrase);
        CHECK(file.key1 == mem.key1);
        CHECK(file.key2 == mem.key2);
        CHECK(file.secret1 == mem.secret1);
        CHECK(file.secret2 == mem.secret2);
    }
}

TEST_CASE("keys round trip for 20 random passphrases") {
    std::mt19937 rng(515151);
    EmbedRequest req = corpus_request(Domain::rgb, "");
    const MatchKey want1 = expected_key(req.cover.g, req.secret1);
    const MatchKey want2 = expected_key(req.cover.b, req.secret2);
    for (int i = 0; i < 20; ++i) {
        std::string pass;
        std::uniform_int_distribution<int> len(0, 24);
        std::uniform_int_distribution<int> ch(32, 126);
        const int n = len(rng);
        for (int k = 0; k < n; ++k)
            pass.push_back(static_cast<char>(ch(rng)));
        req.passphrase = CipherSpec(pass);
        const ExtractResult got = extract_rgb(embed_rgb(req), req.passphrase);
        REQUIRE(got.key1 == want1);
        REQUIRE(got.key2 == want2);
    }
}

TEST_CASE("payload construction is deterministic and passphrase-sensitive") {
    const MatchKey key{{1, 2, 3, 0}, 16, 2, 2};
    const Payload a = make_key_payload(key, CipherSpec("same"));
    const Payload b = make_key_payload(key, CipherSpec("same"));
    const Payload c = make_key_payload(key, CipherSpec("other"));
    CHECK(a == b);
    CHECK(a.bit_count == c.bit_count);
    CHECK(a.bytes != c.bytes);
}

TEST_CASE("an oversized secret exceeds carrier capacity") {
    std::mt19937 rng(88);
    EmbedRequest req = corpus_request(Domain::rgb, "too big");
    req.secret1 = testutil::random_plane(rng, 512, 512);
    CHECK_THROWS_AS(embed_rgb(req), CapacityExceeded);
}

TEST_CASE("odd-sized inputs are rejected up front") {
    EmbedRequest req = corpus_request(Domain::rgb, "odd");
    req.secret1 = ImagePlane(127, 128, 5);
    CHECK_THROWS_AS(embed_rgb(req), OddDimension);
}

TEST_CASE("domain names") {
    CHECK(std::string(domain_name(Domain::rgb)) == "rgb");
    CHECK(std::string(domain_name(Domain::ycbcr)) == "ycbcr");
}

}
