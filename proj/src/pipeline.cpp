#include "stego/pipeline.hpp"

#include <string>
#include <utility>

#include "stego/errors.hpp"
#include "stego/iwt.hpp"

namespace stego {
namespace {

ImagePlane& plane_for(RgbImage& img, Channel c) {
    switch (c) {
    case Channel::red: return img.r;
    case Channel::green: return img.g;
    default: return img.b;
    }
}

const ImagePlane& plane_for(const RgbImage& img, Channel c) {
    switch (c) {
    case Channel::red: return img.r;
    case Channel::green: return img.g;
    default: return img.b;
    }
}

struct CarrierEmbed {
    MatchKey key;
    Payload payload;
    SubBands bands; // carrier sub-bands with the payload written in
};

// Builds the key of secret-vs-carrier, wraps it into the encrypted payload
// and writes it into the carrier's high-frequency sub-bands.
CarrierEmbed embed_into_carrier(const ImagePlane& carrier, const ImagePlane& secret,
                                const CipherSpec& spec, EmbedMode mode) {
    SubBands carrier_bands = forward_iwt(carrier);
    SubBands secret_bands = forward_iwt(secret);

    // A secret may not bring more LL blocks than the carrier offers, no
    // matter how small its key happens to compress.
    const int64_t nc = int64_t(carrier_bands.ll.width / 2) * (carrier_bands.ll.height / 2);
    const int64_t ns = int64_t(secret_bands.ll.width / 2) * (secret_bands.ll.height / 2);
    if (ns > nc) {
        throw CapacityExceeded("secret has " + std::to_string(ns) +
                               " approximation blocks but the carrier holds only " +
                               std::to_string(nc));
    }

    CarrierEmbed out;
    out.key = build_key(carrier_bands.ll, secret_bands.ll);
    out.payload = make_key_payload(out.key, spec);

    const uint64_t cap = capacity(carrier_bands);
    if (32 + out.payload.bit_count > cap) {
        throw CapacityExceeded("key payload needs " +
                               std::to_string(32 + out.payload.bit_count) +
                               " bits but the carrier holds only " +
                               std::to_string(cap));
    }
    out.bands = embed_payload(carrier_bands, out.payload, mode);
    return out;
}

bool payload_survives(const SubBands& bands, const Payload& expected, EmbedMode mode) {
    try {
        return extract_payload(bands, mode) == expected;
    } catch (const DecodeError&) {
        return false; // corrupted length prefix counts as a failed round trip
    }
}

MatchKey payload_to_key(const Payload& payload, const CipherSpec& spec) {
    if (payload.bit_count % 8 != 0) {
        throw DecodeError("embedded payload of " + std::to_string(payload.bit_count) +
                          " bits is not a whole number of bytes");
    }
    return deserialize_key(apply_keystream(payload.bytes, spec));
}

ExtractResult extract_from_carriers(const ImagePlane& c1, const ImagePlane& c2,
                                    const CipherSpec& spec, EmbedMode mode) {
    SubBands b1 = forward_iwt(c1);
    SubBands b2 = forward_iwt(c2);

    ExtractResult out;
    out.key1 = payload_to_key(extract_payload(b1, mode), spec);
    out.key2 = payload_to_key(extract_payload(b2, mode), spec);
    out.secret1 = rebuild_secret(reconstruct_ll(b1.ll, out.key1));
    out.secret2 = rebuild_secret(reconstruct_ll(b2.ll, out.key2));
    return out;
}

} // namespace

const char* domain_name(Domain d) {
    return d == Domain::rgb ? "rgb" : "ycbcr";
}

Payload make_key_payload(const MatchKey& key, const CipherSpec& spec) {
    std::vector<uint8_t> container = serialize_key_compressed(key);
    return payload_from_bytes(apply_keystream(container, spec));
}

RgbImage embed_rgb(const EmbedRequest& req) {
    validate_channel_pair(req.channels);

    CarrierEmbed e1 = embed_into_carrier(plane_for(req.cover, req.channels.first),
                                         req.secret1, req.passphrase, EmbedMode::plain);
    CarrierEmbed e2 = embed_into_carrier(plane_for(req.cover, req.channels.second),
                                         req.secret2, req.passphrase, EmbedMode::plain);

    ImagePlane p1 = clamp_to_pixel(inverse_iwt(e1.bands));
    ImagePlane p2 = clamp_to_pixel(inverse_iwt(e2.bands));

    // The transform is fully reversible, so as long as no sample needed
    // clamping the first verification passes and this loop runs once. With a
    // near-saturated cover the clamp can flip payload bits, in which case we
    // re-embed on top of the clamped plane's coefficients until the payload
    // survives the pixel-domain round trip.
    for (int iter = 0; iter < kMaxRoundTripIterations; ++iter) {
        SubBands r1 = forward_iwt(p1);
        SubBands r2 = forward_iwt(p2);
        if (payload_survives(r1, e1.payload, EmbedMode::plain) &&
            payload_survives(r2, e2.payload, EmbedMode::plain)) {
            RgbImage stego = req.cover;
            plane_for(stego, req.channels.first) = std::move(p1);
            plane_for(stego, req.channels.second) = std::move(p2);
            return stego;
        }
        p1 = clamp_to_pixel(inverse_iwt(embed_payload(r1, e1.payload, EmbedMode::plain)));
        p2 = clamp_to_pixel(inverse_iwt(embed_payload(r2, e2.payload, EmbedMode::plain)));
    }
    throw RoundTripUnstable("rgb embed kept corrupting its payload after " +
                            std::to_string(kMaxRoundTripIterations) +
                            " re-embed attempts (cover too close to saturation)");
}

ExtractResult extract_rgb(const RgbImage& stego, const CipherSpec& passphrase,
                          const ChannelPair& channels) {
    validate_channel_pair(channels);
    return extract_from_carriers(plane_for(stego, channels.first),
                                 plane_for(stego, channels.second),
                                 passphrase, EmbedMode::plain);
}

RgbImage embed_ycbcr(const EmbedRequest& req) {
    YcbcrImage ycc = rgb_to_ycbcr(req.cover);

    CarrierEmbed e1 = embed_into_carrier(ycc.cb, req.secret1, req.passphrase,
                                         EmbedMode::centered);
    CarrierEmbed e2 = embed_into_carrier(ycc.cr, req.secret2, req.passphrase,
                                         EmbedMode::centered);

    SubBands b1 = std::move(e1.bands);
    SubBands b2 = std::move(e2.bands);

    // Converting to RGB and back perturbs the chroma samples by a couple of
    // levels, which the centered cells absorb, but the coefficient drift can
    // occasionally cross a cell boundary. Verify the full round trip as the
    // extractor will see it and re-embed on the drifted coefficients until
    // both payloads survive. The luma plane is the untouched cover luma on
    // every pass.
    for (int iter = 0; iter < kMaxRoundTripIterations; ++iter) {
        YcbcrImage carrier;
        carrier.y = ycc.y;
        carrier.cb = clamp_to_pixel(inverse_iwt(b1));
        carrier.cr = clamp_to_pixel(inverse_iwt(b2));
        RgbImage stego = ycbcr_to_rgb(carrier);

        YcbcrImage seen = rgb_to_ycbcr(stego);
        SubBands r1 = forward_iwt(seen.cb);
        SubBands r2 = forward_iwt(seen.cr);
        if (payload_survives(r1, e1.payload, EmbedMode::centered) &&
            payload_survives(r2, e2.payload, EmbedMode::centered)) {
            return stego;
        }
        b1 = embed_payload(r1, e1.payload, EmbedMode::centered);
        b2 = embed_payload(r2, e2.payload, EmbedMode::centered);
    }
    throw RoundTripUnstable("ycbcr embed kept corrupting its payload after " +
                            std::to_string(kMaxRoundTripIterations) +
                            " re-embed attempts");
}

ExtractResult extract_ycbcr(const RgbImage& stego, const CipherSpec& passphrase) {
    YcbcrImage ycc = rgb_to_ycbcr(stego);
    return extract_from_carriers(ycc.cb, ycc.cr, passphrase, EmbedMode::centered);
}

} // namespace stego
