#pragma once

#include <string>

#include "stego/bitplane.hpp"
#include "stego/blockmatch.hpp"
#include "stego/colorspace.hpp"
#include "stego/image.hpp"
#include "stego/keycodec.hpp"

namespace stego {

enum class Domain { rgb, ycbcr };

const char* domain_name(Domain d);

struct EmbedRequest {
    RgbImage cover;
    ImagePlane secret1;
    ImagePlane secret2;
    CipherSpec passphrase;
    Domain domain = Domain::rgb;
    ChannelPair channels{}; // rgb domain only; default green+blue
};

struct ExtractResult {
    ImagePlane secret1;
    ImagePlane secret2;
    MatchKey key1;
    MatchKey key2;
};

/// Builds the key for one carrier/secret pair and turns it into the
/// embeddable payload (compressed container, keystream-encrypted).
Payload make_key_payload(const MatchKey& key, const CipherSpec& spec);

/// Hides both secrets' keys in the chosen RGB channels (bit-plane writes in
/// the high-frequency sub-bands, plain mode). The third channel is returned
/// untouched. Throws CapacityExceeded / OddDimension; RoundTripUnstable in
/// the rare case that pixel clamping after the inverse transform keeps
/// corrupting the payload (near-saturated covers).
RgbImage embed_rgb(const EmbedRequest& req);

/// Recovers both keys and the approximate secrets from an RGB-domain stego
/// image. Throws DecodeError subtypes on wrong passphrase, wrong channels
/// or non-stego input.
ExtractResult extract_rgb(const RgbImage& stego, const CipherSpec& passphrase,
                          const ChannelPair& channels = {});

/// YCbCr-domain variant: carriers are Cb and Cr, centered mode, and the
/// result is converted back to RGB. A bounded verification loop re-embeds
/// until the payload survives the RGB round trip; RoundTripUnstable after
/// 8 iterations fails the embed rather than corrupt the keys.
RgbImage embed_ycbcr(const EmbedRequest& req);

ExtractResult extract_ycbcr(const RgbImage& stego, const CipherSpec& passphrase);

/// Maximum re-embed iterations for the verification loop.
inline constexpr int kMaxRoundTripIterations = 8;

} // namespace stego
