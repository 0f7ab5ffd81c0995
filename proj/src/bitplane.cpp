#include "stego/bitplane.hpp"

#include <array>
#include <cstdlib>

#include "stego/errors.hpp"

namespace stego {
namespace {

// Reads bit p of the logical stream "32-bit big-endian length prefix, then
// payload body bytes MSB-first".
bool stream_bit(const Payload& payload, uint64_t p) {
    if (p < 32) {
        return (static_cast<uint32_t>(payload.bit_count) >> (31 - p)) & 1u;
    }
    const uint64_t q = p - 32;
    return (payload.bytes[q >> 3] >> (7 - (q & 7))) & 1u;
}

} // namespace

Payload payload_from_bytes(std::vector<uint8_t> body) {
    Payload p;
    p.bit_count = static_cast<uint64_t>(body.size()) * 8;
    p.bytes = std::move(body);
    return p;
}

uint64_t capacity(const SubBands& sb) {
    return static_cast<uint64_t>(sb.lh.samples.size()) + sb.hl.samples.size() +
           sb.hh.samples.size();
}

int32_t embed_bit(int32_t coeff, bool bit, EmbedMode mode) {
    const bool negative = coeff < 0;
    uint32_t mag = static_cast<uint32_t>(negative ? -static_cast<int64_t>(coeff)
                                                  : coeff);
    if (mode == EmbedMode::plain) {
        mag = (mag & ~8u) | (bit ? 8u : 0u);
    } else {
        mag = (mag & ~15u) | (bit ? 8u : 0u) | 4u;
    }
    const int32_t out = static_cast<int32_t>(mag);
    return negative ? -out : out;
}

SubBands embed_payload(const SubBands& sb, const Payload& payload, EmbedMode mode) {
    const uint64_t cap = capacity(sb);
    if (payload.bit_count > 0xFFFFFFFFull || 32 + payload.bit_count > cap) {
        throw PayloadTooLarge("payload of " + std::to_string(payload.bit_count) +
                              " bits plus 32-bit prefix exceeds capacity of " +
                              std::to_string(cap) + " bits");
    }

    SubBands out = sb;
    std::array<ImagePlane*, 3> order = {&out.lh, &out.hl, &out.hh};
    const uint64_t total_bits = 32 + payload.bit_count;

    uint64_t base = 0;
    for (ImagePlane* band : order) {
        const uint64_t n = band->samples.size();
        const uint64_t used = base < total_bits
                                  ? std::min<uint64_t>(n, total_bits - base)
                                  : 0;
        int32_t* coeffs = band->samples.data();
#pragma omp parallel for schedule(static)
        for (int64_t i = 0; i < static_cast<int64_t>(used); ++i) {
            coeffs[i] = embed_bit(coeffs[i], stream_bit(payload, base + i), mode);
        }
        base += n;
    }
    return out;
}

Payload extract_payload(const SubBands& sb, EmbedMode /*mode*/) {
    const uint64_t cap = capacity(sb);
    if (cap < 32) {
        throw BadLengthPrefix("sub-bands too small to hold a length prefix");
    }

    std::array<const ImagePlane*, 3> order = {&sb.lh, &sb.hl, &sb.hh};
    auto bit_at = [&](uint64_t p) -> bool {
        for (const ImagePlane* band : order) {
            const uint64_t n = band->samples.size();
            if (p < n) {
                const int32_t c = band->samples[p];
                const uint32_t mag = static_cast<uint32_t>(
                    c < 0 ? -static_cast<int64_t>(c) : c);
                return (mag >> 3) & 1u;
            }
            p -= n;
        }
        throw RangeError("payload bit index out of range");
    };

    uint32_t declared = 0;
    for (int i = 0; i < 32; ++i) {
        declared = (declared << 1) | (bit_at(i) ? 1u : 0u);
    }
    if (declared > cap - 32) {
        throw BadLengthPrefix("declared payload of " + std::to_string(declared) +
                              " bits exceeds capacity of " +
                              std::to_string(cap - 32));
    }

    Payload out;
    out.bit_count = declared;
    out.bytes.assign((declared + 7) / 8, 0);
    uint8_t* bytes = out.bytes.data();
#pragma omp parallel for schedule(static)
    for (int64_t byte = 0; byte < static_cast<int64_t>(out.bytes.size()); ++byte) {
        uint8_t acc = 0;
        const uint64_t first = static_cast<uint64_t>(byte) * 8;
        const uint64_t last = std::min<uint64_t>(first + 8, declared);
        for (uint64_t q = first; q < last; ++q) {
            if (bit_at(32 + q)) acc |= static_cast<uint8_t>(0x80u >> (q - first));
        }
        bytes[byte] = acc;
    }
    return out;
}

} // namespace stego
