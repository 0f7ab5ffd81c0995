#pragma once

#include <cstdint>
#include <vector>

#include "stego/iwt.hpp"

namespace stego {

/// How a payload bit is written into a coefficient magnitude. Both modes
/// place the bit at bit index 3 (the fourth plane); centered additionally
/// forces the low bits to 100b so the cell tolerates +-3 perturbation,
/// which the YCbCr pipeline needs to survive the color round trip.
enum class EmbedMode { plain, centered };

/// Bit sequence as embedded: a 32-bit big-endian prefix holding the body
/// bit count, then the body bits, MSB-first within each byte.
struct Payload {
    std::vector<uint8_t> bytes; // packed body bits, zero-padded
    uint64_t bit_count = 0;     // number of valid body bits

    friend bool operator==(const Payload&, const Payload&) = default;
};

Payload payload_from_bytes(std::vector<uint8_t> body);

/// One bit per LH/HL/HH coefficient.
uint64_t capacity(const SubBands& sb);

/// Writes 32 prefix bits plus the body over the coefficients in pinned
/// order (LH raster, then HL, then HH), sign preserved, LL untouched.
/// Throws PayloadTooLarge if 32 + bit_count exceeds capacity.
SubBands embed_payload(const SubBands& sb, const Payload& payload, EmbedMode mode);

/// Reads bit 3 of each magnitude in the same order; the first 32 bits give
/// the body length. Throws BadLengthPrefix if that exceeds what is left.
Payload extract_payload(const SubBands& sb, EmbedMode mode);

/// The bit-write primitive, exposed for tests: returns the coefficient
/// after storing b at bit 3 of its magnitude.
int32_t embed_bit(int32_t coeff, bool bit, EmbedMode mode);

} // namespace stego
