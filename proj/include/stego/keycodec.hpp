#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "stego/blockmatch.hpp"

namespace stego {

// Container byte layout (all multi-byte fields big-endian):
//   magic      2 bytes, 0x53 0x4B
//   version    1 byte,  1
//   nc         u16
//   blocks_x   u16   (secret grid shape)
//   blocks_y   u16
//   index_width u8 = max(1, ceil(log2(nc)))
//   comp_mode  u8   (0 = stored, 1 = entropy-coded)
//   body_len   u32  (byte count of body)
//   body       stored: indices packed MSB-first at index_width bits each,
//              zero-padded to a byte boundary; coded: 128-byte table of 256
//              4-bit code lengths followed by the canonical prefix coded
//              stream.
inline constexpr uint8_t kContainerMagic0 = 0x53; // 'S'
inline constexpr uint8_t kContainerMagic1 = 0x4B; // 'K'
inline constexpr uint8_t kContainerVersion = 1;
inline constexpr size_t kContainerHeaderSize = 15;
inline constexpr uint8_t kCompStored = 0;
inline constexpr uint8_t kCompPrefixCoded = 1;

// Keystream constants: seed is the 64-bit FNV-1a hash of the passphrase,
// words come from the SplitMix64 sequence, emitted as 8 little-endian bytes
// each. Deterministic obfuscation, not a vetted cipher.
inline constexpr uint64_t kFnvOffsetBasis = 0xCBF29CE484222325ull;
inline constexpr uint64_t kFnvPrime = 0x100000001B3ull;
inline constexpr uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ull;

struct CipherSpec {
    std::vector<uint8_t> passphrase;

    CipherSpec() = default;
    explicit CipherSpec(std::string_view s) : passphrase(s.begin(), s.end()) {}
};

/// index_width for a given cover block count (>= 1 bit even for nc == 1).
int index_width_for(uint32_t nc);

/// Stored-mode container for the key. Throws Overflow if nc or a grid
/// dimension exceeds 65535.
std::vector<uint8_t> serialize_key(const MatchKey& key);

/// Same header, but the body is entropy-coded when that is strictly smaller.
std::vector<uint8_t> serialize_key_compressed(const MatchKey& key);

/// Parses either mode back into a key. Throws BadMagic / BadVersion /
/// TruncatedBody / IndexOutOfRange.
MatchKey deserialize_key(std::span<const uint8_t> data);

/// Order-0 canonical prefix coding over byte symbols. Returns mode 1 with
/// {128-byte length table, coded stream} when strictly smaller than the
/// input, otherwise mode 0 with the input unchanged.
std::pair<uint8_t, std::vector<uint8_t>> compress_bytes(std::span<const uint8_t> data);

/// Inverse; raw_len is the decoded byte count (known from the container
/// header). Throws TruncatedBody / DecodeError on malformed input.
std::vector<uint8_t> decompress_bytes(uint8_t comp_mode, std::span<const uint8_t> data,
                                      size_t raw_len);

/// XOR with the passphrase keystream; applying it twice restores the input.
std::vector<uint8_t> apply_keystream(std::span<const uint8_t> data, const CipherSpec& spec);

/// First n keystream bytes for a passphrase (exposed for golden tests).
std::vector<uint8_t> keystream_bytes(const CipherSpec& spec, size_t n);

} // namespace stego
