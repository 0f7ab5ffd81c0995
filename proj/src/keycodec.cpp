#include "stego/keycodec.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>

#include "stego/bits.hpp"

namespace stego {

namespace {

// ---- big-endian field helpers ----

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v >> 24));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

uint16_t get_u16(std::span<const uint8_t> d, size_t off) {
    return static_cast<uint16_t>((d[off] << 8) | d[off + 1]);
}

uint32_t get_u32(std::span<const uint8_t> d, size_t off) {
    return (static_cast<uint32_t>(d[off]) << 24) | (static_cast<uint32_t>(d[off + 1]) << 16) |
           (static_cast<uint32_t>(d[off + 2]) << 8) | d[off + 3];
}

// ---- canonical prefix coding ----

constexpr int kMaxCodeLen = 15; // must fit the 4-bit table nibbles
constexpr size_t kTableBytes = 128;

// Optimal length-limited code lengths via package-merge. Deterministic:
// items are ordered by (weight, lowest symbol), leaves before packages on
// full ties.
std::array<uint8_t, 256> code_lengths(const std::array<uint64_t, 256>& freq) {
    struct Item {
        uint64_t weight;
        int min_symbol;
        bool is_package;
        std::vector<uint8_t> symbols;
    };

    std::array<uint8_t, 256> len{};
    std::vector<Item> leaves;
    for (int s = 0; s < 256; ++s)
        if (freq[s])
            leaves.push_back({freq[s], s, false, {static_cast<uint8_t>(s)}});
    if (leaves.empty())
        return len;
    if (leaves.size() == 1) {
        len[leaves[0].min_symbol] = 1;
        return len;
    }

    auto before = [](const Item& a, const Item& b) {
        if (a.weight != b.weight)
            return a.weight < b.weight;
        if (a.is_package != b.is_package)
            return !a.is_package;
        return a.min_symbol < b.min_symbol;
    };
    std::sort(leaves.begin(), leaves.end(), before);

    std::vector<Item> list = leaves;
    for (int round = 1; round < kMaxCodeLen; ++round) {
        std::vector<Item> packages;
        for (size_t j = 0; j + 1 < list.size(); j += 2) {
            Item p;
            p.weight = list[j].weight + list[j + 1].weight;
            p.min_symbol = std::min(list[j].min_symbol, list[j + 1].min_symbol);
            p.is_package = true;
            p.symbols = list[j].symbols;
            p.symbols.insert(p.symbols.end(), list[j + 1].symbols.begin(),
                             list[j + 1].symbols.end());
            packages.push_back(std::move(p));
        }
        std::vector<Item> merged = leaves;
        merged.insert(merged.end(), std::make_move_iterator(packages.begin()),
                      std::make_move_iterator(packages.end()));
        std::stable_sort(merged.begin(), merged.end(), before);
        list = std::move(merged);
    }

    const size_t take = 2 * (leaves.size() - 1);
    for (size_t i = 0; i < take && i < list.size(); ++i)
        for (uint8_t s : list[i].symbols)
            ++len[s];
    return len;
}

struct CanonicalCodes {
    std::array<uint16_t, 256> code{};
    std::array<uint8_t, 256> len{};
};

CanonicalCodes assign_codes(const std::array<uint8_t, 256>& len) {
    CanonicalCodes cc;
    cc.len = len;
    std::vector<int> order;
    for (int s = 0; s < 256; ++s)
        if (len[s])
            order.push_back(s);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return len[a] != len[b] ? len[a] < len[b] : a < b;
    });
    uint32_t code = 0;
    int prev_len = 0;
    for (int s : order) {
        code <<= (len[s] - prev_len);
        cc.code[s] = static_cast<uint16_t>(code);
        prev_len = len[s];
        ++code;
    }
    return cc;
}

// Canonical decoder tables: per length, the first code and the symbols in
// canonical order.
struct Decoder {
    std::array<uint32_t, kMaxCodeLen + 2> first_code{};
    std::array<uint32_t, kMaxCodeLen + 1> count{};
    std::array<uint32_t, kMaxCodeLen + 1> offset{};
    std::vector<uint8_t> symbols;
};

Decoder build_decoder(const std::array<uint8_t, 256>& len) {
    Decoder d;
    for (int s = 0; s < 256; ++s)
        if (len[s] > kMaxCodeLen)
            throw DecodeError("code length out of range");
        else if (len[s])
            ++d.count[len[s]];
    uint64_t kraft = 0;
    for (int l = 1; l <= kMaxCodeLen; ++l)
        kraft += static_cast<uint64_t>(d.count[l]) << (kMaxCodeLen - l);
    if (kraft > (1ull << kMaxCodeLen))
        throw DecodeError("over-subscribed code table");
    uint32_t code = 0;
    uint32_t sym_base = 0;
    for (int l = 1; l <= kMaxCodeLen; ++l) {
        d.first_code[l] = code;
        d.offset[l] = sym_base;
        code = (code + d.count[l]) << 1;
        sym_base += d.count[l];
    }
    d.symbols.resize(sym_base);
    std::array<uint32_t, kMaxCodeLen + 1> next{};
    for (int s = 0; s < 256; ++s)
        if (len[s])
            d.symbols[d.offset[len[s]] + next[len[s]]++] = static_cast<uint8_t>(s);
    return d;
}

std::array<uint8_t, 256> parse_length_table(std::span<const uint8_t> table) {
    std::array<uint8_t, 256> len{};
    for (size_t i = 0; i < kTableBytes; ++i) {
        len[2 * i] = table[i] >> 4;
        len[2 * i + 1] = table[i] & 0x0F;
    }
    return len;
}

// ---- keystream ----

uint64_t fnv1a64(std::span<const uint8_t> data) {
    uint64_t h = kFnvOffsetBasis;
    for (uint8_t b : data) {
        h ^= b;
        h *= kFnvPrime;
    }
    return h;
}

struct SplitMix64 {
    uint64_t state;

    uint64_t next() {
        state += kSplitMixGamma;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

} // namespace

int index_width_for(uint32_t nc) {
    if (nc <= 1)
        return 1;
    return std::max(1, static_cast<int>(std::bit_width(nc - 1)));
}

namespace {

std::vector<uint8_t> packed_entries(const MatchKey& key) {
    const int w = index_width_for(key.nc);
    BitWriter bw;
    for (uint32_t e : key.entries) {
        if (e >= key.nc)
            throw IndexOutOfRange("key entry >= nc");
        bw.push_bits(e, w);
    }
    return bw.take();
}

std::vector<uint8_t> container_with_body(const MatchKey& key, uint8_t mode,
                                         const std::vector<uint8_t>& body) {
    if (key.nc == 0)
        throw EmptyCover("key has no cover blocks");
    if (key.nc > 0xFFFF || key.blocks_x > 0xFFFF || key.blocks_y > 0xFFFF)
        throw Overflow("container fields limited to 16 bits");
    if (key.blocks_x < 1 || key.blocks_y < 1 ||
        key.entries.size() != static_cast<size_t>(key.blocks_x) * key.blocks_y)
        throw KeyCoverMismatch("key entry count does not match its grid shape");

    std::vector<uint8_t> out;
    out.reserve(kContainerHeaderSize + body.size());
    out.push_back(kContainerMagic0);
    out.push_back(kContainerMagic1);
    out.push_back(kContainerVersion);
    put_u16(out, static_cast<uint16_t>(key.nc));
    put_u16(out, static_cast<uint16_t>(key.blocks_x));
    put_u16(out, static_cast<uint16_t>(key.blocks_y));
    out.push_back(static_cast<uint8_t>(index_width_for(key.nc)));
    out.push_back(mode);
    put_u32(out, static_cast<uint32_t>(body.size()));
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

} // namespace

std::vector<uint8_t> serialize_key(const MatchKey& key) {
    return container_with_body(key, kCompStored, packed_entries(key));
}

std::vector<uint8_t> serialize_key_compressed(const MatchKey& key) {
    const std::vector<uint8_t> raw = packed_entries(key);
    auto [mode, body] = compress_bytes(raw);
    return container_with_body(key, mode, body);
}

MatchKey deserialize_key(std::span<const uint8_t> data) {
    if (data.size() < kContainerHeaderSize)
        throw TruncatedBody("container shorter than its header");
    if (data[0] != kContainerMagic0 || data[1] != kContainerMagic1)
        throw BadMagic("container magic mismatch");
    if (data[2] != kContainerVersion)
        throw BadVersion("unsupported container version");

    MatchKey key;
    key.nc = get_u16(data, 3);
    key.blocks_x = get_u16(data, 5);
    key.blocks_y = get_u16(data, 7);
    const int width = data[9];
    const uint8_t mode = data[10];
    const uint32_t body_len = get_u32(data, 11);

    if (key.nc == 0 || key.blocks_x == 0 || key.blocks_y == 0)
        throw DecodeError("container header describes an empty key");
    if (width != index_width_for(key.nc))
        throw DecodeError("index width disagrees with nc");
    if (mode != kCompStored && mode != kCompPrefixCoded)
        throw DecodeError("unknown compression mode");
    if (data.size() - kContainerHeaderSize < body_len)
        throw TruncatedBody("container body shorter than body_len");
    if (data.size() - kContainerHeaderSize > body_len)
        throw DecodeError("trailing bytes after container body");

    const size_t ns = static_cast<size_t>(key.blocks_x) * key.blocks_y;
    const size_t raw_len = (ns * static_cast<size_t>(width) + 7) / 8;
    const std::vector<uint8_t> raw =
        decompress_bytes(mode, data.subspan(kContainerHeaderSize, body_len), raw_len);

    BitReader br(raw);
    key.entries.resize(ns);
    for (size_t i = 0; i < ns; ++i) {
        const uint32_t e = static_cast<uint32_t>(br.pop_bits(width));
        if (e >= key.nc)
            throw IndexOutOfRange("decoded entry >= nc");
        key.entries[i] = e;
    }
    return key;
}

std::pair<uint8_t, std::vector<uint8_t>> compress_bytes(std::span<const uint8_t> data) {
    if (data.empty())
        return {kCompStored, {}};

    std::array<uint64_t, 256> freq{};
    for (uint8_t b : data)
        ++freq[b];
    const auto len = code_lengths(freq);
    const auto codes = assign_codes(len);

    std::vector<uint8_t> coded;
    coded.reserve(kTableBytes + data.size() / 2);
    for (size_t i = 0; i < kTableBytes; ++i)
        coded.push_back(static_cast<uint8_t>((len[2 * i] << 4) | len[2 * i + 1]));

    BitWriter bw;
    for (uint8_t b : data)
        bw.push_bits(codes.code[b], codes.len[b]);
    const auto& stream = bw.bytes();
    coded.insert(coded.end(), stream.begin(), stream.end());

    if (coded.size() < data.size())
        return {kCompPrefixCoded, std::move(coded)};
    return {kCompStored, std::vector<uint8_t>(data.begin(), data.end())};
}

std::vector<uint8_t> decompress_bytes(uint8_t comp_mode, std::span<const uint8_t> data,
                                      size_t raw_len) {
    if (comp_mode == kCompStored) {
        if (data.size() != raw_len)
            throw TruncatedBody("stored body length mismatch");
        return {data.begin(), data.end()};
    }
    if (comp_mode != kCompPrefixCoded)
        throw DecodeError("unknown compression mode");
    if (data.size() < kTableBytes)
        throw TruncatedBody("coded body shorter than its length table");

    const auto len = parse_length_table(data.first(kTableBytes));
    const Decoder dec = build_decoder(len);

    BitReader br(data.subspan(kTableBytes));
    std::vector<uint8_t> out;
    out.reserve(raw_len);
    while (out.size() < raw_len) {
        uint32_t code = 0;
        int l = 0;
        for (;;) {
            code = (code << 1) | (br.pop() ? 1u : 0u);
            ++l;
            if (l > kMaxCodeLen)
                throw DecodeError("invalid code in stream");
            if (dec.count[l] && code - dec.first_code[l] < dec.count[l]) {
                out.push_back(dec.symbols[dec.offset[l] + (code - dec.first_code[l])]);
                break;
            }
        }
    }
    return out;
}

std::vector<uint8_t> keystream_bytes(const CipherSpec& spec, size_t n) {
    SplitMix64 rng{fnv1a64(spec.passphrase)};
    std::vector<uint8_t> out;
    out.reserve((n + 7) & ~size_t{7});
    while (out.size() < n) {
        uint64_t w = rng.next();
        for (int i = 0; i < 8; ++i) {
            out.push_back(static_cast<uint8_t>(w)); // little-endian emission
            w >>= 8;
        }
    }
    out.resize(n);
    return out;
}

std::vector<uint8_t> apply_keystream(std::span<const uint8_t> data, const CipherSpec& spec) {
    std::vector<uint8_t> out(data.begin(), data.end());
    SplitMix64 rng{fnv1a64(spec.passphrase)};
    size_t i = 0;
    while (i < out.size()) {
        uint64_t w = rng.next();
        for (int j = 0; j < 8 && i < out.size(); ++j, ++i) {
            out[i] ^= static_cast<uint8_t>(w);
            w >>= 8;
        }
    }
    return out;
}

} // namespace stego
