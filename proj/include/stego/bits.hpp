#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stego/errors.hpp"

namespace stego {

/// Append-only bit sink, MSB-first within each byte, zero-padded on finish.
class BitWriter {
public:
    void push(bool bit) {
        if (used_ == 0)
            bytes_.push_back(0);
        if (bit)
            bytes_.back() |= static_cast<uint8_t>(0x80u >> used_);
        used_ = (used_ + 1) & 7;
    }

    void push_bits(uint64_t value, int width) {
        for (int i = width - 1; i >= 0; --i)
            push((value >> i) & 1u);
    }

    uint64_t bit_count() const { return (bytes_.size() * 8) - ((8 - used_) & 7); }
    const std::vector<uint8_t>& bytes() const { return bytes_; }
    std::vector<uint8_t> take() { return std::move(bytes_); }

private:
    std::vector<uint8_t> bytes_;
    int used_ = 0; // bits filled in the last byte, 0 meaning byte boundary
};

/// MSB-first bit cursor over a byte span.
class BitReader {
public:
    explicit BitReader(std::span<const uint8_t> data) : data_(data) {}

    uint64_t remaining() const { return data_.size() * 8 - pos_; }

    bool pop() {
        if (pos_ >= data_.size() * 8)
            throw TruncatedBody("bit stream exhausted");
        const bool b = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
        ++pos_;
        return b;
    }

    uint64_t pop_bits(int width) {
        uint64_t v = 0;
        for (int i = 0; i < width; ++i)
            v = (v << 1) | (pop() ? 1u : 0u);
        return v;
    }

private:
    std::span<const uint8_t> data_;
    uint64_t pos_ = 0;
};

} // namespace stego
