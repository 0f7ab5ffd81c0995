#include "stego/blockmatch.hpp"

#include <cstdint>
#include <limits>

#include "stego/iwt.hpp"

namespace stego {

namespace {

// The four samples of 2x2 block k of a partitioned plane.
struct Block {
    int32_t v[4];
};

inline Block block_at(const ImagePlane& p, int blocks_x, int k) {
    const int r = 2 * (k / blocks_x);
    const int c = 2 * (k % blocks_x);
    return Block{{p.at(r, c), p.at(r, c + 1), p.at(r + 1, c), p.at(r + 1, c + 1)}};
}

inline int64_t block_ssd(const Block& a, const Block& b) {
    int64_t s = 0;
    for (int i = 0; i < 4; ++i) {
        const int64_t d = static_cast<int64_t>(a.v[i]) - b.v[i];
        s += d * d;
    }
    return s;
}

} // namespace

BlockGrid partition_blocks(const ImagePlane& p) {
    // An empty plane tiles into an empty grid; only odd dimensions are
    // malformed here (build_key separately rejects empty covers).
    if (p.width % 2 || p.height % 2)
        throw OddDimension("partition needs even dimensions");
    return BlockGrid{p, p.width / 2, p.height / 2};
}

MatchKey build_key(const ImagePlane& cover_ll, const ImagePlane& secret_ll) {
    const BlockGrid cover = partition_blocks(cover_ll);
    const BlockGrid secret = partition_blocks(secret_ll);
    const int nc = cover.block_count();
    const int ns = secret.block_count();
    if (nc == 0)
        throw EmptyCover("cover grid has no blocks");

    MatchKey key;
    key.nc = static_cast<uint32_t>(nc);
    key.blocks_x = secret.blocks_x;
    key.blocks_y = secret.blocks_y;
    key.entries.resize(ns);

    // Exhaustive search; ties go to the smallest cover index, so parallel
    // and sequential runs agree bit for bit.
#pragma omp parallel for schedule(static)
    for (int i = 0; i < ns; ++i) {
        const Block target = block_at(secret_ll, secret.blocks_x, i);
        int64_t best = std::numeric_limits<int64_t>::max();
        int best_k = 0;
        for (int k = 0; k < nc; ++k) {
            const int64_t d = block_ssd(target, block_at(cover_ll, cover.blocks_x, k));
            if (d < best) {
                best = d;
                best_k = k;
            }
        }
        key.entries[i] = static_cast<uint32_t>(best_k);
    }
    return key;
}

ImagePlane reconstruct_ll(const ImagePlane& cover_ll, const MatchKey& key) {
    const BlockGrid cover = partition_blocks(cover_ll);
    if (key.nc != static_cast<uint32_t>(cover.block_count()))
        throw KeyCoverMismatch("key nc does not match the cover grid");
    if (key.entries.size() != static_cast<size_t>(key.blocks_x) * key.blocks_y)
        throw KeyCoverMismatch("key entry count does not match its grid shape");

    ImagePlane out(2 * key.blocks_x, 2 * key.blocks_y);
    for (size_t i = 0; i < key.entries.size(); ++i) {
        const uint32_t k = key.entries[i];
        if (k >= key.nc)
            throw IndexOutOfRange("key entry indexes past the cover grid");
        const Block b = block_at(cover_ll, cover.blocks_x, static_cast<int>(k));
        const int r = 2 * (static_cast<int>(i) / key.blocks_x);
        const int c = 2 * (static_cast<int>(i) % key.blocks_x);
        out.at(r, c) = b.v[0];
        out.at(r, c + 1) = b.v[1];
        out.at(r + 1, c) = b.v[2];
        out.at(r + 1, c + 1) = b.v[3];
    }
    return out;
}

ImagePlane rebuild_secret(const ImagePlane& approx_ll) {
    SubBands sb;
    sb.ll = approx_ll;
    sb.lh = ImagePlane(approx_ll.width, approx_ll.height);
    sb.hl = ImagePlane(approx_ll.width, approx_ll.height);
    sb.hh = ImagePlane(approx_ll.width, approx_ll.height);
    return clamp_to_pixel(inverse_iwt(sb));
}

} // namespace stego
