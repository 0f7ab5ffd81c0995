#pragma once

#include <cstdint>
#include <vector>

#include "stego/image.hpp"

namespace stego {

/// A plane tiled into non-overlapping 2x2 blocks, indexed row-major.
/// Block k covers rows 2*(k / blocks_x)..+1 and cols 2*(k % blocks_x)..+1.
struct BlockGrid {
    ImagePlane source;
    int blocks_x = 0;
    int blocks_y = 0;

    int block_count() const { return blocks_x * blocks_y; }
};

/// Per secret block, the index of the best matched cover block. nc and the
/// secret grid shape are carried so extraction needs no out-of-band info.
struct MatchKey {
    std::vector<uint32_t> entries;
    uint32_t nc = 0;       // cover block count the entries index into
    int blocks_x = 0;      // secret grid shape
    int blocks_y = 0;

    friend bool operator==(const MatchKey&, const MatchKey&) = default;
};

/// Throws OddDimension unless both dimensions are even.
BlockGrid partition_blocks(const ImagePlane& p);

/// For every 2x2 block of secret_ll, finds the cover_ll block with the
/// smallest sum of squared differences (same argmin as RMSE, exact integer
/// arithmetic). Ties break to the smallest cover index, so the result is
/// deterministic regardless of internal parallelism.
/// Throws OddDimension / EmptyCover.
MatchKey build_key(const ImagePlane& cover_ll, const ImagePlane& secret_ll);

/// Rebuilds the approximate secret LL by copying cover blocks per the key.
/// Output is (2*blocks_y) x (2*blocks_x). Throws KeyCoverMismatch if the
/// key's nc disagrees with the cover grid.
ImagePlane reconstruct_ll(const ImagePlane& cover_ll, const MatchKey& key);

/// Inverse IWT of {ll = approx_ll, lh = hl = hh = 0}, clamped to pixels.
ImagePlane rebuild_secret(const ImagePlane& approx_ll);

} // namespace stego
