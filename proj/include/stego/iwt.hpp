#pragma once

#include "stego/image.hpp"

namespace stego {

/// Single-level 2D decomposition. Quadrant convention: rows are transformed
/// first, columns second; LH is low-pass along rows and high-pass along
/// columns. All four quadrants are (height/2) x (width/2) of the source.
struct SubBands {
    ImagePlane ll, lh, hl, hh;

    friend bool operator==(const SubBands&, const SubBands&) = default;
};

// Reversible 5/3 lifting, integer to integer. 1D step on even-length x:
//   s0[i] = x[2i], d0[i] = x[2i+1]
//   d[i] = d0[i] - floor((s0[i] + s0[i+1]) / 2)
//   s[i] = s0[i] + floor((d[i-1] + d[i] + 2) / 4)
// with whole-sample symmetric extension at the signal edges (the sample
// past the edge mirrors to the one before it, the edge itself is not
// repeated), i.e. s0[n] -> s0[n-1] and d[-1] -> d[0] in subsequence terms.
// inverse_iwt(forward_iwt(p)) == p exactly for every valid plane.

/// Throws OddDimension unless width and height are even (each >= 2).
SubBands forward_iwt(const ImagePlane& p);

/// Exact inverse; throws DimensionMismatch if quadrants disagree in shape.
ImagePlane inverse_iwt(const SubBands& sb);

} // namespace stego
