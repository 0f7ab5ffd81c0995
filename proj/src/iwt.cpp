#include "stego/iwt.hpp"

#include <vector>

namespace stego {

namespace {

// C++20 guarantees arithmetic right shift, which is the floor division the
// lifting steps need for negative coefficients.

// In-place split of x (length 2n) into s (first n) and d (last n) of out.
void lift_forward(const int32_t* x, int32_t* out, int n) {
    int32_t* s = out;
    int32_t* d = out + n;
    // predict: d[i] = x[2i+1] - floor((s0[i] + s0[i+1]) / 2)
    for (int i = 0; i < n; ++i) {
        const int32_t right = (i + 1 < n) ? x[2 * (i + 1)] : x[2 * (n - 1)];
        d[i] = x[2 * i + 1] - ((x[2 * i] + right) >> 1);
    }
    // update: s[i] = x[2i] + floor((d[i-1] + d[i] + 2) / 4)
    for (int i = 0; i < n; ++i) {
        const int32_t left = (i > 0) ? d[i - 1] : d[0];
        s[i] = x[2 * i] + ((left + d[i] + 2) >> 2);
    }
}

void lift_inverse(const int32_t* s, const int32_t* d, int32_t* x, int n) {
    // undo update
    for (int i = 0; i < n; ++i) {
        const int32_t left = (i > 0) ? d[i - 1] : d[0];
        x[2 * i] = s[i] - ((left + d[i] + 2) >> 2);
    }
    // undo predict
    for (int i = 0; i < n; ++i) {
        const int32_t right = (i + 1 < n) ? x[2 * (i + 1)] : x[2 * (n - 1)];
        x[2 * i + 1] = d[i] + ((x[2 * i] + right) >> 1);
    }
}

void require_even(const ImagePlane& p) {
    if (p.width < 2 || p.height < 2 || p.width % 2 || p.height % 2)
        throw OddDimension("transform needs even dimensions >= 2");
}

} // namespace

SubBands forward_iwt(const ImagePlane& p) {
    require_even(p);
    const int w = p.width, h = p.height;
    const int hw = w / 2, hh = h / 2;

    // rows: left half low-pass, right half high-pass
    ImagePlane rowpass(w, h);
#pragma omp parallel for schedule(static)
    for (int r = 0; r < h; ++r)
        lift_forward(&p.samples[static_cast<size_t>(r) * w], &rowpass.at(r, 0), hw);

    // columns of the row result; top half low-pass, bottom half high-pass
    ImagePlane colpass(w, h);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < w; ++c) {
        std::vector<int32_t> col(h), out(h);
        for (int r = 0; r < h; ++r)
            col[r] = rowpass.at(r, c);
        lift_forward(col.data(), out.data(), hh);
        for (int r = 0; r < h; ++r)
            colpass.at(r, c) = out[r];
    }

    SubBands sb{ImagePlane(hw, hh), ImagePlane(hw, hh), ImagePlane(hw, hh), ImagePlane(hw, hh)};
    for (int r = 0; r < hh; ++r)
        for (int c = 0; c < hw; ++c) {
            sb.ll.at(r, c) = colpass.at(r, c);
            sb.hl.at(r, c) = colpass.at(r, c + hw);
            sb.lh.at(r, c) = colpass.at(r + hh, c);
            sb.hh.at(r, c) = colpass.at(r + hh, c + hw);
        }
    return sb;
}

ImagePlane inverse_iwt(const SubBands& sb) {
    if (!sb.ll.same_shape(sb.lh) || !sb.ll.same_shape(sb.hl) || !sb.ll.same_shape(sb.hh))
        throw DimensionMismatch("sub-band quadrants disagree in shape");
    if (sb.ll.width < 1 || sb.ll.height < 1)
        throw DimensionMismatch("empty sub-bands");
    const int hw = sb.ll.width, hh = sb.ll.height;
    const int w = hw * 2, h = hh * 2;

    ImagePlane colpass(w, h);
    for (int r = 0; r < hh; ++r)
        for (int c = 0; c < hw; ++c) {
            colpass.at(r, c) = sb.ll.at(r, c);
            colpass.at(r, c + hw) = sb.hl.at(r, c);
            colpass.at(r + hh, c) = sb.lh.at(r, c);
            colpass.at(r + hh, c + hw) = sb.hh.at(r, c);
        }

    // columns first (reverse of forward)
    ImagePlane rowpass(w, h);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < w; ++c) {
        std::vector<int32_t> s(hh), d(hh), out(h);
        for (int r = 0; r < hh; ++r) {
            s[r] = colpass.at(r, c);
            d[r] = colpass.at(r + hh, c);
        }
        lift_inverse(s.data(), d.data(), out.data(), hh);
        for (int r = 0; r < h; ++r)
            rowpass.at(r, c) = out[r];
    }

    ImagePlane out(w, h);
#pragma omp parallel for schedule(static)
    for (int r = 0; r < h; ++r) {
        const int32_t* row = &rowpass.at(r, 0);
        lift_inverse(row, row + hw, &out.at(r, 0), hw);
    }
    return out;
}

} // namespace stego
