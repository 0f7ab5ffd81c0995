#include "stego/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stego/errors.hpp"

namespace stego::ref {

namespace {

void lift_forward(const int32_t* x, int32_t* out, int n) {
    int32_t* s = out;
    int32_t* d = out + n;
    for (int i = 0; i < n; ++i) {
        const int32_t right = (i + 1 < n) ? x[2 * (i + 1)] : x[2 * (n - 1)];
        d[i] = x[2 * i + 1] - ((x[2 * i] + right) >> 1);
    }
    for (int i = 0; i < n; ++i) {
        const int32_t left = (i > 0) ? d[i - 1] : d[0];
        s[i] = x[2 * i] + ((left + d[i] + 2) >> 2);
    }
}

void lift_inverse(const int32_t* s, const int32_t* d, int32_t* x, int n) {
    for (int i = 0; i < n; ++i) {
        const int32_t left = (i > 0) ? d[i - 1] : d[0];
        x[2 * i] = s[i] - ((left + d[i] + 2) >> 2);
    }
    for (int i = 0; i < n; ++i) {
        const int32_t right = (i + 1 < n) ? x[2 * (i + 1)] : x[2 * (n - 1)];
        x[2 * i + 1] = d[i] + ((x[2 * i] + right) >> 1);
    }
}

inline int32_t round_div256(int32_t n) {
    return n >= 0 ? (n + 128) >> 8 : -((-n + 128) >> 8);
}

inline int32_t clamp255(int32_t v) { return std::clamp(v, 0, 255); }

inline int32_t round_away(double v) {
    return static_cast<int32_t>(v >= 0.0 ? std::floor(v + 0.5) : std::ceil(v - 0.5));
}

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

void require_even(const ImagePlane& p) {
    if (p.width < 2 || p.height < 2 || p.width % 2 || p.height % 2)
        throw OddDimension("transform needs even dimensions >= 2");
}

} // namespace

SubBands forward_iwt(const ImagePlane& p) {
    require_even(p);
    const int w = p.width, h = p.height;
    const int hw = w / 2, hh = h / 2;

    ImagePlane rowpass(w, h);
    for (int r = 0; r < h; ++r)
        lift_forward(&p.samples[static_cast<size_t>(r) * w], &rowpass.at(r, 0), hw);

    ImagePlane colpass(w, h);
    std::vector<int32_t> col(h), out(h);
    for (int c = 0; c < w; ++c) {
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

    ImagePlane rowpass(w, h);
    std::vector<int32_t> s(hh), d(hh), out(h);
    for (int c = 0; c < w; ++c) {
        for (int r = 0; r < hh; ++r) {
            s[r] = colpass.at(r, c);
            d[r] = colpass.at(r + hh, c);
        }
        lift_inverse(s.data(), d.data(), out.data(), hh);
        for (int r = 0; r < h; ++r)
            rowpass.at(r, c) = out[r];
    }

    ImagePlane res(w, h);
    for (int r = 0; r < h; ++r) {
        const int32_t* row = &rowpass.at(r, 0);
        lift_inverse(row, row + hw, &res.at(r, 0), hw);
    }
    return res;
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

    for (int i = 0; i < ns; ++i) {
        const Block target = block_at(secret_ll, secret.blocks_x, i);
        int64_t best = std::numeric_limits<int64_t>::max();
        int best_k = 0;
        for (int k = 0; k < nc; ++k) {
            const int64_t dist = block_ssd(target, block_at(cover_ll, cover.blocks_x, k));
            if (dist < best) {
                best = dist;
                best_k = k;
            }
        }
        key.entries[i] = static_cast<uint32_t>(best_k);
    }
    return key;
}

YcbcrImage rgb_to_ycbcr(const RgbImage& img) {
    const int w = img.width(), h = img.height();
    YcbcrImage out{ImagePlane(w, h), ImagePlane(w, h), ImagePlane(w, h)};
    const int64_t n = static_cast<int64_t>(w) * h;
    for (int64_t i = 0; i < n; ++i) {
        const int32_t r = img.r.samples[i];
        const int32_t g = img.g.samples[i];
        const int32_t b = img.b.samples[i];
        out.y.samples[i] = clamp255(round_div256(77 * r + 150 * g + 29 * b));
        out.cb.samples[i] = clamp255(round_div256(-44 * r - 87 * g + 131 * b + 32768));
        out.cr.samples[i] = clamp255(round_div256(131 * r - 110 * g - 21 * b + 32768));
    }
    return out;
}

RgbImage ycbcr_to_rgb(const YcbcrImage& img) {
    const int w = img.width(), h = img.height();
    RgbImage out{ImagePlane(w, h), ImagePlane(w, h), ImagePlane(w, h)};
    const int64_t n = static_cast<int64_t>(w) * h;
    for (int64_t i = 0; i < n; ++i) {
        const double y = img.y.samples[i];
        const double cb = img.cb.samples[i] - 128.0;
        const double cr = img.cr.samples[i] - 128.0;
        out.r.samples[i] = clamp255(round_away(y + 1.371 * cr));
        out.g.samples[i] = clamp255(round_away(y - 0.698 * cr - 0.336 * cb));
        out.b.samples[i] = clamp255(round_away(y + 1.732 * cb));
    }
    return out;
}

double mse(const ImagePlane& a, const ImagePlane& b) {
    if (!a.same_shape(b))
        throw DimensionMismatch("mse: plane shapes differ");
    int64_t sum = 0;
    const int64_t n = static_cast<int64_t>(a.size());
    for (int64_t i = 0; i < n; ++i) {
        const int64_t d = a.samples[i] - b.samples[i];
        sum += d * d;
    }
    return static_cast<double>(sum) / static_cast<double>(a.size());
}

} // namespace stego::ref
