#include "stego/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "stego/errors.hpp"

namespace stego {
namespace {

constexpr int kMaxDimension = 32768; // sanity cap against corrupt headers

std::string lower_ext(const std::string& path) {
    const size_t dot = path.find_last_of('.');
    const size_t sep = path.find_last_of("/\\");
    if (dot == std::string::npos || (sep != std::string::npos && dot < sep))
        return {};
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

[[noreturn]] void refuse_format(const std::string& path, const std::string& ext) {
    if (ext == "jpg" || ext == "jpeg" || ext == "webp" || ext == "gif" ||
        ext == "heic" || ext == "avif")
        throw UnsupportedFormat("refusing to write '" + path + "': ." + ext +
                                " is a lossy format and would destroy the payload");
    throw UnsupportedFormat("cannot write '" + path +
                            "': unsupported extension ." + ext +
                            " (use .bmp, .ppm or .pgm)");
}

void put_u16le(std::vector<uint8_t>& v, uint32_t x) {
    v.push_back(static_cast<uint8_t>(x));
    v.push_back(static_cast<uint8_t>(x >> 8));
}

void put_u32le(std::vector<uint8_t>& v, uint32_t x) {
    v.push_back(static_cast<uint8_t>(x));
    v.push_back(static_cast<uint8_t>(x >> 8));
    v.push_back(static_cast<uint8_t>(x >> 16));
    v.push_back(static_cast<uint8_t>(x >> 24));
}

uint32_t get_u16le(const std::vector<uint8_t>& v, size_t off) {
    return v[off] | (static_cast<uint32_t>(v[off + 1]) << 8);
}

uint32_t get_u32le(const std::vector<uint8_t>& v, size_t off) {
    return v[off] | (static_cast<uint32_t>(v[off + 1]) << 8) |
           (static_cast<uint32_t>(v[off + 2]) << 16) |
           (static_cast<uint32_t>(v[off + 3]) << 24);
}

void check_dims(int w, int h, const std::string& path) {
    if (w <= 0 || h <= 0 || w > kMaxDimension || h > kMaxDimension)
        throw IoError("implausible image dimensions " + std::to_string(w) + "x" +
                      std::to_string(h) + " in '" + path + "'");
}

// ---- netpbm ----------------------------------------------------------------

// Reads one whitespace/comment separated decimal token of a P5/P6 header.
int pnm_token(const std::vector<uint8_t>& data, size_t& pos, const std::string& path) {
    while (pos < data.size()) {
        const uint8_t c = data[pos];
        if (c == '#') {
            while (pos < data.size() && data[pos] != '\n')
                ++pos;
        } else if (std::isspace(c)) {
            ++pos;
        } else {
            break;
        }
    }
    if (pos >= data.size() || !std::isdigit(data[pos]))
        throw IoError("malformed netpbm header in '" + path + "'");
    long value = 0;
    while (pos < data.size() && std::isdigit(data[pos])) {
        value = value * 10 + (data[pos] - '0');
        if (value > 1 << 20)
            throw IoError("header value out of range in '" + path + "'");
        ++pos;
    }
    return static_cast<int>(value);
}

// Returns the offset of the first raster byte after the maxval token.
size_t pnm_header(const std::vector<uint8_t>& data, const std::string& path,
                  int& w, int& h) {
    size_t pos = 2; // past the magic
    w = pnm_token(data, pos, path);
    h = pnm_token(data, pos, path);
    const int maxval = pnm_token(data, pos, path);
    check_dims(w, h, path);
    if (maxval != 255)
        throw UnsupportedFormat("'" + path + "': only maxval 255 netpbm files are supported");
    if (pos >= data.size() || !std::isspace(data[pos]))
        throw IoError("malformed netpbm header in '" + path + "'");
    return pos + 1; // exactly one whitespace byte before the raster
}

RgbImage load_ppm(const std::vector<uint8_t>& data, const std::string& path) {
    int w = 0, h = 0;
    size_t pos = pnm_header(data, path, w, h);
    const size_t need = static_cast<size_t>(w) * h * 3;
    if (data.size() - pos < need)
        throw IoError("'" + path + "': truncated ppm raster");
    RgbImage img{ImagePlane(w, h), ImagePlane(w, h), ImagePlane(w, h)};
    for (size_t i = 0; i < static_cast<size_t>(w) * h; ++i) {
        img.r.samples[i] = data[pos + 3 * i];
        img.g.samples[i] = data[pos + 3 * i + 1];
        img.b.samples[i] = data[pos + 3 * i + 2];
    }
    return img;
}

ImagePlane load_pgm(const std::vector<uint8_t>& data, const std::string& path) {
    int w = 0, h = 0;
    size_t pos = pnm_header(data, path, w, h);
    const size_t need = static_cast<size_t>(w) * h;
    if (data.size() - pos < need)
        throw IoError("'" + path + "': truncated pgm raster");
    ImagePlane plane(w, h);
    for (size_t i = 0; i < need; ++i)
        plane.samples[i] = data[pos + i];
    return plane;
}

// ---- bmp -------------------------------------------------------------------

RgbImage load_bmp(const std::vector<uint8_t>& data, const std::string& path) {
    if (data.size() < 54)
        throw IoError("'" + path + "': truncated bmp header");
    const uint32_t offset = get_u32le(data, 10);
    const uint32_t header_size = get_u32le(data, 14);
    if (header_size < 40)
        throw UnsupportedFormat("'" + path + "': unsupported bmp header variant");
    const int32_t w = static_cast<int32_t>(get_u32le(data, 18));
    const int32_t h_raw = static_cast<int32_t>(get_u32le(data, 22));
    const bool top_down = h_raw < 0;
    const int32_t h = top_down ? -h_raw : h_raw;
    const uint32_t bpp = get_u16le(data, 28);
    const uint32_t compression = get_u32le(data, 30);
    check_dims(w, h, path);
    if (bpp != 24 || compression != 0)
        throw UnsupportedFormat("'" + path + "': only 24-bit uncompressed bmp is supported");

    const size_t stride = (static_cast<size_t>(w) * 3 + 3) & ~size_t{3};
    if (offset > data.size() || data.size() - offset < stride * h)
        throw IoError("'" + path + "': truncated bmp raster");

    RgbImage img{ImagePlane(w, h), ImagePlane(w, h), ImagePlane(w, h)};
    for (int row = 0; row < h; ++row) {
        const int src_row = top_down ? row : h - 1 - row;
        const size_t base = offset + stride * src_row;
        for (int col = 0; col < w; ++col) {
            const size_t p = base + static_cast<size_t>(col) * 3;
            img.b.at(row, col) = data[p];
            img.g.at(row, col) = data[p + 1];
            img.r.at(row, col) = data[p + 2];
        }
    }
    return img;
}

std::vector<uint8_t> encode_bmp(const RgbImage& img) {
    const int w = img.width(), h = img.height();
    const size_t stride = (static_cast<size_t>(w) * 3 + 3) & ~size_t{3};
    const size_t raster = stride * h;

    std::vector<uint8_t> out;
    out.reserve(54 + raster);
    out.push_back('B');
    out.push_back('M');
    put_u32le(out, static_cast<uint32_t>(54 + raster));
    put_u16le(out, 0);
    put_u16le(out, 0);
    put_u32le(out, 54);
    put_u32le(out, 40); // BITMAPINFOHEADER
    put_u32le(out, static_cast<uint32_t>(w));
    put_u32le(out, static_cast<uint32_t>(h)); // positive: bottom-up
    put_u16le(out, 1);
    put_u16le(out, 24);
    put_u32le(out, 0); // BI_RGB
    put_u32le(out, static_cast<uint32_t>(raster));
    put_u32le(out, 2835);
    put_u32le(out, 2835);
    put_u32le(out, 0);
    put_u32le(out, 0);

    for (int row = h - 1; row >= 0; --row) {
        size_t written = 0;
        for (int col = 0; col < w; ++col) {
            out.push_back(static_cast<uint8_t>(img.b.at(row, col)));
            out.push_back(static_cast<uint8_t>(img.g.at(row, col)));
            out.push_back(static_cast<uint8_t>(img.r.at(row, col)));
            written += 3;
        }
        while (written++ < stride)
            out.push_back(0);
    }
    return out;
}

std::vector<uint8_t> encode_ppm(const RgbImage& img) {
    const int w = img.width(), h = img.height();
    std::string header = "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
    std::vector<uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + static_cast<size_t>(w) * h * 3);
    for (size_t i = 0; i < static_cast<size_t>(w) * h; ++i) {
        out.push_back(static_cast<uint8_t>(img.r.samples[i]));
        out.push_back(static_cast<uint8_t>(img.g.samples[i]));
        out.push_back(static_cast<uint8_t>(img.b.samples[i]));
    }
    return out;
}

std::vector<uint8_t> encode_pgm(const ImagePlane& plane) {
    std::string header = "P5\n" + std::to_string(plane.width) + " " +
                         std::to_string(plane.height) + "\n255\n";
    std::vector<uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + plane.size());
    for (int32_t s : plane.samples)
        out.push_back(static_cast<uint8_t>(s));
    return out;
}

void require_writable_rgb(const RgbImage& img) {
    if (!img.r.same_shape(img.g) || !img.r.same_shape(img.b))
        throw DimensionMismatch("rgb planes disagree in shape");
    if (img.width() <= 0 || img.height() <= 0)
        throw DimensionMismatch("cannot write an empty image");
    for (const ImagePlane* p : {&img.r, &img.g, &img.b})
        if (!is_pixel_domain(*p))
            throw RangeError("image has samples outside [0,255]");
}

} // namespace

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)),
                              std::istreambuf_iterator<char>());
    if (in.bad())
        throw IoError("read failed on '" + path + "'");
    return data;
}

void write_file(const std::string& path, const std::vector<uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out)
        throw IoError("write failed on '" + path + "'");
}

RgbImage load_rgb(const std::string& path) {
    const std::vector<uint8_t> data = read_file(path);
    if (data.size() >= 2 && data[0] == 'B' && data[1] == 'M')
        return load_bmp(data, path);
    if (data.size() >= 2 && data[0] == 'P' && data[1] == '6')
        return load_ppm(data, path);
    if (data.size() >= 2 && data[0] == 'P' && data[1] == '5')
        throw UnsupportedFormat("'" + path + "' is greyscale; a color image is required");
    throw UnsupportedFormat("'" + path + "' is not a bmp or ppm color image");
}

ImagePlane load_grey(const std::string& path) {
    const std::vector<uint8_t> data = read_file(path);
    if (data.size() >= 2 && data[0] == 'P' && data[1] == '5')
        return load_pgm(data, path);
    if ((data.size() >= 2 && data[0] == 'B' && data[1] == 'M') ||
        (data.size() >= 2 && data[0] == 'P' && data[1] == '6'))
        throw UnsupportedFormat("'" + path + "' is color; a greyscale image is required");
    throw UnsupportedFormat("'" + path + "' is not a pgm greyscale image");
}

void save_rgb(const std::string& path, const RgbImage& img) {
    require_writable_rgb(img);
    const std::string ext = lower_ext(path);
    if (ext == "bmp")
        write_file(path, encode_bmp(img));
    else if (ext == "ppm")
        write_file(path, encode_ppm(img));
    else
        refuse_format(path, ext);
}

void save_grey(const std::string& path, const ImagePlane& plane) {
    if (plane.width <= 0 || plane.height <= 0)
        throw DimensionMismatch("cannot write an empty image");
    if (!is_pixel_domain(plane))
        throw RangeError("image has samples outside [0,255]");
    const std::string ext = lower_ext(path);
    if (ext == "pgm")
        write_file(path, encode_pgm(plane));
    else
        refuse_format(path, ext);
}

} // namespace stego
