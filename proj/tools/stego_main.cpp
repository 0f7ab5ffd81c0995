// Command-line front end: embed, extract, compare, bench.
//
// Exit codes: 0 success, 2 capacity/validation problems, 3 I/O problems,
// 4 decode failures (wrong passphrase, wrong domain, not a stego image).
// Single operations print one JSON object on stdout; bench writes CSV.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stego/errors.hpp"
#include "stego/image_io.hpp"
#include "stego/metrics.hpp"
#include "stego/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitDecode = 4;

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

// PSNR can be infinite (identical images); JSON numbers cannot, so the
// sentinel string "inf" stands in.
json psnr_json(double v) {
    if (std::isinf(v))
        return json("inf");
    return json(v);
}

stego::Domain parse_domain(const std::string& s) {
    if (s == "rgb")
        return stego::Domain::rgb;
    if (s == "ycbcr")
        return stego::Domain::ycbcr;
    throw stego::RangeError("unknown domain '" + s + "' (expected rgb or ycbcr)");
}

stego::ChannelPair parse_channels(const std::string& s) {
    using stego::Channel;
    if (s == "gb")
        return {Channel::green, Channel::blue};
    if (s == "rg")
        return {Channel::red, Channel::green};
    if (s == "rb")
        return {Channel::red, Channel::blue};
    throw stego::RangeError("unknown channel pair '" + s + "' (expected gb, rg or rb)");
}

std::string channels_label(const stego::ChannelPair& p) {
    std::string s;
    s += stego::channel_name(p.first)[0];
    s += stego::channel_name(p.second)[0];
    return s;
}

stego::CipherSpec passphrase_from_env(const std::string& var) {
    const char* value = std::getenv(var.c_str());
    if (value == nullptr)
        throw stego::RangeError("environment variable '" + var +
                                "' is not set (it must hold the passphrase)");
    return stego::CipherSpec(std::string_view(value));
}

struct EmbedArgs {
    std::string cover, secret1, secret2, out;
    std::string domain = "rgb";
    std::string passphrase_env;
    std::string channels;
    std::string dump_key;
};

struct ExtractArgs {
    std::string stego_path, out1, out2;
    std::string domain = "rgb";
    std::string passphrase_env;
    std::string channels;
};

struct CompareArgs {
    std::string a, b;
};

struct BenchArgs {
    std::string covers, secrets, out;
    std::string passphrase_env;
};

int run_embed(const EmbedArgs& a) {
    if (!a.channels.empty() && a.domain != "rgb")
        throw stego::RangeError("--channels applies to the rgb domain only");

    stego::EmbedRequest req;
    req.cover = stego::load_rgb(a.cover);
    req.secret1 = stego::load_grey(a.secret1);
    req.secret2 = stego::load_grey(a.secret2);
    req.passphrase = passphrase_from_env(a.passphrase_env);
    req.domain = parse_domain(a.domain);
    if (!a.channels.empty())
        req.channels = parse_channels(a.channels);

    const stego::RgbImage stego_img = req.domain == stego::Domain::rgb
                                          ? stego::embed_rgb(req)
                                          : stego::embed_ycbcr(req);
    stego::save_rgb(a.out, stego_img);

    if (!a.dump_key.empty()) {
        // Recover the keys exactly as an extractor would and write the two
        // unencrypted containers back to back.
        const stego::ExtractResult res =
            req.domain == stego::Domain::rgb
                ? stego::extract_rgb(stego_img, req.passphrase, req.channels)
                : stego::extract_ycbcr(stego_img, req.passphrase);
        std::vector<uint8_t> dump = stego::serialize_key_compressed(res.key1);
        const std::vector<uint8_t> k2 = stego::serialize_key_compressed(res.key2);
        dump.insert(dump.end(), k2.begin(), k2.end());
        stego::write_file(a.dump_key, dump);
    }

    json j;
    j["psnr"] = psnr_json(stego::rgb_psnr(req.cover, stego_img));
    j["mse"] = stego::rgb_mse(req.cover, stego_img);
    j["domain"] = a.domain;
    if (req.domain == stego::Domain::rgb)
        j["channels"] = channels_label(req.channels);
    j["out"] = a.out;
    std::cout << j.dump() << "\n";
    return 0;
}

int run_extract(const ExtractArgs& a) {
    if (!a.channels.empty() && a.domain != "rgb")
        throw stego::RangeError("--channels applies to the rgb domain only");

    const stego::RgbImage stego_img = stego::load_rgb(a.stego_path);
    const stego::CipherSpec pass = passphrase_from_env(a.passphrase_env);
    const stego::Domain domain = parse_domain(a.domain);
    stego::ChannelPair channels;
    if (!a.channels.empty())
        channels = parse_channels(a.channels);

    const stego::ExtractResult res = domain == stego::Domain::rgb
                                         ? stego::extract_rgb(stego_img, pass, channels)
                                         : stego::extract_ycbcr(stego_img, pass);
    stego::save_grey(a.out1, res.secret1);
    stego::save_grey(a.out2, res.secret2);

    json j;
    j["out1"] = a.out1;
    j["out2"] = a.out2;
    j["domain"] = a.domain;
    std::cout << j.dump() << "\n";
    return 0;
}

int run_compare(const CompareArgs& a) {
    // Accept a pair of color images or a pair of grey images.
    json j;
    j["a"] = a.a;
    j["b"] = a.b;
    try {
        const stego::RgbImage x = stego::load_rgb(a.a);
        const stego::RgbImage y = stego::load_rgb(a.b);
        j["kind"] = "rgb";
        j["mse"] = stego::rgb_mse(x, y);
        j["psnr"] = psnr_json(stego::rgb_psnr(x, y));
    } catch (const stego::UnsupportedFormat&) {
        const stego::ImagePlane x = stego::load_grey(a.a);
        const stego::ImagePlane y = stego::load_grey(a.b);
        j["kind"] = "grey";
        j["mse"] = stego::mse(x, y);
        j["psnr"] = psnr_json(stego::psnr(x, y));
    }
    std::cout << j.dump() << "\n";
    return 0;
}

std::vector<fs::path> list_images(const std::string& dir,
                                  std::initializer_list<const char*> exts) {
    if (!fs::is_directory(dir))
        throw stego::IoError("'" + dir + "' is not a directory");
    std::vector<fs::path> out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file())
            continue;
        std::string ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        for (const char* want : exts)
            if (ext == want)
                out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string fmt_db(double v) {
    if (std::isinf(v))
        return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

struct BenchRow {
    std::string cover, secret1, secret2, domain, channels;
    double stego_psnr = 0, s1_psnr = 0, s2_psnr = 0;
    double embed_ms = 0, extract_ms = 0;
    std::string error;
};

int run_bench(const BenchArgs& a) {
    const std::vector<fs::path> covers = list_images(a.covers, {".bmp", ".ppm"});
    const std::vector<fs::path> secrets = list_images(a.secrets, {".pgm"});
    if (covers.empty())
        throw stego::RangeError("no cover images (*.bmp, *.ppm) in '" + a.covers + "'");
    if (secrets.size() < 2 || secrets.size() % 2 != 0)
        throw stego::RangeError("need an even number (>= 2) of secret images (*.pgm) in '" +
                                a.secrets + "'; they are paired in sorted order");

    const stego::CipherSpec pass = a.passphrase_env.empty()
                                       ? stego::CipherSpec("bench")
                                       : passphrase_from_env(a.passphrase_env);

    std::vector<BenchRow> rows;
    for (const fs::path& cover_path : covers) {
        const stego::RgbImage cover = stego::load_rgb(cover_path.string());
        for (size_t si = 0; si + 1 < secrets.size(); si += 2) {
            const stego::ImagePlane s1 = stego::load_grey(secrets[si].string());
            const stego::ImagePlane s2 = stego::load_grey(secrets[si + 1].string());
            for (stego::Domain domain : {stego::Domain::rgb, stego::Domain::ycbcr}) {
                BenchRow row;
                row.cover = cover_path.filename().string();
                row.secret1 = secrets[si].filename().string();
                row.secret2 = secrets[si + 1].filename().string();
                row.domain = stego::domain_name(domain);
                row.channels = domain == stego::Domain::rgb ? "gb" : "cbcr";
                try {
                    stego::EmbedRequest req;
                    req.cover = cover;
                    req.secret1 = s1;
                    req.secret2 = s2;
                    req.passphrase = pass;
                    req.domain = domain;

                    const double t0 = now_ms();
                    const stego::RgbImage stego_img = domain == stego::Domain::rgb
                                                          ? stego::embed_rgb(req)
                                                          : stego::embed_ycbcr(req);
                    const double t1 = now_ms();
                    const stego::ExtractResult res =
                        domain == stego::Domain::rgb
                            ? stego::extract_rgb(stego_img, pass)
                            : stego::extract_ycbcr(stego_img, pass);
                    const double t2 = now_ms();

                    row.stego_psnr = stego::rgb_psnr(cover, stego_img);
                    row.s1_psnr = stego::psnr(s1, res.secret1);
                    row.s2_psnr = stego::psnr(s2, res.secret2);
                    row.embed_ms = t1 - t0;
                    row.extract_ms = t2 - t1;
                } catch (const stego::Error& e) {
                    row.error = e.what();
                }
                rows.push_back(std::move(row));
            }
        }
    }

    std::sort(rows.begin(), rows.end(), [](const BenchRow& x, const BenchRow& y) {
        return std::tie(x.cover, x.secret1, x.secret2, x.domain) <
               std::tie(y.cover, y.secret1, y.secret2, y.domain);
    });

    std::string csv = "cover_name,secret1_name,secret2_name,domain,channels,"
                      "stego_psnr_db,secret1_psnr_db,secret2_psnr_db,"
                      "embed_ms,extract_ms,error\n";
    for (const BenchRow& r : rows) {
        csv += r.cover + "," + r.secret1 + "," + r.secret2 + "," + r.domain + "," +
               r.channels + ",";
        if (r.error.empty()) {
            char t[64];
            csv += fmt_db(r.stego_psnr) + "," + fmt_db(r.s1_psnr) + "," +
                   fmt_db(r.s2_psnr) + ",";
            std::snprintf(t, sizeof t, "%.3f,%.3f,", r.embed_ms, r.extract_ms);
            csv += t;
            csv += "\n";
        } else {
            std::string note = r.error;
            std::replace(note.begin(), note.end(), ',', ';');
            csv += ",,,,," + note + "\n";
        }
    }

    // Trend summary over rows that share cover and secrets but differ in
    // domain: the rgb stego should be cleaner, the ycbcr secrets closer.
    double stego_margin = std::numeric_limits<double>::infinity();
    double secret_margin = std::numeric_limits<double>::infinity();
    bool have_pairs = false;
    for (const BenchRow& x : rows) {
        if (x.domain != "rgb" || !x.error.empty())
            continue;
        for (const BenchRow& y : rows) {
            if (y.domain != "ycbcr" || !y.error.empty() || y.cover != x.cover ||
                y.secret1 != x.secret1 || y.secret2 != x.secret2)
                continue;
            have_pairs = true;
            stego_margin = std::min(stego_margin, x.stego_psnr - y.stego_psnr);
            secret_margin = std::min(secret_margin,
                                     std::min(y.s1_psnr - x.s1_psnr, y.s2_psnr - x.s2_psnr));
        }
    }
    if (have_pairs) {
        csv += "# trend rgb_stego_psnr_gt_ycbcr: " +
               std::string(stego_margin > 0 ? "pass" : "FAIL") + " (min margin " +
               fmt_db(stego_margin) + " dB)\n";
        csv += "# trend ycbcr_secret_psnr_gt_rgb: " +
               std::string(secret_margin > 0 ? "pass" : "FAIL") + " (min margin " +
               fmt_db(secret_margin) + " dB)\n";
    } else {
        csv += "# trend summary unavailable (no complete domain pairs)\n";
    }

    stego::write_file(a.out, std::vector<uint8_t>(csv.begin(), csv.end()));
    std::cerr << "bench: " << rows.size() << " rows -> " << a.out << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hide two grey images inside one color image (wavelet-domain "
                 "block-matching keys in the high-frequency sub-bands)"};
    app.require_subcommand(1);

    EmbedArgs ea;
    CLI::App* embed = app.add_subcommand("embed", "Embed two secrets into a cover image");
    embed->add_option("--cover", ea.cover, "Cover image (bmp/ppm)")->required();
    embed->add_option("--secret1", ea.secret1, "First secret (pgm)")->required();
    embed->add_option("--secret2", ea.secret2, "Second secret (pgm)")->required();
    embed->add_option("--out", ea.out, "Stego output path (bmp/ppm, lossless only)")->required();
    embed->add_option("--domain", ea.domain, "Embedding domain: rgb or ycbcr")
        ->default_val("rgb");
    embed->add_option("--passphrase-env", ea.passphrase_env,
                      "Name of the environment variable holding the passphrase "
                      "(never passed on the command line)")
        ->required();
    embed->add_option("--channels", ea.channels,
                      "Carrier channels for the rgb domain: gb (default), rg or rb");
    embed->add_option("--dump-key", ea.dump_key,
                      "Also write the two unencrypted key containers, concatenated");

    ExtractArgs xa;
    CLI::App* extract = app.add_subcommand("extract", "Recover both secrets from a stego image");
    extract->add_option("--stego", xa.stego_path, "Stego image (bmp/ppm)")->required();
    extract->add_option("--out1", xa.out1, "Recovered first secret (pgm)")->required();
    extract->add_option("--out2", xa.out2, "Recovered second secret (pgm)")->required();
    extract->add_option("--domain", xa.domain, "Embedding domain: rgb or ycbcr")
        ->default_val("rgb");
    extract->add_option("--passphrase-env", xa.passphrase_env,
                        "Name of the environment variable holding the passphrase")
        ->required();
    extract->add_option("--channels", xa.channels,
                        "Carrier channels for the rgb domain: gb (default), rg or rb");

    CompareArgs ca;
    CLI::App* compare = app.add_subcommand("compare", "PSNR/MSE between two images");
    compare->add_option("a", ca.a, "First image")->required();
    compare->add_option("b", ca.b, "Second image")->required();

    BenchArgs ba;
    CLI::App* bench = app.add_subcommand(
        "bench", "Run both domains over a corpus and write a CSV report");
    bench->add_option("--covers", ba.covers, "Directory of cover images (bmp/ppm)")->required();
    bench->add_option("--secrets", ba.secrets,
                      "Directory of secret images (pgm), paired in sorted order")
        ->required();
    bench->add_option("--out", ba.out, "Report CSV path")->required();
    bench->add_option("--passphrase-env", ba.passphrase_env,
                      "Optional passphrase variable (a fixed default is used otherwise)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (*embed)
            return run_embed(ea);
        if (*extract)
            return run_extract(xa);
        if (*compare)
            return run_compare(ca);
        return run_bench(ba);
    } catch (const stego::DecodeError& e) {
        std::cerr << "decode error: " << e.what() << "\n";
        return kExitDecode;
    } catch (const stego::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const stego::UnsupportedFormat& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const stego::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}
