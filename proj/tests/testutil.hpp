#pragma once

// Shared helpers for the test binaries: deterministic random images, a
// scratch-directory guard, and a subprocess runner for the CLI tool.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stego/image.hpp"

namespace testutil {

namespace fs = std::filesystem;

inline fs::path assets_dir() { return fs::path(ASSETS_DIR); }
inline fs::path golden_dir() { return fs::path(GOLDEN_DIR); }
inline std::string cli_path() { return std::string(STEGO_CLI_PATH); }

inline stego::ImagePlane random_plane(std::mt19937& rng, int w, int h,
                                      int lo = 0, int hi = 255) {
    std::uniform_int_distribution<int> dist(lo, hi);
    stego::ImagePlane p(w, h);
    for (auto& s : p.samples)
        s = dist(rng);
    return p;
}

inline stego::RgbImage random_rgb(std::mt19937& rng, int w, int h) {
    return stego::RgbImage{random_plane(rng, w, h), random_plane(rng, w, h),
                           random_plane(rng, w, h)};
}

inline std::vector<std::uint8_t> read_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    return data;
}

inline std::string read_text(const fs::path& path) {
    const auto bytes = read_bytes(path);
    return std::string(bytes.begin(), bytes.end());
}

// Creates a unique directory under the system temp root and removes it on
// scope exit.  Each test that touches the filesystem gets its own sandbox.
class TempDir {
public:
    TempDir() {
        static std::atomic<unsigned> counter{0};
        std::random_device rd;
        std::ostringstream name;
        name << "stego_test_" << std::hex << rd() << "_" << counter++;
        path_ = fs::temp_directory_path() / name.str();
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }
    fs::path operator/(const std::string& leaf) const { return path_ / leaf; }

private:
    fs::path path_;
};

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    }
    q += "'";
    return q;
}

// Runs the stego CLI with the given arguments and environment additions,
// capturing stdout/stderr.  Uses the shell so that env vars can be injected
// per invocation without mutating the test process environment.
inline CliResult run_cli(const std::vector<std::string>& args,
                         const std::vector<std::pair<std::string, std::string>>& env = {}) {
    TempDir capture;
    const fs::path out_file = capture / "stdout.txt";
    const fs::path err_file = capture / "stderr.txt";

    std::string cmd;
    for (const auto& [key, value] : env)
        cmd += key + "=" + shell_quote(value) + " ";
    cmd += shell_quote(cli_path());
    for (const auto& a : args)
        cmd += " " + shell_quote(a);
    cmd += " > " + shell_quote(out_file.string());
    cmd += " 2> " + shell_quote(err_file.string());

    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = (status >= 0) ? ((status >> 8) & 0xFF) : -1;
    r.out = read_text(out_file);
    r.err = read_text(err_file);
    return r;
}

}  // namespace testutil
