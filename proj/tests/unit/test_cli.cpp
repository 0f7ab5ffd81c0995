#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "stego/image_io.hpp"
#include "stego/keycodec.hpp"
#include "stego/metrics.hpp"
#include "stego/pipeline.hpp"
#include "../testutil.hpp"

using json = nlohmann::json;
using testutil::CliResult;
using testutil::TempDir;
using testutil::run_cli;

namespace {

std::string asset(const char* name) { return (testutil::assets_dir() / name).string(); }

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

int count_fields(const std::string& csv_line) {
    int n = 1;
    for (char c : csv_line)
        if (c == ',')
            ++n;
    return n;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("embed writes a stego image and reports psnr as json") {
    TempDir tmp;
    const std::string out = (tmp / "stego.bmp").string();
    const CliResult r = run_cli({"embed", "--cover", asset("cover_baboon.bmp"),
                                 "--secret1", asset("secret_globe.pgm"),
                                 "--secret2", asset("secret_ball.pgm"),
                                 "--out", out, "--passphrase-env", "STEGO_TEST_PASS"},
                                {{"STEGO_TEST_PASS", "cli pass"}});
    REQUIRE(r.exit_code == 0);

    const json j = json::parse(r.out);
    CHECK(j.at("domain") == "rgb");
    CHECK(j.at("channels") == "gb");
    CHECK(j.at("out") == out);
    REQUIRE(j.at("psnr").is_number());

    const stego::RgbImage cover = stego::load_rgb(asset("cover_baboon.bmp"));
    const stego::RgbImage stego_img = stego::load_rgb(out);
    CHECK(j.at("psnr").get<double>() ==
          doctest::Approx(stego::rgb_psnr(cover, stego_img)).epsilon(1e-9));
    CHECK(j.at("mse").get<double>() ==
          doctest::Approx(stego::rgb_mse(cover, stego_img)).epsilon(1e-9));
}

TEST_CASE("identical inputs produce byte-identical stego files") {
    TempDir tmp;
    const std::string out1 = (tmp / "a.bmp").string();
    const std::string out2 = (tmp / "b.bmp").string();
    for (const std::string& out : {out1, out2}) {
        const CliResult r = run_cli({"embed", "--cover", asset("cover_peppers.bmp"),
                                     "--secret1", asset("secret_globe.pgm"),
                                     "--secret2", asset("secret_ball.pgm"),
                                     "--out", out, "--domain", "ycbcr",
                                     "--passphrase-env", "P"},
                                    {{"P", "determinism"}});
        REQUIRE(r.exit_code == 0);
    }
    CHECK(testutil::read_bytes(out1) == testutil::read_bytes(out2));
}

TEST_CASE("extract recovers the approximate secrets from the stego file") {
    TempDir tmp;
    const std::string stego_path = (tmp / "stego.bmp").string();
    REQUIRE(run_cli({"embed", "--cover", asset("cover_baboon.bmp"), "--secret1",
                     asset("secret_globe.pgm"), "--secret2", asset("secret_ball.pgm"),
                     "--out", stego_path, "--passphrase-env", "P"},
                    {{"P", "roundtrip"}})
                .exit_code == 0);

    const std::string out1 = (tmp / "s1.pgm").string();
    const std::string out2 = (tmp / "s2.pgm").string();
    const CliResult r = run_cli({"extract", "--stego", stego_path, "--out1", out1,
                                 "--out2", out2, "--passphrase-env", "P"},
                                {{"P", "roundtrip"}});
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("out1") == out1);
    CHECK(j.at("domain") == "rgb");

    // Files must equal the in-memory pipeline output exactly.
    const stego::ExtractResult mem =
        stego::extract_rgb(stego::load_rgb(stego_path), stego::CipherSpec("roundtrip"));
    CHECK(stego::load_grey(out1) == mem.secret1);
    CHECK(stego::load_grey(out2) == mem.secret2);
}

TEST_CASE("dump-key emits the two sealed containers back to back") {
    TempDir tmp;
    const std::string stego_path = (tmp / "stego.bmp").string();
    const std::string key_path = (tmp / "keys.bin").string();
    REQUIRE(run_cli({"embed", "--cover", asset("cover_baboon.bmp"), "--secret1",
                     asset("secret_globe.pgm"), "--secret2", asset("secret_ball.pgm"),
                     "--out", stego_path, "--dump-key", key_path,
                     "--passphrase-env", "P"},
                    {{"P", "keydump"}})
                .exit_code == 0);

    const stego::ExtractResult res =
        stego::extract_rgb(stego::load_rgb(stego_path), stego::CipherSpec("keydump"));
    std::vector<uint8_t> want = stego::serialize_key_compressed(res.key1);
    const auto second = stego::serialize_key_compressed(res.key2);
    want.insert(want.end(), second.begin(), second.end());
    CHECK(testutil::read_bytes(key_path) == want);
}

TEST_CASE("wrong passphrase and wrong domain both exit 4") {
    TempDir tmp;
    const std::string stego_path = (tmp / "stego.bmp").string();
    REQUIRE(run_cli({"embed", "--cover", asset("cover_baboon.bmp"), "--secret1",
                     asset("secret_globe.pgm"), "--secret2", asset("secret_ball.pgm"),
                     "--out", stego_path, "--passphrase-env", "P"},
                    {{"P", "right"}})
                .exit_code == 0);

    const CliResult wrong = run_cli({"extract", "--stego", stego_path, "--out1",
                                     (tmp / "a.pgm").string(), "--out2",
                                     (tmp / "b.pgm").string(), "--passphrase-env", "P"},
                                    {{"P", "not right"}});
    CHECK(wrong.exit_code == 4);
    CHECK(wrong.err.find("decode") != std::string::npos);

    const CliResult mismatch =
        run_cli({"extract", "--stego", stego_path, "--out1", (tmp / "c.pgm").string(),
                 "--out2", (tmp / "d.pgm").string(), "--domain", "ycbcr",
                 "--passphrase-env", "P"},
                {{"P", "right"}});
    CHECK(mismatch.exit_code == 4);
}

TEST_CASE("validation failures exit 2") {
    TempDir tmp;
    // Passphrase variable not set.
    const CliResult noenv = run_cli({"embed", "--cover", asset("cover_baboon.bmp"),
                                     "--secret1", asset("secret_globe.pgm"),
                                     "--secret2", asset("secret_ball.pgm"), "--out",
                                     (tmp / "s.bmp").string(), "--passphrase-env",
                                     "STEGO_UNSET_VARIABLE_42"});
    CHECK(noenv.exit_code == 2);

    // Secret too large for the cover.
    const std::string big = (tmp / "big.pgm").string();
    stego::save_grey(big, stego::ImagePlane(512, 512, 50));
    const CliResult huge = run_cli({"embed", "--cover", asset("cover_baboon.bmp"),
                                    "--secret1", big, "--secret2",
                                    asset("secret_ball.pgm"), "--out",
                                    (tmp / "s.bmp").string(), "--passphrase-env", "P"},
                                   {{"P", "x"}});
    CHECK(huge.exit_code == 2);
    CHECK(huge.err.find("holds only") != std::string::npos);

    // Channel selection is an rgb-domain concept.
    const CliResult chan = run_cli({"embed", "--cover", asset("cover_baboon.bmp"),
                                    "--secret1", asset("secret_globe.pgm"),
                                    "--secret2", asset("secret_ball.pgm"), "--out",
                                    (tmp / "s.bmp").string(), "--domain", "ycbcr",
                                    "--channels", "rg", "--passphrase-env", "P"},
                                   {{"P", "x"}});
    CHECK(chan.exit_code == 2);

    // No subcommand.
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"--help"}).exit_code == 0);
}

TEST_CASE("lossy stego output is refused") {
    TempDir tmp;
    const CliResult r = run_cli({"embed", "--cover", asset("cover_baboon.bmp"),
                                 "--secret1", asset("secret_globe.pgm"), "--secret2",
                                 asset("secret_ball.pgm"), "--out",
                                 (tmp / "stego.jpg").string(), "--passphrase-env", "P"},
                                {{"P", "x"}});
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("lossy") != std::string::npos);
    CHECK_FALSE(std::filesystem::exists(tmp / "stego.jpg"));
}

TEST_CASE("compare reports psnr with an inf sentinel for identical images") {
    const CliResult same =
        run_cli({"compare", asset("cover_baboon.bmp"), asset("cover_baboon.bmp")});
    REQUIRE(same.exit_code == 0);
    const json js = json::parse(same.out);
    CHECK(js.at("kind") == "rgb");
    CHECK(js.at("psnr") == "inf");
    CHECK(js.at("mse").get<double>() == 0.0);

    const CliResult diff =
        run_cli({"compare", asset("cover_baboon.bmp"), asset("cover_peppers.bmp")});
    REQUIRE(diff.exit_code == 0);
    const json jd = json::parse(diff.out);
    CHECK(jd.at("psnr").is_number());

    const CliResult grey =
        run_cli({"compare", asset("secret_globe.pgm"), asset("secret_ball.pgm")});
    REQUIRE(grey.exit_code == 0);
    CHECK(json::parse(grey.out).at("kind") == "grey");

    // Color vs grey cannot be compared.
    CHECK(run_cli({"compare", asset("cover_baboon.bmp"), asset("secret_ball.pgm")})
              .exit_code == 3);
    CHECK(run_cli({"compare", asset("cover_baboon.bmp"), "/nonexistent.bmp"})
              .exit_code == 3);
}

TEST_CASE("bench sweeps covers, pairs secrets and appends the trend summary") {
    TempDir tmp;
    namespace fs = std::filesystem;
    const fs::path covers = tmp / "covers";
    const fs::path secrets = tmp / "secrets";
    fs::create_directories(covers);
    fs::create_directories(secrets);
    fs::copy_file(testutil::assets_dir() / "cover_baboon.bmp", covers / "baboon.bmp");
    fs::copy_file(testutil::assets_dir() / "cover_peppers.bmp", covers / "peppers.bmp");
    fs::copy_file(testutil::assets_dir() / "secret_ball.pgm", secrets / "s_ball.pgm");
    fs::copy_file(testutil::assets_dir() / "secret_globe.pgm", secrets / "s_globe.pgm");

    const std::string report = (tmp / "report.csv").string();
    const CliResult r = run_cli({"bench", "--covers", covers.string(), "--secrets",
                                 secrets.string(), "--out", report});
    REQUIRE(r.exit_code == 0);
    CHECK(r.err.find("bench: 4 rows") != std::string::npos);

    const auto lines = split_lines(testutil::read_text(report));
    REQUIRE(lines.size() == 7); // header + 4 rows + 2 trend lines
    CHECK(lines[0] == "cover_name,secret1_name,secret2_name,domain,channels,"
                      "stego_psnr_db,secret1_psnr_db,secret2_psnr_db,"
                      "embed_ms,extract_ms,error");
    for (int i = 1; i <= 4; ++i)
        CHECK(count_fields(lines[i]) == 11);
    // Sorted by cover, then domain; both domains appear per cover.
    CHECK(lines[1].rfind("baboon.bmp,s_ball.pgm,s_globe.pgm,rgb,gb,", 0) == 0);
    CHECK(lines[2].rfind("baboon.bmp,s_ball.pgm,s_globe.pgm,ycbcr,cbcr,", 0) == 0);
    CHECK(lines[3].rfind("peppers.bmp,", 0) == 0);
    CHECK(lines[5].rfind("# trend rgb_stego_psnr_gt_ycbcr: pass", 0) == 0);
    CHECK(lines[6].rfind("# trend ycbcr_secret_psnr_gt_rgb: pass", 0) == 0);
}

TEST_CASE("bench records per-combination failures without stopping") {
    TempDir tmp;
    namespace fs = std::filesystem;
    const fs::path covers = tmp / "covers";
    const fs::path secrets = tmp / "secrets";
    fs::create_directories(covers);
    fs::create_directories(secrets);
    fs::copy_file(testutil::assets_dir() / "cover_baboon.bmp", covers / "baboon.bmp");
    fs::copy_file(testutil::assets_dir() / "secret_ball.pgm", secrets / "a_good1.pgm");
    fs::copy_file(testutil::assets_dir() / "secret_globe.pgm", secrets / "a_good2.pgm");
    stego::save_grey((secrets / "b_bad1.pgm").string(), stego::ImagePlane(127, 127, 3));
    stego::save_grey((secrets / "b_bad2.pgm").string(), stego::ImagePlane(128, 128, 3));

    const std::string report = (tmp / "report.csv").string();
    const CliResult r = run_cli({"bench", "--covers", covers.string(), "--secrets",
                                 secrets.string(), "--out", report});
    REQUIRE(r.exit_code == 0);

    const auto lines = split_lines(testutil::read_text(report));
    REQUIRE(lines.size() == 7); // header + 4 rows + 2 trends
    int error_rows = 0;
    for (int i = 1; i <= 4; ++i) {
        REQUIRE(count_fields(lines[i]) == 11);
        const std::string tail = lines[i].substr(lines[i].rfind(',') + 1);
        if (!tail.empty())
            ++error_rows;
    }
    CHECK(error_rows == 2); // the odd-sized pair fails in both domains
    CHECK(lines[5].rfind("# trend", 0) == 0);
}

TEST_CASE("bench validates its input directories") {
    TempDir tmp;
    namespace fs = std::filesystem;
    const fs::path covers = tmp / "covers";
    const fs::path secrets = tmp / "secrets";
    fs::create_directories(covers);
    fs::create_directories(secrets);
    fs::copy_file(testutil::assets_dir() / "secret_ball.pgm", secrets / "a.pgm");
    fs::copy_file(testutil::assets_dir() / "secret_globe.pgm", secrets / "b.pgm");

    // Empty covers directory.
    CHECK(run_cli({"bench", "--covers", covers.string(), "--secrets", secrets.string(),
                   "--out", (tmp / "r.csv").string()})
              .exit_code == 2);

    // Odd number of secrets.
    fs::copy_file(testutil::assets_dir() / "cover_baboon.bmp", covers / "c.bmp");
    fs::copy_file(testutil::assets_dir() / "secret_ball.pgm", secrets / "c.pgm");
    CHECK(run_cli({"bench", "--covers", covers.string(), "--secrets", secrets.string(),
                   "--out", (tmp / "r.csv").string()})
              .exit_code == 2);

    // Nonexistent directory.
    CHECK(run_cli({"bench", "--covers", (tmp / "nowhere").string(), "--secrets",
                   secrets.string(), "--out", (tmp / "r.csv").string()})
              .exit_code == 3);
}

}
