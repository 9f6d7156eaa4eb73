#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "fixtures.hpp"
#include "sncstab/io.hpp"

using namespace sncstab;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SNC_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (fgets(buf.data(), static_cast<int>(buf.size()), p)) out += buf.data();
    int status = pclose(p);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string write_fixture(const Configuration& cfg, const std::string& name) {
    std::string path = std::string("/tmp/snc_cli_") + name + ".json";
    save_config(cfg, path);
    return path;
}

}  // namespace

TEST_CASE("validate exits zero on a valid file and reports each check") {
    std::string path = write_fixture(sncfix::fix_c1(), "c1");
    auto r = run_cli("validate " + path);
    CHECK(r.code == 0);
    CHECK(r.out.find("mayer-vietoris: pass") != std::string::npos);

    auto rm = run_cli("validate " + path + " --format machine");
    CHECK(rm.code == 0);
    CHECK(rm.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("validate exits one on a mathematically invalid file") {
    Configuration cfg = sncfix::fix_c1();
    cfg.table[mono_sorted({0, 0})] = Rational(-2);
    std::string path = write_fixture(cfg, "broken");
    auto r = run_cli("validate " + path);
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("defect evaluation") {
    std::string path = write_fixture(sncfix::fix_c1(), "c1");
    auto r = run_cli("e " + path + " --subset Y1 --bundle L");
    CHECK(r.code == 0);
    CHECK(r.out.find("1/2") != std::string::npos);
    auto rt = run_cli("e " + path + " --subset Y1 --bundle L --twist 0,1 --format machine");
    CHECK(rt.code == 0);
    CHECK(rt.out.find("\"e\"") != std::string::npos);
}

TEST_CASE("check distinguishes semistable from unstable") {
    std::string path = write_fixture(sncfix::fix_c1(), "c1");
    auto bad = run_cli("check " + path + " --bundle L");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("not semistable") != std::string::npos);
    CHECK(bad.out.find("Y1") != std::string::npos);

    auto good = run_cli("check " + path + " --bundle L --twist 0,1");
    CHECK(good.code == 0);
    CHECK(good.out.find("semistable") != std::string::npos);

    auto all = run_cli("check " + path + " --bundle L --twist 0,1 --scope all --mode minus");
    CHECK(all.code == 0);
}

TEST_CASE("interval reporting") {
    std::string path = write_fixture(sncfix::fix_c1(), "c1");
    auto r = run_cli("interval " + path + " --subset Y1 --bundle L");
    CHECK(r.code == 0);
    CHECK(r.out.find("-1/4") != std::string::npos);
    CHECK(r.out.find("candidates=-1") != std::string::npos);

    // genus-one style fixture degenerates: mathematical negative, exit 1
    Configuration g1 = curve_builder({0, 0}, {{0, 1, 2}}, {{"L", {1, -1}}});
    std::string p1 = write_fixture(g1, "g1");
    auto rd = run_cli("interval " + p1 + " --subset Y1 --bundle L");
    CHECK(rd.code == 1);
    CHECK(rd.out.find("degenerate") != std::string::npos);
}

TEST_CASE("enumerate lists the twists and respects tree preconditions") {
    std::string path = write_fixture(sncfix::fix_c1(), "c1");
    auto r = run_cli("enumerate " + path + " --bundle L");
    CHECK(r.code == 0);
    CHECK(r.out.find("[0,1]") != std::string::npos);

    auto rm = run_cli("enumerate " + path + " --bundle L --trace --format machine");
    CHECK(rm.code == 0);
    CHECK(rm.out.find("\"trace\"") != std::string::npos);

    Configuration tri =
        curve_builder({2, 2, 2}, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, {{"L", {1, 1, 1}}});
    std::string pt = write_fixture(tri, "tri");
    auto rp = run_cli("enumerate " + pt + " --bundle L");
    CHECK(rp.code == 2);
    CHECK(rp.out.find("precondition") != std::string::npos);
}

TEST_CASE("oracle subcommands") {
    std::string path = write_fixture(sncfix::fix_c1(), "c1");
    CHECK(run_cli("oracle " + path + " --op identities --samples 20 --seed 3").code == 0);
    CHECK(run_cli("oracle " + path + " --op degrees --subset Y1 --bundle L").code == 0);
    CHECK(run_cli("oracle " + path + " --op balanced --bundle L").code == 0);
    auto rb = run_cli("oracle " + path + " --op brute --bundle L --window 5");
    CHECK(rb.code == 0);
    CHECK(rb.out.find("[[0,1]]") != std::string::npos);
    auto rt = run_cli("oracle " + path + " --op threshold --subset Y1 --bundle L");
    CHECK(rt.code == 0);
    CHECK(rt.out.find("\"m0\"") != std::string::npos);
}

TEST_CASE("generation round trips through the loader") {
    auto r = run_cli("gen curve --genera 2,1 --edges 0-1:1 --deg L=3,2");
    CHECK(r.code == 0);
    Configuration cfg = config_from_string(r.out);
    CHECK(cfg.n() == 2);
    CHECK(validate_ok(cfg));

    auto rs = run_cli("gen synth --dim 2 --components 2 --edges 0-1 --seed 12");
    CHECK(rs.code == 0);
    Configuration s = config_from_string(rs.out);
    CHECK(s.dim == 2);
    CHECK(validate_ok(s));

    auto ro = run_cli("gen curve --genera 3 --edges '' --deg L=4 --out /tmp/snc_cli_gen.json");
    CHECK(ro.code == 0);
    CHECK(load_config("/tmp/snc_cli_gen.json").n() == 1);
}

TEST_CASE("malformed input exits three") {
    CHECK(run_cli("validate /nonexistent.json").code == 3);
    std::ofstream("/tmp/snc_cli_bad.json") << "{ not json";
    CHECK(run_cli("validate /tmp/snc_cli_bad.json").code == 3);
    std::string path = write_fixture(sncfix::fix_c1(), "c1");
    CHECK(run_cli("e " + path + " --subset Q --bundle L").code == 3);
    CHECK(run_cli("check " + path + " --bundle L --mode sideways").code == 3);
    CHECK(run_cli("frobnicate").code == 3);
}

TEST_CASE("precondition failures exit two") {
    std::string path = write_fixture(sncfix::fix_c1(), "c1");
    // full fiber is not a proper pair
    CHECK(run_cli("interval " + path + " --subset Y1,Y2 --bundle L").code == 2);
}
