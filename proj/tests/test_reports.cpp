#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hpt/field_io.hpp"
#include "hpt/field_zoo.hpp"
#include "hpt/report.hpp"

using namespace hpt;

namespace {

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "hpt_test_io";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("form files round trip and reject malformed input") {
    Grid g(8);
    Form w = random_bandlimited(g, 2, 2, 31);
    std::stringstream buf;
    write_form(buf, w);
    Form back = read_form(buf);
    CHECK(back.degree() == 2);
    CHECK((back - w).sup_norm() == 0.0);

    std::stringstream short_buf("2 8\n1.0 2.0 3.0\n");
    CHECK_THROWS_AS(read_form(short_buf), FormatError);

    std::stringstream trailing;
    write_form(trailing, w);
    trailing << " 42.0";
    CHECK_THROWS_AS(read_form(trailing), FormatError);

    std::stringstream bad_header("7 8\n");
    CHECK_THROWS_AS(read_form(bad_header), FormatError);
    std::stringstream bad_n("0 12\n");
    CHECK_THROWS_AS(read_form(bad_n), FormatError);
}

TEST_CASE("fluid manifests round trip") {
    Grid g(8);
    FluidState s;
    s.grid = g;
    s.times = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (size_t i = 0; i < 5; ++i) {
        s.rho.push_back(Form::constant(g, 0, {1.0 + 0.1 * static_cast<double>(i)}));
        s.u.push_back(random_divfree(g, 2, 7 + i));
        s.p.push_back(random_bandlimited(g, 0, 2, 100 + i));
    }
    auto dir = temp_dir();
    write_fluid_manifest(dir.string(), "case", s);
    FluidState back = read_fluid_manifest((dir / "case_manifest.json").string());
    REQUIRE(back.times == s.times);
    for (size_t i = 0; i < 5; ++i) {
        CHECK((back.rho[i] - s.rho[i]).sup_norm() == 0.0);
        CHECK((back.p[i] - s.p[i]).sup_norm() == 0.0);
        CHECK((flat(back.u[i]) - flat(s.u[i])).sup_norm() == 0.0);
    }
}

TEST_CASE("check-dec report passes and is deterministic") {
    RunConfig cfg;
    cfg.grid_n = 16;
    cfg.trials = 3;
    cfg.include_timing = false;
    auto r1 = cmd_check_dec(cfg);
    auto r2 = cmd_check_dec(cfg);
    CHECK(r1["pass"] == true);
    CHECK(report_without_timing(r1) == report_without_timing(r2));
    CHECK(exit_code_for(r1) == 0);

    // Negative control: a mis-signed codifferential breaks adjointness.
    cfg.flip_delta_sign = true;
    auto bad = cmd_check_dec(cfg);
    CHECK(bad["pass"] == false);
    CHECK(bad["results"]["signed_adjointness"].get<double>() > 0.1);
    CHECK(exit_code_for(bad) == 1);
}

TEST_CASE("verify reports: pass, determinism, and the mass negative control") {
    RunConfig cfg;
    cfg.grid_n = 16;
    cfg.field = "abc";
    cfg.lemma = "euler";
    cfg.include_timing = false;
    auto r1 = cmd_verify(cfg);
    CHECK(r1["pass"] == true);
    CHECK(r1["helicity"][0].get<double>() ==
          doctest::Approx(3.0 * std::pow(kTwoPi, 3)).epsilon(1e-8));
    auto r2 = cmd_verify(cfg);
    CHECK(report_without_timing(r1) == report_without_timing(r2));

    cfg.lemma = "mass";
    cfg.inject_mass_violation = true;
    auto bad = cmd_verify(cfg);
    CHECK(bad["pass"] == false);
    CHECK(bad["residuals"]["mass"]["max"].get<double>() > 0.5);
    CHECK(exit_code_for(bad) == 1);
}

TEST_CASE("verify accepts a fluid state from a manifest") {
    Grid g(16);
    FluidState s = shear_flow(1.0).realize(g, {0.0, 0.25, 0.5, 0.75, 1.0});
    auto dir = temp_dir();
    write_fluid_manifest(dir.string(), "shear", s);

    RunConfig cfg;
    cfg.grid_n = 16;
    cfg.lemma = "vorticity";
    cfg.manifest = (dir / "shear_manifest.json").string();
    cfg.include_timing = false;
    auto r = cmd_verify(cfg);
    CHECK(r["pass"] == true);
}

TEST_CASE("gaussian report rows") {
    auto r = cmd_gaussian(2, /*include_timing=*/false);
    REQUIRE(r["moments"].size() == 3);
    CHECK(r["moments"][0]["value"] == "1");
    CHECK(r["moments"][1]["value"] == "0");
    CHECK(r["moments"][2]["value"] == "1");

    auto r4 = cmd_gaussian(4, false);
    CHECK(r4["moments"][4]["value"] == "3");

    auto r0 = cmd_gaussian(0, false);
    CHECK(r0["moments"].size() == 1);
    CHECK_THROWS_AS(cmd_gaussian(41, false), std::invalid_argument);
}

TEST_CASE("homotopy command reports endpoints and mass spread") {
    Grid g(16);
    Form f0 = pointwise_log(Form::constant(g, 0, {1.0}) + 0.1 * random_bandlimited(g, 0, 1, 5));
    Form rho0 = pointwise_exp(f0);
    double mean_shift = expectation(rho0) - 1.0;
    // Shift to exactly unit mass, then build a second field the same way.
    for (double& v : f0.component(0)) v -= std::log(1.0 + mean_shift);
    Form f1 = pointwise_log(Form::constant(g, 0, {1.0}) + 0.1 * random_bandlimited(g, 0, 1, 6));
    Form rho1 = pointwise_exp(f1);
    double shift1 = expectation(rho1) - 1.0;
    for (double& v : f1.component(0)) v -= std::log(1.0 + shift1);

    auto dir = temp_dir();
    write_form_file((dir / "f0.txt").string(), f0);
    write_form_file((dir / "f1.txt").string(), f1);

    auto r = cmd_homotopy((dir / "f0.txt").string(), (dir / "f1.txt").string(), 11, 1e-8,
                          1e-10, false);
    CHECK(r["pass"] == true);
    CHECK(r["endpoint_mismatch"]["t0"].get<double>() < 1e-12);
    CHECK(r["mass_spread"].get<double>() < 1e-10);

    CHECK_THROWS_AS(
        cmd_homotopy((dir / "f0.txt").string(), (dir / "missing.txt").string(), 11, 1e-8,
                     1e-10, false),
        FormatError);
}

TEST_CASE("run config validation") {
    RunConfig cfg;
    cfg.grid_n = 12;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.grid_n = 16;
    cfg.tolerance = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.tolerance = 1e-8;
    cfg.samples = 3;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("check-dec clamps the seven-term band limit below Nyquist") {
    RunConfig cfg;
    cfg.grid_n = 8;
    cfg.kmax = 2;
    cfg.trials = 5;
    cfg.include_timing = false;
    auto r = cmd_check_dec(cfg);
    CHECK(r["bv_band_limit"] == 1);
    CHECK(r["results"]["bv_seven_term"].get<double>() <= 1e-10);
    CHECK(r["pass"] == true);
}

#ifdef HPT_CLI_PATH
TEST_CASE("cli exit codes: 0 pass, 1 verification failure, 2 usage error") {
    auto run = [](const std::string& args) {
        std::string cmd = std::string(HPT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
        int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    };
    CHECK(run("check-dec --N 8 --trials 2") == 0);

    // Byte stability across separate processes (timing omitted).
    auto dir = temp_dir();
    auto out1 = (dir / "r1.json").string();
    auto out2 = (dir / "r2.json").string();
    CHECK(run("check-dec --N 8 --trials 2 --no-timing --out " + out1) == 0);
    CHECK(run("check-dec --N 8 --trials 2 --no-timing --out " + out2) == 0);
    std::ifstream a(out1), b(out2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(!sa.str().empty());
    CHECK(run("verify --field abc --lemma mass --N 8 --inject-mass-violation") == 1);
    CHECK(run("verify --field nosuch --lemma mass") == 2);
    CHECK(run("homotopy --f0 /nonexistent --f1 /nonexistent") == 2);
    CHECK(run("gaussian --nmax 99") == 2);
}
#endif

TEST_CASE("homotopy between identical files reports a vanishing connecting field") {
    Grid g(8);
    Form f0 = 0.2 * random_bandlimited(g, 0, 2, 77);
    auto dir = temp_dir();
    write_form_file((dir / "same.txt").string(), f0);
    auto r = cmd_homotopy((dir / "same.txt").string(), (dir / "same.txt").string(), 11, 1e-8,
                          1e-10, false);
    CHECK(r["pass"] == true);
    CHECK(r["max_X_sup_norm"].get<double>() < 1e-12);
}
