// hpt: verify exterior-calculus identities and fluid-state homotopy
// structure on the flat 3-torus, with JSON reports.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hpt/errors.hpp"
#include "hpt/report.hpp"

namespace {

int emit(const nlohmann::json& report, const std::string& out_path) {
    std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        out << text;
    }
    return hpt::exit_code_for(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homotopy probability checks on the flat 3-torus"};
    app.require_subcommand(1);

    hpt::RunConfig cfg;
    bool no_timing = false;

    auto* check = app.add_subcommand("check-dec", "run the exterior-calculus identity suite");
    check->add_option("--N", cfg.grid_n, "grid points per axis (power of two)");
    check->add_option("--kmax", cfg.kmax, "band limit of the random forms");
    check->add_option("--trials", cfg.trials, "number of seeded trials");
    check->add_option("--seed", cfg.seed, "base seed");
    check->add_option("--tol", cfg.dec_tolerance, "pass threshold");
    check->add_flag("--flip-delta-sign", cfg.flip_delta_sign,
                    "negate the codifferential in the adjointness check (negative control)");
    check->add_option("--out", cfg.out_path, "write the report to a file");
    check->add_flag("--no-timing", no_timing, "omit timing fields");

    auto* verify = app.add_subcommand("verify", "check a fluid state against a lemma");
    verify->add_option("--field", cfg.field, "abc | shear | taylor-green | transport");
    verify->add_option("--lemma", cfg.lemma, "mass | vorticity | euler");
    verify->add_option("--N", cfg.grid_n, "grid points per axis (power of two)");
    verify->add_option("--samples", cfg.samples, "time samples (0 = auto)");
    verify->add_option("--A", cfg.A, "abc parameter A");
    verify->add_option("--B", cfg.B, "abc parameter B");
    verify->add_option("--C", cfg.C, "abc parameter C");
    verify->add_option("--amplitude", cfg.amplitude, "shear / transport amplitude");
    verify->add_option("--u0x", cfg.u0[0], "transport velocity x");
    verify->add_option("--u0y", cfg.u0[1], "transport velocity y");
    verify->add_option("--u0z", cfg.u0[2], "transport velocity z");
    verify->add_option("--manifest", cfg.manifest, "load the fluid state from a manifest");
    verify->add_option("--tol", cfg.tolerance, "pass threshold");
    verify->add_flag("--inject-mass-violation", cfg.inject_mass_violation,
                     "add t to the density (negative control)");
    verify->add_option("--out", cfg.out_path, "write the report to a file");
    verify->add_flag("--no-timing", no_timing, "omit timing fields");

    int n_max = 20;
    auto* gaussian = app.add_subcommand("gaussian", "exact homotopy-Gaussian moment table");
    gaussian->add_option("--nmax", n_max, "largest moment order (<= 40)");
    gaussian->add_option("--out", cfg.out_path, "write the report to a file");
    gaussian->add_flag("--no-timing", no_timing, "omit timing fields");

    std::string f0_path, f1_path;
    int homotopy_samples = 11;
    double tol_mass = 1e-10;
    auto* homotopy =
        app.add_subcommand("homotopy", "build the density homotopy between two 0-form files");
    homotopy->add_option("--f0", f0_path, "log-density at t=0 (form file)")->required();
    homotopy->add_option("--f1", f1_path, "log-density at t=1 (form file)")->required();
    homotopy->add_option("--samples", homotopy_samples, "sampled t values");
    homotopy->add_option("--tol", cfg.tolerance, "residual pass threshold");
    homotopy->add_option("--tol-mass", tol_mass, "relative equal-mass tolerance");
    homotopy->add_option("--out", cfg.out_path, "write the report to a file");
    homotopy->add_flag("--no-timing", no_timing, "omit timing fields");

    CLI11_PARSE(app, argc, argv);
    cfg.include_timing = !no_timing;

    try {
        nlohmann::json report;
        if (check->parsed()) {
            report = hpt::cmd_check_dec(cfg);
        } else if (verify->parsed()) {
            report = hpt::cmd_verify(cfg);
        } else if (gaussian->parsed()) {
            report = hpt::cmd_gaussian(n_max, cfg.include_timing);
        } else {
            report = hpt::cmd_homotopy(f0_path, f1_path, homotopy_samples, cfg.tolerance,
                                       tol_mass, cfg.include_timing);
        }
        return emit(report, cfg.out_path);
    } catch (const hpt::MassError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hpt::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
