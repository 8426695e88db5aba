// Batch verification commands and their machine-readable reports.
//
// Every command returns a JSON report (schema_version "1") that is
// deterministic for a fixed config and seed; wall-clock data lives under the
// single top-level "timing" key so consumers can strip it before comparing.
// Exit-code contract: 0 pass, 1 verification failure, 2 usage/input error.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hpt {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "1";

struct RunConfig {
    int grid_n = 32;
    int samples = 0;  // 0: choose per field (steady 5, transport 65/33)
    std::string field = "abc";
    std::string lemma = "euler";
    double A = 1.0, B = 1.0, C = 1.0;     // abc parameters
    double amplitude = 1.0;               // shear amplitude / transport profile
    std::array<double, 3> u0{0.5, 0.0, 0.0};  // transport velocity
    std::string manifest;                 // when set, load the fluid state from files
    double tolerance = 1e-8;
    double dec_tolerance = 1e-10;
    int kmax = 2;
    int trials = 20;
    uint64_t seed = 1;
    bool inject_mass_violation = false;
    bool flip_delta_sign = false;  // negative control for the adjointness check
    bool include_timing = true;
    std::string out_path;

    void validate() const;  // tolerances > 0, N a power of two
};

nlohmann::json cmd_check_dec(const RunConfig& cfg);
nlohmann::json cmd_verify(const RunConfig& cfg);
nlohmann::json cmd_gaussian(int n_max, bool include_timing = true);
nlohmann::json cmd_homotopy(const std::string& f0_path, const std::string& f1_path,
                            int samples = 11, double tolerance = 1e-8,
                            double tol_mass = 1e-10, bool include_timing = true);

// Report serialization with the timing key removed; used for byte-stable
// comparisons.
std::string report_without_timing(nlohmann::json report);

int exit_code_for(const nlohmann::json& report);  // 0 or 1 from report["pass"]

}  // namespace hpt
