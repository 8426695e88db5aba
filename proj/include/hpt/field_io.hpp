// Text file format for forms: header line "k N", then C(3,k) blocks of N^3
// whitespace-separated values in row-major order (x fastest).  Readers
// reject mismatched counts and trailing data.
//
// Fluid states load from a JSON manifest:
//   {"N": 32, "times": [...],
//    "samples": [{"rho": "rho0.txt", "u": "u0.txt", "p": "p0.txt"}, ...]}
// where rho and p files hold 0-forms and u files hold the flat 1-form.

#pragma once

#include <iosfwd>
#include <string>

#include "hpt/form.hpp"
#include "hpt/hrv_engine.hpp"

namespace hpt {

void write_form(std::ostream& out, const Form& f);
void write_form_file(const std::string& path, const Form& f);

Form read_form(std::istream& in, int dealias_factor = 1);
Form read_form_file(const std::string& path, int dealias_factor = 1);

FluidState read_fluid_manifest(const std::string& path);
void write_fluid_manifest(const std::string& directory, const std::string& stem,
                          const FluidState& state);

}  // namespace hpt
