#ifndef HYBRIDCOOL_IO_HPP_
#define HYBRIDCOOL_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hybridcool/params.hpp"
#include "hybridcool/sweep.hpp"

namespace hybridcool {
namespace io {

// JSON loaders with strict key checking: unknown fields are rejected with
// the offending name. Frequency-valued fields accept a "<name>_Hz"
// alternative (value multiplied by 2*pi on load); giving a field in both
// forms is an error. All loaders run the target's validate() before
// returning. Errors are std::runtime_error with a human-readable message.
params::PhysicalParams load_physical_params(const std::string& path);
params::ReducedParams load_reduced_params(const std::string& path);
sweep::SweepGrid load_sweep_grid(const std::string& path);

// Same parsers on in-memory text (exposed for tests).
params::PhysicalParams physical_params_from_json(const std::string& text);
params::ReducedParams reduced_params_from_json(const std::string& text);
sweep::SweepGrid sweep_grid_from_json(const std::string& text);

// Full-precision decimal float (round-trips to the same bits); non-finite
// values print "nan", "inf", "-inf".
std::string format_double(double v);

// CSV: two '#' metadata lines (tool version; grid/params/seed as one-line
// JSON), then the fixed header row
//   cm,ca,c,g_over_omega,stable,var_num_g0,var_num_gopt,var_weak,
//   var_strong,g_opt,g_opt0,gain_ratio,regime,status,err_est
// and one '\n'-terminated row per cell, row-major by (y, x).
std::string sweep_csv(const sweep::SweepResult& result, std::uint64_t seed = 0);

// JSON mirror: {"metadata": {...}, "cells": [{...}, ...]} with identical
// field names; non-finite numbers are emitted as null.
std::string sweep_json(const sweep::SweepResult& result, std::uint64_t seed = 0);

// Parses sweep_csv output back into cells (numeric columns plus regime and
// status; grid indices are not encoded in the CSV and stay zero).
std::vector<sweep::SweepCell> read_sweep_csv(std::istream& is);

// Writes text verbatim (binary mode); throws std::runtime_error on failure.
void save_text(const std::string& path, const std::string& text);

}  // namespace io
}  // namespace hybridcool

#endif  // HYBRIDCOOL_IO_HPP_
