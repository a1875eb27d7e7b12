#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "piezoscan/scanner.hpp"
#include "piezoscan/sweep.hpp"

namespace piezoscan::cli {

/// 9 significant digits, '.' separator, shortest of fixed/exponent form.
/// Zero (either sign) renders as "0"; NaN as "nan".
std::string format_number(double value);

/// Header `x_um,y_um`.
std::string profile_csv(const std::vector<ProfilePoint>& profile);

/// Header `phi_deg,y_max_um,x_at_ymax_um,F_uN,R_A_uN,rigidity_Nm2`.
std::string model_csv(const ScannerSolution& solution);

/// Header `param_name,param_value_si,phi_deg,y_max_um,F_uN,R_A_uN,status`.
std::string sweep_csv(SweepAxis axis, const std::vector<SweepRecord>& records);

/// Writes through a temporary file in the destination directory and renames
/// it into place. Throws std::runtime_error on failure; the destination is
/// untouched in that case.
void write_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace piezoscan::cli
