#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>

#include "quadprime/cli/config.hpp"

namespace quadprime::cli {

enum class CurveQuantity {
  mertens,
  liouville_summatory,
  sum_lambda_over_phi,
  sum_mu_over_phi,
  sum_lambda_vonmangoldt,
  sum_mu_vonmangoldt,
  musq_drift,
  lambda_psi_quadratic,
  harmonic_sum_A,
  a0_phi_square,
};

CurveQuantity parse_curve_quantity(std::string_view name);
std::string_view to_string(CurveQuantity q);
// Whether the quantity reads the sieve table (then grid <= table_limit).
bool needs_table(CurveQuantity q);

struct CurveFiles {
  std::filesystem::path csv;
  std::filesystem::path json;  // empty unless the format is json
  std::filesystem::path script;
};

// Writes x,value rows (plus a JSON curve when the format is json) and a
// gnuplot script that plots the CSV. Data goes to config.output_path, or to
// <quantity>.csv in the working directory. Throws ParameterError on an empty
// grid and CapacityError when a table quantity asks past table_limit.
CurveFiles cmd_export_curve(CurveQuantity quantity, std::span<const std::uint64_t> grid, const RunConfig& config);

}  // namespace quadprime::cli
