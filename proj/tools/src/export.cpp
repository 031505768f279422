#include "quadprime/cli/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <variant>

#include "quadprime/errors.hpp"
#include "quadprime/partial_sums.hpp"
#include "quadprime/quadratic.hpp"

namespace quadprime::cli {

namespace {

using u64 = std::uint64_t;
using Value = std::variant<std::int64_t, double>;

constexpr std::pair<CurveQuantity, std::string_view> kNames[] = {
    {CurveQuantity::mertens, "mertens"},
    {CurveQuantity::liouville_summatory, "liouville_summatory"},
    {CurveQuantity::sum_lambda_over_phi, "sum_lambda_over_phi"},
    {CurveQuantity::sum_mu_over_phi, "sum_mu_over_phi"},
    {CurveQuantity::sum_lambda_vonmangoldt, "sum_lambda_vonmangoldt"},
    {CurveQuantity::sum_mu_vonmangoldt, "sum_mu_vonmangoldt"},
    {CurveQuantity::musq_drift, "musq_drift"},
    {CurveQuantity::lambda_psi_quadratic, "lambda_psi_quadratic"},
    {CurveQuantity::harmonic_sum_A, "harmonic_sum_A"},
    {CurveQuantity::a0_phi_square, "a0_phi_square"},
};

Value evaluate(CurveQuantity q, const SieveTable* t, u64 x, unsigned workers) {
  switch (q) {
    case CurveQuantity::mertens:
      return mertens(*t, x);
    case CurveQuantity::liouville_summatory:
      return liouville_summatory(*t, x);
    case CurveQuantity::sum_lambda_over_phi:
      return sum_lambda_over_phi(*t, x);
    case CurveQuantity::sum_mu_over_phi:
      return sum_mu_over_phi(*t, x);
    case CurveQuantity::sum_lambda_vonmangoldt:
      return sum_lambda_vonmangoldt(*t, x);
    case CurveQuantity::sum_mu_vonmangoldt:
      return sum_mu_vonmangoldt(*t, x);
    case CurveQuantity::musq_drift:
      return sum_musq_over_phi(*t, x).drift;
    case CurveQuantity::lambda_psi_quadratic:
      return lambda_psi_quadratic(x, workers);
    case CurveQuantity::harmonic_sum_A:
      return harmonic_sum_A(x);
    case CurveQuantity::a0_phi_square:
      return a0_phi_square_sum(x).value;
  }
  return 0.0;
}

std::string format(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v));
  return buf;
}

double as_double(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  return std::get<double>(v);
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << bytes;
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

}  // namespace

CurveQuantity parse_curve_quantity(std::string_view name) {
  for (const auto& [q, n] : kNames) {
    if (n == name) return q;
  }
  std::string known;
  for (const auto& [q, n] : kNames) known += (known.empty() ? "" : ", ") + std::string(n);
  throw ParameterError("unknown quantity '" + std::string(name) + "' (one of " + known + ")");
}

std::string_view to_string(CurveQuantity q) {
  for (const auto& [k, n] : kNames) {
    if (k == q) return n;
  }
  return "unknown";
}

bool needs_table(CurveQuantity q) {
  return q != CurveQuantity::lambda_psi_quadratic && q != CurveQuantity::harmonic_sum_A &&
         q != CurveQuantity::a0_phi_square;
}

CurveFiles cmd_export_curve(CurveQuantity quantity, std::span<const std::uint64_t> grid, const RunConfig& config) {
  validate(config);
  if (grid.empty()) throw ParameterError("export needs a non-empty --grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) throw ParameterError("--grid must be strictly increasing");
  }
  const u64 x_max = grid.back();
  std::optional<SieveTable> table;
  if (needs_table(quantity)) {
    if (x_max > config.table_limit) {
      throw CapacityError("grid point " + std::to_string(x_max) + " exceeds --limit " +
                          std::to_string(config.table_limit));
    }
    table = load_table(config, std::max<u64>(x_max, 2));
  }

  const std::string name(to_string(quantity));
  std::vector<double> values;
  std::string csv = "x," + name + "\n";
  for (const u64 x : grid) {
    const Value v = evaluate(quantity, table ? &*table : nullptr, x, config.workers);
    csv += std::to_string(x) + "," + format(v) + "\n";
    values.push_back(as_double(v));
  }

  CurveFiles files;
  std::filesystem::path base = config.output_path.empty() ? std::filesystem::path(name + ".csv") : config.output_path;
  if (config.output_format == OutputFormat::json) {
    files.json = base;
    if (files.json.extension() != ".json") files.json.replace_extension(".json");
    files.csv = files.json;
    files.csv.replace_extension(".csv");
    nlohmann::json j = to_json(make_curve(grid, values));
    j["quantity"] = name;
    write_file(files.json, j.dump(2) + "\n");
  } else {
    files.csv = base;
  }
  write_file(files.csv, csv);

  files.script = files.csv;
  files.script.replace_extension(".gp");
  std::string gp;
  gp += "# gnuplot script for " + files.csv.filename().string() + "\n";
  gp += "set datafile separator \",\"\n";
  gp += "set key off\n";
  gp += "set logscale x\n";
  gp += "set xlabel \"x\"\n";
  gp += "set ylabel \"" + name + "\"\n";
  gp += "plot \"" + files.csv.filename().string() + "\" using 1:2 skip 1 with linespoints\n";
  write_file(files.script, gp);
  return files;
}

}  // namespace quadprime::cli
