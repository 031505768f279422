#include "quadprime/cli/config.hpp"

#include <charconv>
#include <cstdlib>
#include <ctime>
#include <string>

#include "quadprime/errors.hpp"
#include "quadprime/spf_cache.hpp"

namespace quadprime::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::uint64_t parse_grid_point(std::string_view token) {
  const auto bad = [&] { return ParameterError("grid value '" + std::string(token) + "' is not a positive integer"); };
  if (token.empty()) throw bad();
  const std::size_t e = token.find_first_of("eE");
  std::uint64_t value = 0;
  if (e == std::string_view::npos) {
    if (!parse_number(token, value)) throw bad();
  } else {
    std::uint64_t mantissa = 0;
    unsigned exponent = 0;
    if (!parse_number(token.substr(0, e), mantissa) || !parse_number(token.substr(e + 1), exponent)) throw bad();
    value = mantissa;
    for (unsigned i = 0; i < exponent; ++i) {
      if (value > UINT64_MAX / 10) throw bad();
      value *= 10;
    }
  }
  if (value == 0) throw bad();
  return value;
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.workers == 0) throw ParameterError("--workers must be >= 1");
  if (config.table_limit < 2) throw ParameterError("--limit must be >= 2");
  if (config.prime_bound < 3) throw ParameterError("--prime-bound must be >= 3");
}

ClaimSet parse_claim_set(std::string_view name) {
  if (name == "identities") return ClaimSet::identities;
  if (name == "decomposition") return ClaimSet::decomposition;
  if (name == "constants") return ClaimSet::constants;
  if (name == "progressions") return ClaimSet::progressions;
  if (name == "quadratic") return ClaimSet::quadratic;
  if (name == "all") return ClaimSet::all;
  throw ParameterError("unknown claim set '" + std::string(name) + "'");
}

std::string_view to_string(ClaimSet s) {
  switch (s) {
    case ClaimSet::identities:
      return "identities";
    case ClaimSet::decomposition:
      return "decomposition";
    case ClaimSet::constants:
      return "constants";
    case ClaimSet::progressions:
      return "progressions";
    case ClaimSet::quadratic:
      return "quadratic";
    case ClaimSet::all:
      return "all";
  }
  return "all";
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ParameterError("unknown output format '" + std::string(name) + "' (csv or json)");
}

std::vector<std::uint64_t> parse_grid(std::string_view text) {
  std::vector<std::uint64_t> grid;
  if (trim(text).empty()) return grid;
  for (const auto token : split_commas(text)) grid.push_back(parse_grid_point(token));
  return grid;
}

std::uint64_t parse_count(std::string_view text) { return parse_grid_point(trim(text)); }

QuadraticPoly parse_polynomial(std::string_view text) {
  const auto parts = split_commas(text);
  std::int64_t coeffs[3];
  if (parts.size() != 3) throw ParameterError("--polynomial expects a,b,c");
  for (std::size_t i = 0; i < 3; ++i) {
    std::string_view p = parts[i];
    if (!p.empty() && p.front() == '+') p.remove_prefix(1);
    if (!parse_number(p, coeffs[i])) throw ParameterError("--polynomial: '" + std::string(parts[i]) + "' is not an integer");
  }
  try {
    return QuadraticPoly::make(coeffs[0], coeffs[1], coeffs[2]);
  } catch (const DomainError& e) {
    throw ParameterError(std::string("--polynomial: ") + e.what());
  }
}

std::string ledger_timestamp() {
  std::int64_t seconds = 0;
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH"); env != nullptr && *env != '\0') {
    if (!parse_number(std::string_view(env), seconds)) throw ParameterError("SOURCE_DATE_EPOCH is not an integer");
  }
  const std::time_t t = static_cast<std::time_t>(seconds);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

SieveTable load_table(const RunConfig& config, std::uint64_t limit) {
  BuildOptions options;
  options.workers = config.workers;
  return load_or_build_table(limit, options, config.cache_dir);
}

}  // namespace quadprime::cli
