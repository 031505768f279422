#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadprime/quadratic.hpp"
#include "quadprime/sieve.hpp"

namespace quadprime::cli {

enum class OutputFormat { csv, json };
enum class ClaimSet { identities, decomposition, constants, progressions, quadratic, all };

inline constexpr std::uint64_t kDefaultTableLimit = 2'000'000;
inline constexpr std::uint64_t kDefaultPrimeBound = 1'000'000;

struct RunConfig {
  std::uint64_t table_limit = kDefaultTableLimit;
  unsigned workers = 1;
  OutputFormat output_format = OutputFormat::json;
  std::filesystem::path output_path;  // empty: standard output
  std::optional<std::filesystem::path> cache_dir;
  std::vector<std::uint64_t> seed_grid;
  std::uint64_t prime_bound = kDefaultPrimeBound;
};

// Throws ParameterError on workers = 0 or table_limit < 2.
void validate(const RunConfig& config);

ClaimSet parse_claim_set(std::string_view name);
std::string_view to_string(ClaimSet s);
OutputFormat parse_output_format(std::string_view name);

// "100,1000,1e4": comma separated, integers or exact powers written as 1eK.
std::vector<std::uint64_t> parse_grid(std::string_view text);
// One positive integer, same syntax as a grid point.
std::uint64_t parse_count(std::string_view text);
// "a,b,c" -> a x^2 + b x + c
QuadraticPoly parse_polynomial(std::string_view text);

// ISO 8601 UTC from SOURCE_DATE_EPOCH, or the epoch itself when unset, so
// repeated runs produce identical bytes.
std::string ledger_timestamp();

// Loads or builds the table for config (cache directory honoured).
SieveTable load_table(const RunConfig& config, std::uint64_t limit);

}  // namespace quadprime::cli
