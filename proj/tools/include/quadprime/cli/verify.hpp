#pragma once

#include <cstdint>

#include "quadprime/claims.hpp"
#include "quadprime/cli/config.hpp"
#include "quadprime/sieve.hpp"

namespace quadprime::cli {

// Smallest table limit the claim set reads from.
std::uint64_t required_table_limit(ClaimSet set);

// Runs every scan of the set at its default scale. Throws CapacityError
// before any computation when config.table_limit is too small.
ClaimsLedger cmd_verify(ClaimSet set, const RunConfig& config);
// Same, reusing a table that already covers required_table_limit(set).
ClaimsLedger cmd_verify(ClaimSet set, const RunConfig& config, const SieveTable& table);

// Ledger bytes in the configured format.
std::string render_ledger(const ClaimsLedger& ledger, OutputFormat format);

}  // namespace quadprime::cli
