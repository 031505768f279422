#pragma once

// On-disk cache of smallest-prime-factor arrays.
//
// File layout (all integers little-endian):
//   bytes 0..3   magic "SPF1"
//   bytes 4..7   u32 format version
//   bytes 8..15  u64 limit N
//   then N + 1 u32 entries, spf[0..N] (entries 0 and 1 are zero)

#include <cstdint>
#include <filesystem>
#include <optional>

#include "quadprime/sieve.hpp"

namespace quadprime {

inline constexpr std::uint32_t kSpfCacheVersion = 1;
inline constexpr const char* kCacheEnvVar = "QUADPRIME_CACHE";

std::filesystem::path spf_cache_path(const std::filesystem::path& dir, std::uint64_t limit);

void write_spf_cache(const std::filesystem::path& file, const SieveTable& table);

// Returns nullopt if the file is missing or carries a different limit or
// version. Throws DomainError on a truncated or corrupt file.
std::optional<SieveTable> read_spf_cache(const std::filesystem::path& file, std::uint64_t limit);

// Directory named by QUADPRIME_CACHE, if set and non-empty.
std::optional<std::filesystem::path> cache_dir_from_env();

// Reads the table from cache_dir when present, otherwise builds it and, if a
// directory was given, writes it there.
SieveTable load_or_build_table(std::uint64_t limit, const BuildOptions& options,
                               const std::optional<std::filesystem::path>& cache_dir);

}  // namespace quadprime
