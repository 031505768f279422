#include "quadprime/spf_cache.hpp"

#include <array>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "quadprime/errors.hpp"

namespace quadprime {

namespace {

constexpr std::array<char, 4> kMagic{'S', 'P', 'F', '1'};

template <typename T>
void put_le(std::ostream& out, T v) {
  std::array<char, sizeof(T)> bytes{};
  for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(const unsigned char* p) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(p[i]) << (8 * i);
  return v;
}

}  // namespace

std::filesystem::path spf_cache_path(const std::filesystem::path& dir, std::uint64_t limit) {
  return dir / ("spf_" + std::to_string(limit) + "_v" + std::to_string(kSpfCacheVersion) + ".bin");
}

void write_spf_cache(const std::filesystem::path& file, const SieveTable& table) {
  const auto tmp = std::filesystem::path(file).concat(".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + tmp.string());
    out.write(kMagic.data(), kMagic.size());
    put_le<std::uint32_t>(out, kSpfCacheVersion);
    put_le<std::uint64_t>(out, table.limit());
    std::vector<char> buf;
    buf.reserve(4 * 4096);
    const auto spf = table.spf_data();
    for (std::size_t i = 0; i < spf.size(); ++i) {
      const std::uint32_t v = i < 2 ? 0 : spf[i];
      for (int b = 0; b < 4; ++b) buf.push_back(static_cast<char>((v >> (8 * b)) & 0xFF));
      if (buf.size() >= 4 * 4096) {
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        buf.clear();
      }
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw std::runtime_error("failed writing cache file: " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

std::optional<SieveTable> read_spf_cache(const std::filesystem::path& file, std::uint64_t limit) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::array<unsigned char, 16> header{};
  in.read(reinterpret_cast<char*>(header.data()), header.size());
  if (in.gcount() != static_cast<std::streamsize>(header.size()) ||
      std::memcmp(header.data(), kMagic.data(), kMagic.size()) != 0) {
    throw DomainError("not an SPF cache file: " + file.string());
  }
  const auto version = get_le<std::uint32_t>(header.data() + 4);
  const auto stored_limit = get_le<std::uint64_t>(header.data() + 8);
  if (version != kSpfCacheVersion || stored_limit != limit) return std::nullopt;

  std::vector<unsigned char> raw((limit + 1) * 4);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
    throw DomainError("truncated SPF cache file: " + file.string());
  }
  std::vector<std::uint32_t> spf(limit + 1);
  for (std::size_t i = 0; i < spf.size(); ++i) spf[i] = get_le<std::uint32_t>(raw.data() + 4 * i);
  return SieveTable::from_spf(std::move(spf), BuildOptions{}.segment_size);
}

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* v = std::getenv(kCacheEnvVar);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::filesystem::path(v);
}

SieveTable load_or_build_table(std::uint64_t limit, const BuildOptions& options,
                               const std::optional<std::filesystem::path>& cache_dir) {
  if (!cache_dir) return build_table(limit, options);
  const auto file = spf_cache_path(*cache_dir, limit);
  if (auto cached = read_spf_cache(file, limit)) return std::move(*cached);
  auto table = build_table(limit, options);
  std::filesystem::create_directories(*cache_dir);
  write_spf_cache(file, table);
  return table;
}

}  // namespace quadprime
