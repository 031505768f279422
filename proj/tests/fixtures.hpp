#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include "quadprime/sieve.hpp"

namespace testing_support {

// Tables are expensive at 1e6 and immutable, so each limit is built once per
// test binary.
inline const quadprime::SieveTable& table(std::uint64_t limit) {
  static std::map<std::uint64_t, std::unique_ptr<quadprime::SieveTable>> cache;
  auto& slot = cache[limit];
  if (!slot) slot = std::make_unique<quadprime::SieveTable>(quadprime::build_table(limit));
  return *slot;
}

}  // namespace testing_support
