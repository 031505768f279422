#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace quadprime {

// A truncated Euler product or series together with how far it was taken
// and how much is left out.
struct ConstantEstimate {
  std::string name;
  double value = 0.0;
  std::uint64_t truncation_point = 0;  // largest prime (products) or index (series) included
  double tail_estimate = 0.0;          // >= 0
  bool tail_is_heuristic = false;      // true when tail_estimate is not a proven bound
  std::optional<double> reference_value;
  bool converged = false;  // tail_estimate < requested tolerance
  // Partial values at every power of ten up to the truncation point.
  std::vector<std::pair<std::uint64_t, double>> checkpoints;
};

// {"name", "value", "P", "tail_estimate", "tail_heuristic", "paper_value",
//  "converged", "checkpoints"}; paper_value is null when absent.
nlohmann::json to_json(const ConstantEstimate& c);

}  // namespace quadprime
