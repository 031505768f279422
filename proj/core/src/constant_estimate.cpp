#include "quadprime/constant_estimate.hpp"

namespace quadprime {

nlohmann::json to_json(const ConstantEstimate& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["value"] = c.value;
  j["P"] = c.truncation_point;
  j["tail_estimate"] = c.tail_estimate;
  j["tail_heuristic"] = c.tail_is_heuristic;
  j["paper_value"] = c.reference_value ? nlohmann::json(*c.reference_value) : nlohmann::json(nullptr);
  j["converged"] = c.converged;
  auto& cp = j["checkpoints"] = nlohmann::json::array();
  for (const auto& [p, v] : c.checkpoints) cp.push_back({p, v});
  return j;
}

}  // namespace quadprime
