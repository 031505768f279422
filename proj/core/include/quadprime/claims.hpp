#pragma once

// Machine-checkable verdicts and the ledger that aggregates them.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace quadprime {

enum class ClaimStatus { verified, falsified, indeterminate };

std::string_view to_string(ClaimStatus s);

struct ClaimVerdict {
  std::string claim_id;
  std::string statement;  // plain-language form of the claim under test
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json computed = nlohmann::json::object();
  std::string expected;
  ClaimStatus status = ClaimStatus::indeterminate;
  // A falsification that is already known and explained (an open question
  // about the claim itself). Does not count toward a failing exit status.
  bool documented = false;
  std::string note;
};

nlohmann::json to_json(const ClaimVerdict& v, std::string_view timestamp);

inline constexpr int kLedgerVersion = 1;

class ClaimsLedger {
 public:
  // Throws ParameterError if (claim_id, inputs) is already present.
  void add(ClaimVerdict verdict);

  const std::vector<ClaimVerdict>& entries() const { return entries_; }
  std::size_t count(ClaimStatus s) const;
  bool has_undocumented_falsification() const;

  // {"ledger_version": 1, "timestamp": ..., "entries": [...]}; entry order is
  // insertion order.
  nlohmann::json to_json(std::string_view timestamp) const;
  // claim_id,status,documented,inputs,computed,expected
  std::string to_csv() const;

 private:
  std::vector<ClaimVerdict> entries_;
};

}  // namespace quadprime
