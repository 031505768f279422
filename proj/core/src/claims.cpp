#include "quadprime/claims.hpp"

#include <algorithm>
#include <sstream>

#include "quadprime/errors.hpp"

namespace quadprime {

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::verified:
      return "verified";
    case ClaimStatus::falsified:
      return "falsified";
    case ClaimStatus::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

nlohmann::json to_json(const ClaimVerdict& v, std::string_view timestamp) {
  nlohmann::json j;
  j["claim_id"] = v.claim_id;
  j["statement"] = v.statement;
  j["inputs"] = v.inputs;
  j["computed"] = v.computed;
  j["expected"] = v.expected;
  j["status"] = std::string(to_string(v.status));
  j["documented"] = v.documented;
  if (!v.note.empty()) j["note"] = v.note;
  j["timestamp"] = std::string(timestamp);
  return j;
}

void ClaimsLedger::add(ClaimVerdict verdict) {
  const bool dup = std::any_of(entries_.begin(), entries_.end(), [&](const ClaimVerdict& e) {
    return e.claim_id == verdict.claim_id && e.inputs == verdict.inputs;
  });
  if (dup) throw ParameterError("duplicate ledger entry: " + verdict.claim_id + " " + verdict.inputs.dump());
  entries_.push_back(std::move(verdict));
}

std::size_t ClaimsLedger::count(ClaimStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [s](const ClaimVerdict& e) { return e.status == s; }));
}

bool ClaimsLedger::has_undocumented_falsification() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const ClaimVerdict& e) {
    return e.status == ClaimStatus::falsified && !e.documented;
  });
}

nlohmann::json ClaimsLedger::to_json(std::string_view timestamp) const {
  nlohmann::json j;
  j["ledger_version"] = kLedgerVersion;
  j["timestamp"] = std::string(timestamp);
  j["summary"] = {{"verified", count(ClaimStatus::verified)},
                  {"falsified", count(ClaimStatus::falsified)},
                  {"indeterminate", count(ClaimStatus::indeterminate)}};
  auto& arr = j["entries"] = nlohmann::json::array();
  for (const auto& e : entries_) arr.push_back(quadprime::to_json(e, timestamp));
  return j;
}

namespace {
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string ClaimsLedger::to_csv() const {
  std::ostringstream out;
  out << "claim_id,status,documented,inputs,computed,expected\n";
  for (const auto& e : entries_) {
    out << csv_field(e.claim_id) << ',' << to_string(e.status) << ',' << (e.documented ? 1 : 0) << ','
        << csv_field(e.inputs.dump()) << ',' << csv_field(e.computed.dump()) << ',' << csv_field(e.expected)
        << '\n';
  }
  return out.str();
}

}  // namespace quadprime
