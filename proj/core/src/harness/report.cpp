#include "grpi/harness/report.hpp"

#include <algorithm>
#include <tuple>

namespace grpi::harness {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::pass_vacuous: return "pass-vacuous";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

VerificationRecord skipped_record(std::string claim_id, std::string group_name,
                                  std::uint64_t prime, std::string reason) {
  VerificationRecord r;
  r.claim_id = std::move(claim_id);
  r.group_name = std::move(group_name);
  r.prime = prime;
  r.witness = {{"reason", std::move(reason)}};
  r.status = Status::skipped;
  return r;
}

nlohmann::ordered_json to_json(const VerificationRecord& r) {
  // ordered_json keeps the declared field order in the output.
  nlohmann::ordered_json j;
  j["claim_id"] = r.claim_id;
  j["group_name"] = r.group_name;
  j["prime"] = r.prime;
  j["normal_subgroup_fingerprint"] = r.normal_subgroup_fingerprint;
  j["hypothesis_held"] = r.hypothesis_held;
  j["conclusion_held"] = r.conclusion_held;
  j["witness"] = r.witness;
  j["status"] = to_string(r.status);
  return j;
}

void sort_records(std::vector<VerificationRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return std::tie(a.claim_id, a.group_name, a.prime, a.normal_subgroup_fingerprint) <
           std::tie(b.claim_id, b.group_name, b.prime, b.normal_subgroup_fingerprint);
  });
}

std::string report_json(std::span<const VerificationRecord> records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

bool has_failures(std::span<const VerificationRecord> records) {
  return std::any_of(records.begin(), records.end(),
                     [](const auto& r) { return r.status == Status::fail; });
}

}  // namespace grpi::harness
