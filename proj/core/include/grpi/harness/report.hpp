#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace grpi::harness {

/// pass_vacuous: every examined tuple had a false hypothesis.
enum class Status { pass, pass_vacuous, fail, skipped };

std::string_view to_string(Status s);

struct VerificationRecord {
  std::string claim_id;
  std::string group_name;
  std::uint64_t prime = 0;  // 0 when the claim involves no prime
  std::string normal_subgroup_fingerprint;
  bool hypothesis_held = false;
  bool conclusion_held = false;
  nlohmann::json witness;  // null when absent; skips carry {"reason": ...}
  Status status = Status::pass;
};

VerificationRecord skipped_record(std::string claim_id, std::string group_name,
                                  std::uint64_t prime, std::string reason);

nlohmann::ordered_json to_json(const VerificationRecord& r);

/// Stable sort by (claim_id, group_name, prime, normal_subgroup_fingerprint).
void sort_records(std::vector<VerificationRecord>& records);

/// Pretty-printed JSON array, trailing newline; byte-stable for equal input.
std::string report_json(std::span<const VerificationRecord> records);

bool has_failures(std::span<const VerificationRecord> records);

}  // namespace grpi::harness
