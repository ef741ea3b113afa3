#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aqar/bounds.hpp"

namespace aqar::report {

enum class ClaimStatus { Verified, Violated, OutOfScope };
std::string_view to_string(ClaimStatus s);

struct ClaimInfo {
  std::string_view id;
  std::string_view statement;
  bool known_discrepancy = false;  // a violation here does not fail the run
};

std::span<const ClaimInfo> claim_registry();
/// Throws InvalidParams for ids outside the registry.
const ClaimInfo &claim_info(std::string_view id);

struct ClaimResult {
  std::string claim_id;
  ClaimStatus status = ClaimStatus::Verified;
  std::string notes;
  nlohmann::json witness;  // null unless violated
};

struct BoundCheck {
  std::string label;
  BigInt count;
  bounds::LogBound bound;
  bounds::Comparison comparison;
};

class TaskReport {
 public:
  explicit TaskReport(std::string task) : task_(std::move(task)) {}

  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  nlohmann::json timing = nlohmann::json::object();

  const std::string &task() const { return task_; }
  const std::vector<ClaimResult> &claims() const { return claims_; }
  const std::vector<BoundCheck> &bound_checks() const { return bound_checks_; }

  /// Throws InvalidParams for an unknown id or a violation without witness.
  void add_claim(std::string_view id, ClaimStatus status, std::string notes, nlohmann::json witness = nullptr);
  bounds::Verdict add_bound(std::string label, const BigInt &count, bounds::LogBound bound);

  /// Violations of claims not marked as known discrepancies.
  bool has_unexpected_violation() const;
  int exit_code() const { return has_unexpected_violation() ? 2 : 0; }

  nlohmann::json to_json(bool with_timing = false) const;
  std::string to_text(bool with_timing = false) const;

 private:
  std::string task_;
  std::vector<ClaimResult> claims_;
  std::vector<BoundCheck> bound_checks_;
};

/// Report for a failure before any result was produced (exit code 1).
nlohmann::json error_json(std::string_view task, std::string_view code, std::string_view message);

}  // namespace aqar::report
