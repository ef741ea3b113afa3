#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "aqar/limits.hpp"
#include "aqar/report.hpp"

/// The six acceptance criteria: classification counts reproduced by the
/// oracles, bound comparisons, and engine cross-checks.
namespace aqar::acceptance {

enum class Scale { Quick, Full };

enum class ItemStatus { Pass, Fail, Skip };
std::string_view to_string(ItemStatus s);

struct Item {
  std::string name;
  ItemStatus status = ItemStatus::Pass;
  std::string detail;
};

struct CriterionResult {
  unsigned id = 0;
  std::string title;
  std::vector<Item> items;
  double seconds = 0;

  bool passed() const;   // no item failed
  bool skipped() const;  // every item skipped
};

struct Options {
  Scale scale = Scale::Full;
  Limits limits;
  std::uint64_t seed = 2024;  // random S_6 subgroups
};

/// Quick scale leaves out the degree 8 search and GL(3, 2).  Items that hit
/// LimitExceeded or DegreeLimit are skipped.  Claims and bound comparisons go
/// into `report`.
CriterionResult run_criterion(unsigned id, const Options &options, report::TaskReport &report);
std::vector<CriterionResult> run_acceptance(const Options &options, report::TaskReport &report);

/// "criterion N: PASS|FAIL|SKIP  <title>  (k items[, s skipped])"
std::string summary_line(const CriterionResult &c);
nlohmann::json to_json(const CriterionResult &c, bool with_timing = false);

}  // namespace aqar::acceptance
