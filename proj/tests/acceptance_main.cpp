// Runs the six acceptance criteria at full scale; one line per criterion.
#include <iostream>

#include "aqar/acceptance.hpp"

int main() {
  aqar::report::TaskReport report("acceptance");
  aqar::acceptance::Options options;
  options.scale = aqar::acceptance::Scale::Full;
  bool all = true;
  for (unsigned id = 1; id <= 6; ++id) {
    const auto c = aqar::acceptance::run_criterion(id, options, report);
    std::cout << aqar::acceptance::summary_line(c) << "  [" << c.seconds << " s]\n";
    for (const auto &item : c.items)
      if (item.status != aqar::acceptance::ItemStatus::Pass)
        std::cout << "    " << to_string(item.status) << " " << item.name << ": " << item.detail << "\n";
    all = all && c.passed() && !c.skipped();
  }
  for (const auto &claim : report.claims())
    if (claim.status == aqar::report::ClaimStatus::Violated)
      std::cout << "known discrepancy " << claim.claim_id << ": " << claim.notes << "\n";
  return all && !report.has_unexpected_violation() ? 0 : 1;
}
