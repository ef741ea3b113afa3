#include "aqar/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "aqar/error.hpp"

namespace aqar::report {

namespace {

constexpr std::array registry{
    ClaimInfo{"prime-degree-cyclic-primitive", "S_n has a primitive A_r subgroup if and only if n = r"},
    ClaimInfo{"primitive-affine-order",
              "a primitive A_q A_r subgroup of S_n with n not in {q, r} has n = q^(ord_r q) and order n r"},
    ClaimInfo{"primitive-single-class",
              "primitive A_q A_r subgroups of S_n of a given order form a single conjugacy class"},
    ClaimInfo{"primitive-minimal-normal",
              "a primitive A_q A_r group has a unique minimal normal subgroup, equal to its Fitting subgroup, "
              "of order n"},
    ClaimInfo{"gl-elementary-abelian-single-class",
              "maximal elementary abelian r-subgroups of GL(alpha, s) form at most one conjugacy class"},
    ClaimInfo{"gl-elementary-abelian-absent-when-order-not-dividing",
              "GL(alpha, s) has no elementary abelian r-subgroup when d = ord_r(s) does not divide alpha", true},
    ClaimInfo{"gl-block-singer-construction",
              "block-diagonal powers of Singer cycles realize the maximal elementary abelian r-subgroup class"},
    ClaimInfo{"linear-order-bound",
              "an A_q A_r subgroup of GL(alpha, s) has order at most (6^(1/2))^(alpha-1) min(qr, s)^alpha"},
    ClaimInfo{"primitive-linear-fitting-order",
              "a primitive A_q A_r subgroup G of GL(alpha, s) has m = |F(G)| in {r, q, qr}, c = ord_m(s) dividing "
              "alpha, and |G| at most c m"},
    ClaimInfo{"soluble-a-order-bound", "a soluble A-subgroup of S_n has order at most (6^(1/2))^(n-1)"},
    ClaimInfo{"transitive-count-bound",
              "S_n has at most 6^(n(n-1)/4) 2^((n+2) log n) transitive A_q A_r subgroups"},
    ClaimInfo{"gl-class-count-bound",
              "GL(alpha, s) has at most s^(5 alpha^2) 6^(alpha(alpha-1)/4) 2^(alpha-1+(23/6) alpha log alpha+alpha "
              "log 6) classes of maximal A_q A_r subgroups"},
    ClaimInfo{"census-bound", "the number of groups of order n = p^a q^b r^c in A_p A_q A_r is at most "
                              "p^(6a^2) 2^(a-1+(23/6)a log a+a log 6) (6^(1/2))^((a+c)b+(a+b)c+a(a-1)/2) n^(b+c)"},
    ClaimInfo{"census-sylow-system", "every group in A_p A_q A_r has a Sylow system"},
    ClaimInfo{"non-explicit-constant-bounds",
              "class-count bounds with the constants b, c are not numerically evaluable"},
    ClaimInfo{"engine-consistency", "engine results agree with the brute-force reference implementations"},
};

}  // namespace

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Verified: return "verified";
    case ClaimStatus::Violated: return "violated";
    case ClaimStatus::OutOfScope: return "out_of_scope";
  }
  return "?";
}

std::span<const ClaimInfo> claim_registry() { return registry; }

const ClaimInfo &claim_info(std::string_view id) {
  const auto it = std::find_if(registry.begin(), registry.end(), [&](const ClaimInfo &c) { return c.id == id; });
  if (it == registry.end()) throw Error(ErrorCode::InvalidParams, "unknown claim id " + std::string(id));
  return *it;
}

void TaskReport::add_claim(std::string_view id, ClaimStatus status, std::string notes, nlohmann::json witness) {
  claim_info(id);
  if (status == ClaimStatus::Violated && witness.is_null())
    throw Error(ErrorCode::InvalidParams, "violated claim " + std::string(id) + " needs a witness");
  claims_.push_back({std::string(id), status, std::move(notes), std::move(witness)});
}

bounds::Verdict TaskReport::add_bound(std::string label, const BigInt &count, bounds::LogBound bound) {
  const auto cmp = bounds::compare(count, bound);
  bound_checks_.push_back({std::move(label), count, std::move(bound), cmp});
  return cmp.verdict;
}

bool TaskReport::has_unexpected_violation() const {
  return std::any_of(claims_.begin(), claims_.end(), [](const ClaimResult &c) {
    return c.status == ClaimStatus::Violated && !claim_info(c.claim_id).known_discrepancy;
  });
}

nlohmann::json TaskReport::to_json(bool with_timing) const {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto &c : claims_) {
    nlohmann::json j{{"claim_id", c.claim_id},
                     {"status", to_string(c.status)},
                     {"statement", claim_info(c.claim_id).statement},
                     {"known_discrepancy", claim_info(c.claim_id).known_discrepancy},
                     {"notes", c.notes}};
    if (!c.witness.is_null()) j["witness"] = c.witness;
    claims.push_back(std::move(j));
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const auto &b : bound_checks_)
    checks.push_back({{"label", b.label},
                      {"count", b.count.str()},
                      {"bound", bounds::to_json(b.bound)},
                      {"verdict", bounds::to_string(b.comparison.verdict)},
                      {"method", b.comparison.method}});
  nlohmann::json out{{"task", task_},
                     {"parameters", parameters},
                     {"results", results},
                     {"bound_checks", checks},
                     {"claims", claims},
                     {"exit_code", exit_code()}};
  if (with_timing) out["timing"] = timing;
  return out;
}

std::string TaskReport::to_text(bool with_timing) const {
  std::ostringstream out;
  out << "task: " << task_ << "\n";
  for (const auto &[k, v] : parameters.items()) out << "  " << k << " = " << v.dump() << "\n";
  for (const auto &[k, v] : results.items()) {
    const auto text = v.dump();
    out << "result " << k << ": " << (text.size() > 200 ? text.substr(0, 200) + "..." : text) << "\n";
  }
  for (const auto &b : bound_checks_) {
    const auto iv = bounds::log2_interval(b.bound);
    out << "bound " << b.label << ": count " << b.count << " vs 2^[" << iv.lower << ", " << iv.upper << "] ("
        << b.bound.formula_id() << ") -> " << bounds::to_string(b.comparison.verdict) << " by "
        << b.comparison.method << "\n";
  }
  for (const auto &c : claims_) {
    out << "claim " << c.claim_id << ": " << to_string(c.status);
    if (claim_info(c.claim_id).known_discrepancy && c.status == ClaimStatus::Violated) out << " (known discrepancy)";
    if (!c.notes.empty()) out << " - " << c.notes;
    if (!c.witness.is_null()) out << " witness " << c.witness.dump();
    out << "\n";
  }
  if (with_timing)
    for (const auto &[k, v] : timing.items()) out << "time " << k << ": " << v.dump() << " s\n";
  out << "exit code: " << exit_code() << "\n";
  return out.str();
}

nlohmann::json error_json(std::string_view task, std::string_view code, std::string_view message) {
  return {{"task", task}, {"error", {{"code", code}, {"message", message}}}, {"exit_code", 1}};
}

}  // namespace aqar::report
