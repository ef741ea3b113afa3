#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "aqar/groupmodel.hpp"
#include "aqar/limits.hpp"
#include "aqar/perm.hpp"

/// Brute-force oracles: conjugacy classes of variety subgroups of S_n, and
/// censuses of groups of a given order in A_p A_q A_r.
namespace aqar::enumerate {

struct ClassFilter {
  std::vector<std::uint64_t> chain;  // variety chain, outermost quotient last
  bool transitive = false;
  bool primitive = false;
};

struct InventoryClass {
  perm::PermGroup representative;
  BigInt order;
  std::vector<unsigned> signature;  // exponent of each chain prime in the order
  BigInt class_size;
};

struct ClassInventory {
  unsigned degree = 0;
  ClassFilter filter;
  std::string method;  // "exhaustive" or "regular-normal-subgroup"
  /// Restricted search only: regular elementary abelian subgroups found, and
  /// whether S_n permutes them transitively.
  std::size_t regular_subgroups = 0;
  bool regular_subgroups_conjugate = true;
  std::vector<InventoryClass> classes;

  BigInt total_subgroups() const;
};

/// Classes of subgroups of S_n in the variety, generated by elements whose
/// order is a chain prime, deduplicated by S_n-conjugacy.  Degrees up to 7 are
/// scanned exhaustively; degree 8 with the primitive flag uses the search over
/// overgroups of a regular elementary abelian subgroup.  Throws DegreeLimit.
ClassInventory enumerate_classes(unsigned n, const ClassFilter &filter, const Limits &limits = {});

/// n <= 8.
ClassInventory enumerate_primitive_classes(unsigned n, std::uint64_t q, std::uint64_t r, const Limits &limits = {});
/// n <= 6.
ClassInventory enumerate_transitive_classes(unsigned n, std::uint64_t q, std::uint64_t r, const Limits &limits = {});

nlohmann::json to_json(const ClassInventory &inv);

enum class Traversal { Forward, Reverse };

struct VarietyCensus {
  grp::VarietyParams params;
  std::vector<grp::CayleyGroup> groups;  // pairwise non-isomorphic, ordered by fingerprint
  std::size_t candidates = 0;           // tables built before deduplication

  std::size_t count() const { return groups.size(); }
};

/// Every group of order p^alpha q^beta r^gamma in A_p A_q A_r, built as
/// P x| (Q x| R) from all homomorphisms R -> GL(beta, q) and H -> GL(alpha, p),
/// deduplicated up to isomorphism.  Throws LimitExceeded.
VarietyCensus enumerate_variety_groups(const grp::VarietyParams &params, const Limits &limits = {},
                                       Traversal order = Traversal::Forward);

nlohmann::json to_json(const VarietyCensus &census);

}  // namespace aqar::enumerate
