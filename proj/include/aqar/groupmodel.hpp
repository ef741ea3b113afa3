#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "aqar/limits.hpp"
#include "aqar/matgrp.hpp"
#include "aqar/numeric.hpp"
#include "aqar/perm.hpp"

/// Abstract finite groups given by multiplication tables.
namespace aqar::grp {

using Index = std::uint32_t;
/// A subset of a CayleyGroup as a sorted list of element indices.
using Subset = std::vector<Index>;

class CayleyGroup {
 public:
  /// Validates the Latin property, the identity, and associativity (all
  /// triples up to order 200, 20000 seeded samples above).
  CayleyGroup(std::vector<std::vector<Index>> table, Index identity, std::vector<std::string> labels = {});

  static CayleyGroup cyclic(std::size_t n);

  std::size_t order() const { return n_; }
  Index identity() const { return identity_; }
  Index mul(Index a, Index b) const { return table_[a * n_ + b]; }
  Index inv(Index a) const { return inverse_[a]; }
  Index pow(Index a, std::uint64_t e) const;
  Index commutator(Index a, Index b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Index conjugate(Index a, Index x) const { return mul(mul(inv(x), a), x); }  // x^-1 a x
  std::uint64_t element_order(Index a) const { return orders_[a]; }
  std::uint64_t exponent() const;

  /// Greedy generating set, preferring elements of larger order.
  const std::vector<Index> &generators() const { return generators_; }
  const std::vector<std::string> &labels() const { return labels_; }
  std::vector<std::vector<Index>> table() const;
  Subset all() const;

 private:
  std::size_t n_;
  Index identity_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<Index> generators_;
  std::vector<std::string> labels_;
};

CayleyGroup direct_product(const CayleyGroup &a, const CayleyGroup &b);

Subset generated(const CayleyGroup &g, std::span<const Index> gens);
Subset normal_closure(const CayleyGroup &g, std::span<const Index> gens);
bool is_subgroup(const CayleyGroup &g, const Subset &h);
bool is_normal(const CayleyGroup &g, const Subset &n);
bool is_abelian(const CayleyGroup &g, const Subset &h);
std::uint64_t exponent(const CayleyGroup &g, const Subset &h);
Subset center(const CayleyGroup &g);
Subset derived_subgroup(const CayleyGroup &g);
Subset conjugate_subset(const CayleyGroup &g, const Subset &h, Index x);
/// The set product AB, sorted.
Subset product_set(const CayleyGroup &g, const Subset &a, const Subset &b);
Subset intersect(const Subset &a, const Subset &b);

/// Table of h with elements relabelled 0..|h|-1 in ascending index order.
CayleyGroup subgroup_table(const CayleyGroup &g, const Subset &h);
/// Cosets ordered by least element.  Throws NotNormal.
CayleyGroup quotient(const CayleyGroup &g, const Subset &n);

/// Smallest normal subgroup with quotient abelian of exponent dividing r.
Subset verbal_ar_subgroup(const CayleyGroup &g, std::uint64_t r);
/// Chain [c0, ..., cm] means A_c0 A_c1 ... A_cm (outermost quotient last).
bool in_variety(const CayleyGroup &g, std::span<const std::uint64_t> chain);

struct Fingerprint {
  std::size_t order = 0;
  std::map<std::uint64_t, std::size_t> order_histogram;
  std::size_t center = 0;
  std::size_t derived = 0;
  std::uint64_t exponent = 0;
  std::map<std::uint64_t, std::size_t> abelianization_histogram;

  bool operator==(const Fingerprint &) const = default;
  auto operator<=>(const Fingerprint &) const = default;
};

Fingerprint fingerprint(const CayleyGroup &g);
nlohmann::json to_json(const Fingerprint &f);

/// Fingerprint comparison, then generator-image backtracking.
bool are_isomorphic(const CayleyGroup &a, const CayleyGroup &b, const Limits &limits = {});
std::optional<std::vector<Index>> find_isomorphism(const CayleyGroup &a, const CayleyGroup &b,
                                                   const Limits &limits = {});

/// Every subgroup, by repeated single-element extension from the trivial group.
std::vector<Subset> all_subgroups(const CayleyGroup &g, const Limits &limits = {});

Subset sylow_subgroup(const CayleyGroup &g, std::uint64_t u);

/// Product of the O_u(G), each the core of a Sylow u-subgroup.
Subset fitting_subgroup(const CayleyGroup &g);

struct SylowSystem {
  std::vector<std::uint64_t> primes;
  std::vector<Subset> subgroups;
};

/// Pairwise permutable Sylow subgroups, one per prime divisor.  With a seed the
/// candidate conjugates are visited in a shuffled order.  Throws NoSystemFound.
SylowSystem sylow_system(const CayleyGroup &g, std::optional<std::uint64_t> seed = std::nullopt);
bool permutable(const CayleyGroup &g, const Subset &a, const Subset &b);

/// Tables over the sorted element list.  Throws LimitExceeded above
/// limits.cayley_order.
CayleyGroup cayley_from(const perm::PermGroup &g, const Limits &limits = {});
CayleyGroup cayley_from(const mat::MatGroup &g, const Limits &limits = {});

struct VarietyParams {
  std::uint64_t p = 0, q = 0, r = 0;
  unsigned alpha = 0, beta = 0, gamma = 0;

  /// Throws InvalidParams unless p, q, r are distinct primes.
  void validate() const;
  BigInt n() const;
  std::vector<std::uint64_t> chain() const { return {p, q, r}; }
};

nlohmann::json to_json(const VarietyParams &v);

// JSON: {order, identity, table: [[...], ...]}
nlohmann::json to_json(const CayleyGroup &g);
CayleyGroup cayley_from_json(const nlohmann::json &j);

}  // namespace aqar::grp
