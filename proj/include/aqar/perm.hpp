#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aqar/limits.hpp"
#include "aqar/numeric.hpp"

namespace aqar::perm {

/// Points are 0-based internally; every external surface (JSON, cycle
/// strings, block witnesses, orbits) is 1-based.
using Point = std::uint16_t;

/// A bijection of {0, ..., n-1}.  Products compose left to right:
/// (a * b)(x) = b(a(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(unsigned degree);  // identity

  static Perm from_images(const std::vector<unsigned> &one_based);
  static Perm from_cycles(unsigned degree, const std::vector<std::vector<unsigned>> &one_based_cycles);
  /// Parses "(1 2 3)(4 5)", "(1,2,3)" or "()" on `degree` points.
  static Perm parse_cycles(unsigned degree, std::string_view text);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point> &images() const { return images_; }

  Perm operator*(const Perm &rhs) const;
  Perm inverse() const;
  /// x^-1 * this * x
  Perm conjugate_by(const Perm &x) const;
  Perm power(std::uint64_t e) const;

  bool is_identity() const;
  std::uint64_t order() const;
  std::optional<Point> first_moved() const;
  bool fixes(Point x) const { return images_[x] == x; }

  std::vector<unsigned> one_based_images() const;
  std::vector<unsigned> cycle_type() const;  // ascending cycle lengths, fixed points included
  std::string to_cycle_string() const;

  auto operator<=>(const Perm &) const = default;
  bool operator==(const Perm &) const = default;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm &p) const noexcept;
};

Perm commutator(const Perm &a, const Perm &b);  // a^-1 b^-1 a b

/// Permutation group with a base and strong generating set.
class PermGroup {
 public:
  struct Level {
    Point base_point = 0;
    std::vector<Perm> generators;               // strong generators fixing earlier base points
    std::vector<Point> orbit;                    // orbit of base_point, BFS order
    std::vector<std::optional<Perm>> transversal;  // transversal[p] maps base_point to p
  };

  PermGroup() = default;
  /// Deterministic Schreier-Sims.  `base_prefix` (0-based) is used as the
  /// start of the base.
  PermGroup(unsigned degree, std::vector<Perm> generators, std::span<const Point> base_prefix = {});

  static PermGroup trivial(unsigned degree) { return PermGroup(degree, {}); }
  static PermGroup symmetric(unsigned degree);

  unsigned degree() const { return degree_; }
  const std::vector<Perm> &generators() const { return generators_; }
  const std::vector<Level> &chain() const { return levels_; }
  std::vector<Point> base() const;
  const BigInt &order() const { return order_; }
  std::uint64_t order_u64() const;
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Perm &g) const;
  bool contains_all(std::span<const Perm> gs) const;

  /// All elements in ascending lexicographic order of image lists.
  std::vector<Perm> elements(std::uint64_t limit) const;
  void for_each_element(const std::function<void(const Perm &)> &fn) const;

 private:
  void rebuild_level(std::size_t i);
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;
  void schreier_sims();

  unsigned degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

// ---------------------------------------------------------------------------
// Structure operators.

/// Orbits as 1-based point sets, ordered by least point.
std::vector<std::vector<unsigned>> orbits(const PermGroup &g);
bool is_transitive(const PermGroup &g);
/// Orbit of a 0-based point, ascending.
std::vector<Point> orbit_of(const PermGroup &g, Point x);

struct PrimitivityResult {
  bool primitive = true;
  std::vector<unsigned> block;  // 1-based witness block containing point 1 when imprimitive
};

/// Throws NotTransitive on intransitive input.
PrimitivityResult is_primitive(const PermGroup &g);

/// Stabilizer of a 1-based point.
PermGroup point_stabilizer(const PermGroup &g, unsigned point);

bool is_subgroup(const PermGroup &h, const PermGroup &g);
bool same_group(const PermGroup &a, const PermGroup &b);
bool is_normal(const PermGroup &n, const PermGroup &g);
bool is_abelian(const PermGroup &g);
bool normalizes(const Perm &x, const PermGroup &h);

PermGroup join(const PermGroup &a, const PermGroup &b);
PermGroup normal_closure(const PermGroup &g, std::span<const Perm> elements);

/// Generators chosen greedily from the sorted element list; a function of the
/// element set only.
std::vector<Perm> canonical_generators(const PermGroup &g, const Limits &limits = {});
PermGroup canonical(const PermGroup &g, const Limits &limits = {});

std::optional<Perm> subgroup_conjugate(const PermGroup &a, const PermGroup &b, const Limits &limits = {});

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup &g, const Limits &limits = {});
PermGroup fitting_subgroup(const PermGroup &g, const Limits &limits = {});
PermGroup sylow_subgroup(const PermGroup &g, std::uint64_t u, const Limits &limits = {});
/// Largest normal subgroup of order coprime to u.
PermGroup o_coprime(const PermGroup &g, std::uint64_t u, const Limits &limits = {});
/// Largest normal u-subgroup.
PermGroup o_prime(const PermGroup &g, std::uint64_t u, const Limits &limits = {});

/// Smallest normal subgroup with abelian quotient of exponent dividing u:
/// the normal closure of [g_i, g_j] and g_i^u over the generators.
PermGroup verbal_abelian_subgroup(const PermGroup &g, std::uint64_t u);
/// Membership in A_u, A_q A_r or A_p A_q A_r (chain given outermost first).
bool in_variety(const PermGroup &g, std::span<const std::uint64_t> chain);

/// Conjugacy classes as sorted element vectors, ordered by least element.
std::vector<std::vector<Perm>> conjugacy_classes(const PermGroup &g, const Limits &limits = {});

/// Number of S_n-conjugates of h.
BigInt symmetric_class_size(const PermGroup &h, const Limits &limits = {});

// ---------------------------------------------------------------------------
// JSON: {degree: n, generators: [[i_1..i_n], ...]} with 1-based images.

nlohmann::json to_json(const PermGroup &g);
PermGroup perm_group_from_json(const nlohmann::json &j);

}  // namespace aqar::perm
