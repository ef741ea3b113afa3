#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "aqar/error.hpp"
#include "aqar/perm.hpp"

namespace aqar::perm {

namespace {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(unsigned n) : parent(n) { std::iota(parent.begin(), parent.end(), Point{0}); }
  Point find(Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

bool is_power_of(const BigInt &n, std::uint64_t u) {
  BigInt m = n;
  while (m > 1 && m % u == 0) m /= u;
  return m == 1;
}

bool coprime_to(const BigInt &n, std::uint64_t u) { return n % u != 0; }

bool is_u_power(std::uint64_t n, std::uint64_t u) {
  while (n > 1 && n % u == 0) n /= u;
  return n == 1;
}

void require_exhaustive(const PermGroup &g, const Limits &limits) {
  if (g.order() > limits.exhaustive_order)
    throw Error(ErrorCode::LimitExceeded, "group order " + g.order().str() + " exceeds the exhaustive limit " +
                                              std::to_string(limits.exhaustive_order));
}

// Sort key of a subgroup: order, then canonical generators.
struct SubgroupKey {
  BigInt order;
  std::vector<Perm> gens;
  bool operator<(const SubgroupKey &o) const {
    if (order != o.order) return order < o.order;
    return gens < o.gens;
  }
};

std::vector<PermGroup> sort_subgroups(std::vector<PermGroup> groups, const Limits &limits) {
  std::vector<std::pair<SubgroupKey, PermGroup>> keyed;
  for (auto &g : groups) {
    auto gens = canonical_generators(g, limits);
    PermGroup c(g.degree(), gens);
    keyed.emplace_back(SubgroupKey{g.order(), gens}, std::move(c));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
  std::vector<PermGroup> out;
  for (auto &k : keyed) out.push_back(std::move(k.second));
  return out;
}

}  // namespace

std::vector<Point> orbit_of(const PermGroup &g, Point x) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> orbit{x};
  seen[x] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto &s : g.generators()) {
      Point y = s[orbit[i]];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<std::vector<unsigned>> orbits(const PermGroup &g) {
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> done(g.degree(), false);
  for (Point x = 0; x < g.degree(); ++x) {
    if (done[x]) continue;
    std::vector<unsigned> orb;
    for (Point y : orbit_of(g, x)) {
      done[y] = true;
      orb.push_back(y + 1u);
    }
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_transitive(const PermGroup &g) { return g.degree() <= 1 || orbit_of(g, 0).size() == g.degree(); }

PrimitivityResult is_primitive(const PermGroup &g) {
  if (!is_transitive(g)) throw Error(ErrorCode::NotTransitive, "primitivity requires a transitive group");
  const unsigned n = g.degree();
  for (Point x = 1; x < n; ++x) {
    // finest G-invariant partition in which 0 and x share a block
    UnionFind uf(n);
    uf.unite(0, x);
    std::vector<std::pair<Point, Point>> queue{{0, x}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      for (const auto &s : g.generators()) {
        Point c = uf.find(s[a]), d = uf.find(s[b]);
        if (uf.unite(c, d)) queue.emplace_back(c, d);
      }
    }
    std::vector<unsigned> block;
    for (Point y = 0; y < n; ++y)
      if (uf.find(y) == uf.find(0)) block.push_back(y + 1u);
    if (block.size() < n) return PrimitivityResult{false, block};
  }
  return PrimitivityResult{true, {}};
}

PermGroup point_stabilizer(const PermGroup &g, unsigned point) {
  if (point < 1 || point > g.degree()) throw Error(ErrorCode::InvalidParams, "point outside 1..n");
  const Point b = static_cast<Point>(point - 1);
  PermGroup with_base(g.degree(), g.generators(), std::span<const Point>(&b, 1));
  std::vector<Perm> gens;
  if (with_base.chain().size() > 1) gens = with_base.chain()[1].generators;
  return PermGroup(g.degree(), gens);
}

bool is_subgroup(const PermGroup &h, const PermGroup &g) {
  return h.degree() == g.degree() && g.contains_all(h.generators());
}

bool same_group(const PermGroup &a, const PermGroup &b) { return a.order() == b.order() && is_subgroup(a, b); }

bool normalizes(const Perm &x, const PermGroup &h) {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Perm &s) { return h.contains(s.conjugate_by(x)); });
}

bool is_normal(const PermGroup &n, const PermGroup &g) {
  if (!is_subgroup(n, g)) return false;
  return std::all_of(g.generators().begin(), g.generators().end(), [&](const Perm &x) { return normalizes(x, n); });
}

bool is_abelian(const PermGroup &g) {
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

PermGroup join(const PermGroup &a, const PermGroup &b) {
  auto gens = a.generators();
  for (const auto &s : b.generators())
    if (!a.contains(s)) gens.push_back(s);
  return PermGroup(a.degree(), gens);
}

PermGroup normal_closure(const PermGroup &g, std::span<const Perm> elements) {
  std::vector<Perm> gens;
  for (const auto &e : elements)
    if (!e.is_identity()) gens.push_back(e);
  PermGroup n(g.degree(), gens);
  std::vector<Perm> queue = n.generators();
  while (!queue.empty()) {
    Perm x = std::move(queue.back());
    queue.pop_back();
    for (const auto &s : g.generators()) {
      Perm y = x.conjugate_by(s);
      if (!n.contains(y)) {
        gens.push_back(y);
        n = PermGroup(g.degree(), gens);
        queue.push_back(std::move(y));
      }
    }
  }
  return n;
}

std::vector<Perm> canonical_generators(const PermGroup &g, const Limits &limits) {
  std::vector<Perm> gens;
  if (g.is_trivial()) return gens;
  PermGroup h = PermGroup::trivial(g.degree());
  for (const auto &e : g.elements(limits.exhaustive_order)) {
    if (h.contains(e)) continue;
    gens.push_back(e);
    h = PermGroup(g.degree(), gens);
    if (h.order() == g.order()) break;
  }
  return gens;
}

PermGroup canonical(const PermGroup &g, const Limits &limits) {
  return PermGroup(g.degree(), canonical_generators(g, limits));
}

std::vector<std::vector<Perm>> conjugacy_classes(const PermGroup &g, const Limits &limits) {
  require_exhaustive(g, limits);
  std::vector<std::vector<Perm>> classes;
  std::unordered_set<Perm, PermHash> seen;
  for (const auto &e : g.elements(limits.exhaustive_order)) {
    if (seen.count(e)) continue;
    std::vector<Perm> cls{e};
    seen.insert(e);
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (const auto &s : g.generators()) {
        Perm c = cls[i].conjugate_by(s);
        if (seen.insert(c).second) cls.push_back(std::move(c));
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::optional<Perm> subgroup_conjugate(const PermGroup &a, const PermGroup &b, const Limits &limits) {
  if (a.degree() != b.degree()) throw Error(ErrorCode::DegreeMismatch, "subgroups of different degree");
  const unsigned n = a.degree();
  if (a.order() != b.order()) return std::nullopt;
  if (n > limits.max_degree)
    throw Error(ErrorCode::LimitExceeded,
                "degree " + std::to_string(n) + " exceeds the conjugacy limit " + std::to_string(limits.max_degree));

  // cycle-type fingerprint
  if (a.order() <= limits.exhaustive_order) {
    std::map<std::vector<unsigned>, std::uint64_t> ha, hb;
    a.for_each_element([&](const Perm &x) { ++ha[x.cycle_type()]; });
    b.for_each_element([&](const Perm &x) { ++hb[x.cycle_type()]; });
    if (ha != hb) return std::nullopt;
  }

  // two-point signatures: sig[i][j] = |orbit of j under the stabilizer of i|,
  // sig[i][i] = |orbit of i|.  A conjugator must preserve them.
  auto signature = [n](const PermGroup &g) {
    std::vector<std::vector<std::size_t>> sig(n, std::vector<std::size_t>(n));
    for (Point i = 0; i < n; ++i) {
      PermGroup stab = point_stabilizer(g, i + 1u);
      std::vector<std::size_t> orbit_len(n, 0);
      std::vector<bool> done(n, false);
      for (Point j = 0; j < n; ++j) {
        if (done[j]) continue;
        auto orb = orbit_of(stab, j);
        for (Point y : orb) {
          done[y] = true;
          orbit_len[y] = orb.size();
        }
      }
      for (Point j = 0; j < n; ++j) sig[i][j] = orbit_len[j];
      sig[i][i] = orbit_of(g, i).size();
    }
    return sig;
  };
  const auto sa = signature(a), sb = signature(b);
  std::vector<std::vector<bool>> same_orbit_b(n, std::vector<bool>(n, false));
  for (Point i = 0; i < n; ++i)
    for (Point y : orbit_of(b, i)) same_orbit_b[i][y] = true;
  std::vector<std::vector<bool>> same_orbit_a(n, std::vector<bool>(n, false));
  for (Point i = 0; i < n; ++i)
    for (Point y : orbit_of(a, i)) same_orbit_a[i][y] = true;

  std::vector<Point> image(n);
  std::vector<bool> used(n, false);
  std::optional<Perm> found;

  std::function<bool(unsigned)> search = [&](unsigned i) -> bool {
    if (i == n) {
      std::vector<unsigned> imgs(n);
      for (unsigned k = 0; k < n; ++k) imgs[k] = image[k] + 1u;
      Perm x = Perm::from_images(imgs);
      for (const auto &s : a.generators())
        if (!b.contains(s.conjugate_by(x))) return false;
      found = x;
      return true;
    }
    for (Point y = 0; y < n; ++y) {
      if (used[y] || sb[y][y] != sa[i][i]) continue;
      bool ok = true;
      for (unsigned j = 0; j < i && ok; ++j) {
        const Point xj = image[j];
        ok = sb[y][xj] == sa[i][j] && sb[xj][y] == sa[j][i] && same_orbit_b[xj][y] == same_orbit_a[j][i];
      }
      if (!ok) continue;
      used[y] = true;
      image[i] = y;
      if (search(i + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  search(0);
  return found;
}

PermGroup verbal_abelian_subgroup(const PermGroup &g, std::uint64_t u) {
  std::vector<Perm> words;
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    words.push_back(gens[i].power(u));
    for (std::size_t j = i + 1; j < gens.size(); ++j) words.push_back(commutator(gens[i], gens[j]));
  }
  return normal_closure(g, words);
}

bool in_variety(const PermGroup &g, std::span<const std::uint64_t> chain) {
  if (chain.empty() || chain.size() > 3) throw Error(ErrorCode::InvalidParams, "variety chain must have 1 to 3 primes");
  // peel off the outer exponents from the right: A_c0 A_c1 ... A_cm
  PermGroup w = g;
  for (std::size_t i = chain.size(); i-- > 1;) {
    std::vector<Perm> words;
    const auto &gens = w.generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
      words.push_back(gens[a].power(chain[i]));
      for (std::size_t b = a + 1; b < gens.size(); ++b) words.push_back(commutator(gens[a], gens[b]));
    }
    w = normal_closure(g, words);
  }
  if (!is_abelian(w)) return false;
  return std::all_of(w.generators().begin(), w.generators().end(),
                     [&](const Perm &s) { return s.power(chain[0]).is_identity(); });
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup &g, const Limits &limits) {
  require_exhaustive(g, limits);
  std::vector<PermGroup> candidates;
  for (const auto &cls : conjugacy_classes(g, limits)) {
    const auto o = cls.front().order();
    if (o < 2 || !is_prime(o)) continue;
    PermGroup n = normal_closure(g, std::span<const Perm>(&cls.front(), 1));
    bool dup = std::any_of(candidates.begin(), candidates.end(), [&](const PermGroup &c) { return same_group(c, n); });
    if (!dup) candidates.push_back(std::move(n));
  }
  std::vector<PermGroup> minimal;
  for (const auto &c : candidates) {
    bool has_smaller = std::any_of(candidates.begin(), candidates.end(), [&](const PermGroup &d) {
      return d.order() < c.order() && is_subgroup(d, c);
    });
    if (!has_smaller) minimal.push_back(c);
  }
  return sort_subgroups(std::move(minimal), limits);
}

namespace {

// Join of the normal closures ncl(x) over class representatives x that
// satisfy `element_ok`, keeping only closures whose order satisfies `order_ok`.
template <class ElemPred, class OrderPred>
PermGroup join_of_normal_closures(const PermGroup &g, const Limits &limits, ElemPred element_ok, OrderPred order_ok) {
  require_exhaustive(g, limits);
  PermGroup n = PermGroup::trivial(g.degree());
  for (const auto &cls : conjugacy_classes(g, limits)) {
    const Perm &x = cls.front();
    if (x.is_identity() || !element_ok(x.order()) || n.contains(x)) continue;
    PermGroup c = normal_closure(g, std::span<const Perm>(&x, 1));
    if (order_ok(c.order())) n = join(n, c);
  }
  return canonical(n, limits);
}

}  // namespace

PermGroup o_prime(const PermGroup &g, std::uint64_t u, const Limits &limits) {
  return join_of_normal_closures(
      g, limits, [u](std::uint64_t o) { return is_u_power(o, u); }, [u](const BigInt &o) { return is_power_of(o, u); });
}

PermGroup o_coprime(const PermGroup &g, std::uint64_t u, const Limits &limits) {
  return join_of_normal_closures(
      g, limits, [u](std::uint64_t o) { return o % u != 0; }, [u](const BigInt &o) { return coprime_to(o, u); });
}

PermGroup fitting_subgroup(const PermGroup &g, const Limits &limits) {
  require_exhaustive(g, limits);
  PermGroup f = PermGroup::trivial(g.degree());
  for (auto [u, e] : factorize(g.order_u64())) f = join(f, o_prime(g, u, limits));
  return canonical(f, limits);
}

PermGroup sylow_subgroup(const PermGroup &g, std::uint64_t u, const Limits &limits) {
  require_exhaustive(g, limits);
  if (!is_prime(u)) throw Error(ErrorCode::NotPrime, std::to_string(u) + " is not prime");
  BigInt target = 1;
  {
    BigInt m = g.order();
    while (m % u == 0) {
      m /= u;
      target *= u;
    }
  }
  const auto elems = g.elements(limits.exhaustive_order);
  PermGroup p = PermGroup::trivial(g.degree());
  bool grew = true;
  while (p.order() < target && grew) {
    grew = false;
    for (const auto &e : elems) {
      if (e.is_identity() || !is_u_power(e.order(), u) || p.contains(e)) continue;
      auto gens = p.generators();
      gens.push_back(e);
      PermGroup k(g.degree(), gens);
      if (!is_power_of(k.order(), u)) continue;
      p = std::move(k);
      grew = true;
      if (p.order() == target) break;
    }
  }
  if (p.order() != target) throw Error(ErrorCode::InvalidParams, "Sylow search did not reach the full u-part");
  return canonical(p, limits);
}

BigInt symmetric_class_size(const PermGroup &h, const Limits &limits) {
  const unsigned n = h.degree();
  if (n <= 1) return 1;
  const PermGroup sym = PermGroup::symmetric(n);
  std::set<std::vector<Perm>> seen;
  std::vector<std::vector<Perm>> queue{h.elements(limits.exhaustive_order)};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto &s : sym.generators()) {
      std::vector<Perm> conj;
      conj.reserve(queue[i].size());
      for (const auto &x : queue[i]) conj.push_back(x.conjugate_by(s));
      std::sort(conj.begin(), conj.end());
      if (seen.insert(conj).second) queue.push_back(std::move(conj));
    }
  }
  return BigInt(seen.size());
}

}  // namespace aqar::perm
