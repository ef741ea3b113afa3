#include "aqar/groupmodel.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "aqar/error.hpp"

namespace aqar::grp {

namespace {

std::vector<char> membership(std::size_t n, const Subset &h) {
  std::vector<char> in(n, 0);
  for (auto x : h) in[x] = 1;
  return in;
}

// Closure of `start` (already containing the identity) under right
// multiplication by gens.
Subset close(const CayleyGroup &g, std::vector<Index> elems, std::span<const Index> gens) {
  std::vector<char> in(g.order(), 0);
  for (auto x : elems) in[x] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto s : gens) {
      Index y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

void require_table_scale(std::uint64_t order, const Limits &limits) {
  if (order > limits.cayley_order)
    throw Error(ErrorCode::LimitExceeded,
                "group order " + std::to_string(order) + " exceeds the table limit " + std::to_string(limits.cayley_order));
}

}  // namespace

CayleyGroup::CayleyGroup(std::vector<std::vector<Index>> table, Index identity, std::vector<std::string> labels)
    : n_(table.size()), identity_(identity), labels_(std::move(labels)) {
  if (n_ == 0) throw Error(ErrorCode::InvalidParams, "empty multiplication table");
  if (identity_ >= n_) throw Error(ErrorCode::InvalidParams, "identity index out of range");
  if (!labels_.empty() && labels_.size() != n_) throw Error(ErrorCode::InvalidParams, "label count mismatch");
  table_.reserve(n_ * n_);
  for (const auto &row : table) {
    if (row.size() != n_) throw Error(ErrorCode::InvalidParams, "multiplication table is not square");
    std::vector<char> seen(n_, 0);
    for (auto x : row) {
      if (x >= n_ || seen[x]) throw Error(ErrorCode::InvalidParams, "multiplication table is not a Latin square");
      seen[x] = 1;
      table_.push_back(x);
    }
  }
  for (Index c = 0; c < n_; ++c) {
    std::vector<char> seen(n_, 0);
    for (Index r = 0; r < n_; ++r) {
      Index x = table_[r * n_ + c];
      if (seen[x]) throw Error(ErrorCode::InvalidParams, "multiplication table is not a Latin square");
      seen[x] = 1;
    }
  }
  for (Index a = 0; a < n_; ++a)
    if (mul(identity_, a) != a || mul(a, identity_) != a)
      throw Error(ErrorCode::InvalidParams, "identity element is not neutral");

  auto check = [&](Index a, Index b, Index c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw Error(ErrorCode::InvalidParams, "multiplication table is not associative");
  };
  if (n_ <= 200) {
    for (Index a = 0; a < n_; ++a)
      for (Index b = 0; b < n_; ++b)
        for (Index c = 0; c < n_; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eedu);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n_ - 1));
    for (int i = 0; i < 20000; ++i) check(pick(rng), pick(rng), pick(rng));
  }

  inverse_.resize(n_);
  for (Index a = 0; a < n_; ++a)
    for (Index b = 0; b < n_; ++b)
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
  orders_.resize(n_);
  for (Index a = 0; a < n_; ++a) {
    std::uint64_t e = 1;
    for (Index x = a; x != identity_; x = mul(x, a)) ++e;
    orders_[a] = e;
  }

  std::vector<Index> by_order(n_);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](Index a, Index b) { return orders_[a] > orders_[b]; });
  Subset current{identity_};
  std::vector<char> in = membership(n_, current);
  for (auto x : by_order) {
    if (current.size() == n_) break;
    if (in[x]) continue;
    generators_.push_back(x);
    current = close(*this, current, generators_);
    in = membership(n_, current);
  }
}

CayleyGroup CayleyGroup::cyclic(std::size_t n) {
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Index>((i + j) % n);
  return CayleyGroup(std::move(t), 0);
}

Index CayleyGroup::pow(Index a, std::uint64_t e) const {
  Index result = identity_;
  e %= orders_[a];
  for (std::uint64_t i = 0; i < e; ++i) result = mul(result, a);
  return result;
}

std::uint64_t CayleyGroup::exponent() const {
  std::uint64_t e = 1;
  for (auto o : orders_) e = std::lcm(e, o);
  return e;
}

std::vector<std::vector<Index>> CayleyGroup::table() const {
  std::vector<std::vector<Index>> t(n_);
  for (std::size_t i = 0; i < n_; ++i) t[i].assign(table_.begin() + i * n_, table_.begin() + (i + 1) * n_);
  return t;
}

Subset CayleyGroup::all() const {
  Subset s(n_);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

CayleyGroup direct_product(const CayleyGroup &a, const CayleyGroup &b) {
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::vector<Index>> t(na * nb, std::vector<Index>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y) {
      Index pa = a.mul(static_cast<Index>(x / nb), static_cast<Index>(y / nb));
      Index pb = b.mul(static_cast<Index>(x % nb), static_cast<Index>(y % nb));
      t[x][y] = static_cast<Index>(pa * nb + pb);
    }
  return CayleyGroup(std::move(t), static_cast<Index>(a.identity() * nb + b.identity()));
}

Subset generated(const CayleyGroup &g, std::span<const Index> gens) { return close(g, {g.identity()}, gens); }

Subset normal_closure(const CayleyGroup &g, std::span<const Index> gens) {
  std::vector<Index> ngens(gens.begin(), gens.end());
  Subset h = generated(g, ngens);
  std::vector<char> in = membership(g.order(), h);
  for (std::size_t i = 0; i < ngens.size(); ++i)
    for (auto x : g.generators()) {
      Index c = g.conjugate(ngens[i], x);
      if (in[c]) continue;
      ngens.push_back(c);
      h = close(g, h, ngens);
      in = membership(g.order(), h);
    }
  return h;
}

bool is_subgroup(const CayleyGroup &g, const Subset &h) {
  if (h.empty()) return false;
  auto in = membership(g.order(), h);
  for (auto a : h)
    for (auto b : h)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_normal(const CayleyGroup &g, const Subset &n) {
  auto in = membership(g.order(), n);
  for (auto a : n)
    for (auto x : g.generators())
      if (!in[g.conjugate(a, x)]) return false;
  return true;
}

bool is_abelian(const CayleyGroup &g, const Subset &h) {
  for (auto a : h)
    for (auto b : h)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::uint64_t exponent(const CayleyGroup &g, const Subset &h) {
  std::uint64_t e = 1;
  for (auto a : h) e = std::lcm(e, g.element_order(a));
  return e;
}

Subset center(const CayleyGroup &g) {
  Subset z;
  for (Index a = 0; a < g.order(); ++a) {
    bool central = std::all_of(g.generators().begin(), g.generators().end(),
                               [&](Index x) { return g.mul(a, x) == g.mul(x, a); });
    if (central) z.push_back(a);
  }
  return z;
}

Subset derived_subgroup(const CayleyGroup &g) {
  std::set<Index> comms;
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b) comms.insert(g.commutator(a, b));
  std::vector<Index> gens(comms.begin(), comms.end());
  return generated(g, gens);
}

Subset conjugate_subset(const CayleyGroup &g, const Subset &h, Index x) {
  Subset out;
  out.reserve(h.size());
  for (auto a : h) out.push_back(g.conjugate(a, x));
  std::sort(out.begin(), out.end());
  return out;
}

Subset product_set(const CayleyGroup &g, const Subset &a, const Subset &b) {
  std::vector<char> in(g.order(), 0);
  for (auto x : a)
    for (auto y : b) in[g.mul(x, y)] = 1;
  Subset out;
  for (Index i = 0; i < g.order(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

Subset intersect(const Subset &a, const Subset &b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

CayleyGroup subgroup_table(const CayleyGroup &g, const Subset &h) {
  if (!is_subgroup(g, h)) throw Error(ErrorCode::InvalidParams, "subset is not a subgroup");
  std::unordered_map<Index, Index> pos;
  for (Index i = 0; i < h.size(); ++i) pos[h[i]] = i;
  std::vector<std::vector<Index>> t(h.size(), std::vector<Index>(h.size()));
  for (Index i = 0; i < h.size(); ++i)
    for (Index j = 0; j < h.size(); ++j) t[i][j] = pos.at(g.mul(h[i], h[j]));
  return CayleyGroup(std::move(t), pos.at(g.identity()));
}

CayleyGroup quotient(const CayleyGroup &g, const Subset &n) {
  if (!is_subgroup(g, n) || !is_normal(g, n)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  constexpr Index unassigned = static_cast<Index>(-1);
  std::vector<Index> coset(g.order(), unassigned);
  std::vector<Index> reps;
  for (Index x = 0; x < g.order(); ++x) {
    if (coset[x] != unassigned) continue;
    const auto id = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (auto m : n) coset[g.mul(x, m)] = id;
  }
  std::vector<std::vector<Index>> t(reps.size(), std::vector<Index>(reps.size()));
  for (Index i = 0; i < reps.size(); ++i)
    for (Index j = 0; j < reps.size(); ++j) t[i][j] = coset[g.mul(reps[i], reps[j])];
  return CayleyGroup(std::move(t), coset[g.identity()]);
}

namespace {

// Subgroup generated by [a, b] and a^u for a, b in h.
Subset verbal_in(const CayleyGroup &g, const Subset &h, std::uint64_t u) {
  std::set<Index> words;
  for (auto a : h) {
    words.insert(g.pow(a, u));
    for (auto b : h) words.insert(g.commutator(a, b));
  }
  std::vector<Index> gens(words.begin(), words.end());
  return generated(g, gens);
}

}  // namespace

Subset verbal_ar_subgroup(const CayleyGroup &g, std::uint64_t r) { return verbal_in(g, g.all(), r); }

bool in_variety(const CayleyGroup &g, std::span<const std::uint64_t> chain) {
  if (chain.empty() || chain.size() > 3) throw Error(ErrorCode::InvalidParams, "variety chain must have 1 to 3 primes");
  Subset cur = g.all();
  for (std::size_t i = chain.size(); i-- > 1;) {
    cur = verbal_in(g, cur, chain[i]);
  }
  return is_abelian(g, cur) && chain[0] % exponent(g, cur) == 0;
}

Fingerprint fingerprint(const CayleyGroup &g) {
  Fingerprint f;
  f.order = g.order();
  for (Index a = 0; a < g.order(); ++a) ++f.order_histogram[g.element_order(a)];
  f.center = center(g).size();
  const Subset d = derived_subgroup(g);
  f.derived = d.size();
  f.exponent = g.exponent();
  const CayleyGroup ab = quotient(g, d);
  for (Index a = 0; a < ab.order(); ++a) ++f.abelianization_histogram[ab.element_order(a)];
  return f;
}

nlohmann::json to_json(const Fingerprint &f) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto &[o, c] : f.order_histogram) hist[std::to_string(o)] = c;
  return nlohmann::json{{"order_histogram", hist}, {"center", f.center}, {"derived", f.derived}, {"exponent", f.exponent}};
}

std::vector<Subset> all_subgroups(const CayleyGroup &g, const Limits &limits) {
  require_table_scale(g.order(), limits);
  std::set<Subset> found;
  std::vector<std::pair<Subset, std::vector<Index>>> queue{{Subset{g.identity()}, {}}};
  found.insert(queue[0].first);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [h, gens] = queue[i];
    auto in = membership(g.order(), h);
    std::vector<char> tried(g.order(), 0);
    for (Index x = 0; x < g.order(); ++x) {
      if (in[x] || tried[x]) continue;
      for (auto y : h) tried[g.mul(y, x)] = 1;
      auto kgens = gens;
      kgens.push_back(x);
      Subset k = close(g, h, kgens);
      if (found.insert(k).second) queue.emplace_back(std::move(k), std::move(kgens));
    }
  }
  std::vector<Subset> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const Subset &a, const Subset &b) { return a.size() < b.size(); });
  return out;
}

Subset sylow_subgroup(const CayleyGroup &g, std::uint64_t u) {
  if (!is_prime(u)) throw Error(ErrorCode::NotPrime, std::to_string(u) + " is not prime");
  const std::uint64_t target = checked_pow(u, valuation(g.order(), u));
  Subset p{g.identity()};
  std::vector<Index> gens;
  bool grew = true;
  while (p.size() < target && grew) {
    grew = false;
    for (Index x = 0; x < g.order() && p.size() < target; ++x) {
      if (std::binary_search(p.begin(), p.end(), x)) continue;
      if (checked_pow(u, valuation(g.element_order(x), u)) != g.element_order(x)) continue;
      gens.push_back(x);
      Subset k = close(g, p, gens);
      std::uint64_t uu;
      unsigned e;
      if (prime_power(k.size(), uu, e) && uu == u) {
        p = std::move(k);
        grew = true;
      } else {
        gens.pop_back();
      }
    }
  }
  if (p.size() != target) throw Error(ErrorCode::InvalidParams, "Sylow search did not reach the full prime power");
  return p;
}

Subset fitting_subgroup(const CayleyGroup &g) {
  Subset f{g.identity()};
  for (const auto &[u, e] : factorize(g.order())) {
    Subset core = sylow_subgroup(g, u);
    for (Index x = 0; x < g.order() && core.size() > 1; ++x) core = intersect(core, conjugate_subset(g, core, x));
    f = product_set(g, f, core);
  }
  return f;
}

bool permutable(const CayleyGroup &g, const Subset &a, const Subset &b) {
  return product_set(g, a, b) == product_set(g, b, a);
}

SylowSystem sylow_system(const CayleyGroup &g, std::optional<std::uint64_t> seed) {
  SylowSystem sys;
  std::vector<std::vector<Subset>> candidates;
  for (const auto &[u, e] : factorize(g.order())) {
    sys.primes.push_back(u);
    Subset s = sylow_subgroup(g, u);
    std::set<Subset> conj;
    for (Index x = 0; x < g.order(); ++x) conj.insert(conjugate_subset(g, s, x));
    candidates.emplace_back(conj.begin(), conj.end());
  }
  if (seed) {
    std::mt19937_64 rng(*seed);
    for (auto &c : candidates) std::shuffle(c.begin(), c.end(), rng);
  }
  std::vector<Subset> chosen;
  auto search = [&](auto &self, std::size_t i) -> bool {
    if (i == candidates.size()) return true;
    for (const auto &c : candidates[i]) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](const Subset &s) { return permutable(g, s, c); });
      if (!ok) continue;
      chosen.push_back(c);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
      if (i == 0) break;  // every Sylow subgroup of a soluble group lies in some Sylow system
    }
    return false;
  };
  if (!search(search, 0)) throw Error(ErrorCode::NoSystemFound, "no pairwise permutable Sylow family");
  sys.subgroups = std::move(chosen);
  return sys;
}

CayleyGroup cayley_from(const perm::PermGroup &g, const Limits &limits) {
  require_table_scale(g.order_u64(), limits);
  const auto elems = g.elements(limits.cayley_order);
  std::unordered_map<perm::Perm, Index, perm::PermHash> pos;
  for (Index i = 0; i < elems.size(); ++i) pos.emplace(elems[i], i);
  std::vector<std::vector<Index>> t(elems.size(), std::vector<Index>(elems.size()));
  for (Index i = 0; i < elems.size(); ++i)
    for (Index j = 0; j < elems.size(); ++j) t[i][j] = pos.at(elems[i] * elems[j]);
  std::vector<std::string> labels;
  for (const auto &e : elems) labels.push_back(e.to_cycle_string());
  return CayleyGroup(std::move(t), pos.at(perm::Perm(g.degree())), std::move(labels));
}

CayleyGroup cayley_from(const mat::MatGroup &g, const Limits &limits) {
  const auto &elems = g.elements();
  require_table_scale(elems.size(), limits);
  std::unordered_map<mat::Mat, Index, mat::MatHash> pos;
  for (Index i = 0; i < elems.size(); ++i) pos.emplace(elems[i], i);
  std::vector<std::vector<Index>> t(elems.size(), std::vector<Index>(elems.size()));
  for (Index i = 0; i < elems.size(); ++i)
    for (Index j = 0; j < elems.size(); ++j) t[i][j] = pos.at(g.space().mul(elems[i], elems[j]));
  return CayleyGroup(std::move(t), pos.at(g.space().identity()));
}

void VarietyParams::validate() const {
  for (auto x : {p, q, r})
    if (!is_prime(x)) throw Error(ErrorCode::InvalidParams, std::to_string(x) + " is not prime");
  if (p == q || q == r || p == r) throw Error(ErrorCode::InvalidParams, "p, q, r must be distinct");
}

BigInt VarietyParams::n() const {
  using boost::multiprecision::pow;
  return pow(BigInt(p), alpha) * pow(BigInt(q), beta) * pow(BigInt(r), gamma);
}

nlohmann::json to_json(const VarietyParams &v) {
  return nlohmann::json{{"p", v.p},         {"q", v.q},         {"r", v.r},        {"alpha", v.alpha},
                        {"beta", v.beta}, {"gamma", v.gamma}, {"n", v.n().str()}};
}

nlohmann::json to_json(const CayleyGroup &g) {
  return nlohmann::json{{"order", g.order()}, {"identity", g.identity()}, {"table", g.table()}};
}

CayleyGroup cayley_from_json(const nlohmann::json &j) {
  try {
    auto table = j.at("table").get<std::vector<std::vector<Index>>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
      throw Error(ErrorCode::ParseError, "order does not match table size");
    return CayleyGroup(std::move(table), j.value("identity", Index{0}));
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace aqar::grp
