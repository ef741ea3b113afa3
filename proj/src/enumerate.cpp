#include "aqar/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "aqar/construct.hpp"
#include "aqar/error.hpp"
#include "aqar/matgrp.hpp"

namespace aqar::enumerate {

using perm::Perm;
using perm::PermGroup;

namespace {

using ElementSet = std::vector<Perm>;

bool order_in_chain(std::uint64_t order, const std::vector<std::uint64_t> &chain) {
  return std::find(chain.begin(), chain.end(), order) != chain.end();
}

// Conjugacy invariants: order, orbit lengths and the cycle-type histogram.
std::string invariant_key(const PermGroup &g, const ElementSet &elements) {
  std::ostringstream out;
  out << g.order() << '|';
  std::vector<std::size_t> lengths;
  for (const auto &o : perm::orbits(g)) lengths.push_back(o.size());
  std::sort(lengths.begin(), lengths.end());
  for (auto l : lengths) out << l << ',';
  out << '|';
  std::map<std::vector<unsigned>, std::size_t> hist;
  for (const auto &e : elements) ++hist[e.cycle_type()];
  for (const auto &[type, count] : hist) {
    for (auto c : type) out << c << '.';
    out << ':' << count << ';';
  }
  return out.str();
}

struct Search {
  unsigned n;
  std::vector<std::uint64_t> chain;
  const Limits &limits;
  std::vector<PermGroup> reps;
  std::map<std::string, std::vector<std::size_t>> buckets;
  std::set<ElementSet> seen;

  // Registers g; returns true when it starts a new conjugacy class.
  bool add(const PermGroup &g) {
    ElementSet elements = g.elements(limits.exhaustive_order);
    if (!seen.insert(elements).second) return false;
    const std::string key = invariant_key(g, elements);
    auto &bucket = buckets[key];
    for (auto idx : bucket)
      if (perm::subgroup_conjugate(reps[idx], g, limits)) return false;
    bucket.push_back(reps.size());
    reps.push_back(g);
    return true;
  }

  // Breadth-first closure of the class list under adjoining pool elements,
  // keeping only subgroups in the variety.
  void run(const std::vector<Perm> &pool) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const PermGroup h = reps[i];
      for (const auto &y : pool) {
        if (h.contains(y)) continue;
        auto gens = h.generators();
        gens.push_back(y);
        PermGroup k(n, gens);
        if (!perm::in_variety(k, chain)) continue;
        add(k);
      }
    }
  }
};

void check_chain(const std::vector<std::uint64_t> &chain) {
  if (chain.empty() || chain.size() > 3) throw Error(ErrorCode::InvalidParams, "variety chain must have 1 to 3 primes");
  for (auto p : chain)
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

std::vector<Perm> prime_order_pool(unsigned n, const std::vector<std::uint64_t> &chain,
                                   const std::function<bool(const Perm &)> &accept) {
  std::vector<Perm> pool;
  PermGroup::symmetric(n).for_each_element([&](const Perm &x) {
    if (order_in_chain(x.order(), chain) && accept(x)) pool.push_back(x);
  });
  std::sort(pool.begin(), pool.end());
  return pool;
}

// All regular elementary abelian u-subgroups of S_n, n = u^m, as sorted
// element lists.
std::vector<ElementSet> regular_elementary_abelian(unsigned n, std::uint64_t u) {
  std::vector<Perm> fpf;
  PermGroup::symmetric(n).for_each_element([&](const Perm &x) {
    auto type = x.cycle_type();
    if (std::all_of(type.begin(), type.end(), [&](unsigned c) { return c == u; })) fpf.push_back(x);
  });
  std::sort(fpf.begin(), fpf.end());
  std::set<ElementSet> found, complete;
  std::vector<ElementSet> queue{{Perm(n)}};
  while (!queue.empty()) {
    ElementSet h = std::move(queue.back());
    queue.pop_back();
    if (h.size() == n) {
      complete.insert(h);
      continue;
    }
    for (const auto &y : fpf) {
      if (std::binary_search(h.begin(), h.end(), y)) continue;
      if (!std::all_of(h.begin(), h.end(), [&](const Perm &x) { return x * y == y * x; })) continue;
      std::set<Perm> k(h.begin(), h.end());
      Perm yp = y;
      bool semiregular = true;
      for (std::uint64_t i = 1; i < u && semiregular; ++i) {
        for (const auto &x : h) {
          Perm z = x * yp;
          auto type = z.cycle_type();
          if (!std::all_of(type.begin(), type.end(), [&](unsigned c) { return c == u; })) semiregular = false;
          k.insert(z);
        }
        yp = yp * y;
      }
      if (!semiregular) continue;
      ElementSet next(k.begin(), k.end());
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {complete.begin(), complete.end()};
}

PermGroup group_of(unsigned n, const ElementSet &elements) {
  return PermGroup(n, std::vector<Perm>(elements.begin(), elements.end()));
}

}  // namespace

BigInt ClassInventory::total_subgroups() const {
  BigInt total = 0;
  for (const auto &c : classes) total += c.class_size;
  return total;
}

ClassInventory enumerate_classes(unsigned n, const ClassFilter &filter, const Limits &limits) {
  check_chain(filter.chain);
  if (n == 0) throw Error(ErrorCode::InvalidParams, "degree must be positive");
  const bool restricted = filter.primitive && n == 8;
  if (n > limits.max_degree || n > 8 || (n == 8 && !restricted))
    throw Error(ErrorCode::DegreeLimit, "degree " + std::to_string(n) + " is beyond the exhaustive scan");

  ClassInventory inv;
  inv.degree = n;
  inv.filter = filter;
  Search search{n, filter.chain, limits, {}, {}, {}};

  if (!restricted) {
    inv.method = "exhaustive";
    search.add(PermGroup::trivial(n));
    search.run(prime_order_pool(n, filter.chain, [](const Perm &) { return true; }));
  } else {
    inv.method = "regular-normal-subgroup";
    std::uint64_t u = 0;
    unsigned m = 0;
    if (prime_power(n, u, m)) {
      const auto regular = regular_elementary_abelian(n, u);
      inv.regular_subgroups = regular.size();
      const PermGroup e0 = group_of(n, regular.front());
      for (std::size_t i = 1; i < regular.size(); ++i)
        if (!perm::subgroup_conjugate(e0, group_of(n, regular[i]), limits)) inv.regular_subgroups_conjugate = false;
      if (perm::in_variety(e0, filter.chain)) {
        search.add(e0);
        search.run(prime_order_pool(n, filter.chain, [&](const Perm &x) { return perm::normalizes(x, e0); }));
      }
    }
  }

  for (const auto &g : search.reps) {
    const bool transitive = perm::is_transitive(g);
    if ((filter.transitive || filter.primitive) && !transitive) continue;
    if (filter.primitive && !perm::is_primitive(g).primitive) continue;
    InventoryClass c{perm::canonical(g, limits), g.order(), {}, perm::symmetric_class_size(g, limits)};
    for (auto p : filter.chain) c.signature.push_back(valuation(g.order_u64(), p));
    inv.classes.push_back(std::move(c));
  }
  std::sort(inv.classes.begin(), inv.classes.end(), [](const InventoryClass &a, const InventoryClass &b) {
    if (a.order != b.order) return a.order < b.order;
    return a.representative.generators() < b.representative.generators();
  });
  return inv;
}

ClassInventory enumerate_primitive_classes(unsigned n, std::uint64_t q, std::uint64_t r, const Limits &limits) {
  if (n > 8) throw Error(ErrorCode::DegreeLimit, "primitive scans stop at degree 8");
  return enumerate_classes(n, ClassFilter{{q, r}, true, true}, limits);
}

ClassInventory enumerate_transitive_classes(unsigned n, std::uint64_t q, std::uint64_t r, const Limits &limits) {
  if (n > 6) throw Error(ErrorCode::DegreeLimit, "transitive scans stop at degree 6");
  return enumerate_classes(n, ClassFilter{{q, r}, true, false}, limits);
}

nlohmann::json to_json(const ClassInventory &inv) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto &c : inv.classes) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto &g : c.representative.generators()) gens.push_back(g.one_based_images());
    classes.push_back({{"order", c.order.str()},
                       {"signature", c.signature},
                       {"generators", gens},
                       {"class_size", c.class_size.str()}});
  }
  nlohmann::json j{{"context", "S_" + std::to_string(inv.degree)},
                   {"filter",
                    {{"chain", inv.filter.chain},
                     {"transitive", inv.filter.transitive},
                     {"primitive", inv.filter.primitive}}},
                   {"method", inv.method},
                   {"classes", classes}};
  if (inv.method == "regular-normal-subgroup")
    j["regular_subgroups"] = {{"count", inv.regular_subgroups}, {"single_class", inv.regular_subgroups_conjugate}};
  return j;
}

namespace {

// Elementary abelian group of order u^dim.
grp::CayleyGroup elementary_abelian(std::uint64_t u, unsigned dim) {
  grp::CayleyGroup g = grp::CayleyGroup::cyclic(1);
  for (unsigned i = 0; i < dim; ++i) g = grp::direct_product(g, grp::CayleyGroup::cyclic(u));
  return g;
}

// Candidate images for each generator of `acting`: matrices whose order
// divides the generator's order.
std::vector<std::vector<mat::Mat>> image_candidates(const mat::GL &space, const grp::CayleyGroup &acting,
                                                    const Limits &limits) {
  if (space.order() > limits.gl_bruteforce)
    throw Error(ErrorCode::LimitExceeded, "|GL| = " + space.order().str() + " exceeds the brute-force limit");
  std::vector<mat::Mat> all;
  space.for_each_element([&](const mat::Mat &m) {
    all.push_back(m);
    return true;
  });
  std::vector<std::vector<mat::Mat>> out;
  for (auto g : acting.generators()) {
    std::vector<mat::Mat> c;
    for (const auto &m : all)
      if (space.power(m, acting.element_order(g)) == space.identity()) c.push_back(m);
    out.push_back(std::move(c));
  }
  return out;
}

// Every semidirect product field^dim x| acting over homomorphisms into GL.
std::vector<grp::CayleyGroup> extensions(std::uint64_t u, unsigned dim, const grp::CayleyGroup &acting,
                                         const Limits &limits, Traversal order, std::size_t &candidates) {
  if (dim == 0) {
    ++candidates;
    return {acting};
  }
  auto field = gf::make_field(static_cast<unsigned>(u), 1, limits);
  mat::GL space(field, dim);
  const auto choices = image_candidates(space, acting, limits);
  BigInt tuples = 1;
  for (const auto &c : choices) tuples *= c.size();
  if (tuples > limits.gl_bruteforce)
    throw Error(ErrorCode::LimitExceeded, tuples.str() + " generator image tuples exceed the brute-force limit");

  std::vector<std::vector<mat::Mat>> homs;
  std::vector<std::size_t> idx(choices.size(), 0);
  const std::size_t total = static_cast<std::size_t>(tuples);
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t code = order == Traversal::Forward ? t : total - 1 - t;
    std::vector<mat::Mat> images;
    for (std::size_t j = choices.size(); j-- > 0;) {
      idx[j] = code % choices[j].size();
      code /= choices[j].size();
    }
    for (std::size_t j = 0; j < choices.size(); ++j) images.push_back(choices[j][idx[j]]);
    if (auto action = construct::action_from_generators(space, acting, images)) homs.push_back(std::move(*action));
  }
  candidates += homs.size();

  auto build = [&](std::size_t lo, std::size_t hi) {
    std::vector<grp::CayleyGroup> out;
    for (std::size_t i = lo; i < hi; ++i) out.push_back(construct::semidirect_product(field, dim, homs[i], acting, limits));
    return out;
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(limits.jobs, homs.size()));
  if (jobs == 1) return build(0, homs.size());
  std::vector<std::future<std::vector<grp::CayleyGroup>>> parts;
  const std::size_t chunk = (homs.size() + jobs - 1) / jobs;
  for (std::size_t lo = 0; lo < homs.size(); lo += chunk)
    parts.push_back(std::async(std::launch::async, build, lo, std::min(homs.size(), lo + chunk)));
  std::vector<grp::CayleyGroup> out;
  for (auto &p : parts)
    for (auto &g : p.get()) out.push_back(std::move(g));
  return out;
}

// Keeps the first member of each isomorphism class, in input order.
std::vector<grp::CayleyGroup> dedupe(std::vector<grp::CayleyGroup> groups, const Limits &limits) {
  std::vector<grp::CayleyGroup> reps;
  std::vector<grp::Fingerprint> prints;
  for (auto &g : groups) {
    auto f = grp::fingerprint(g);
    bool duplicate = false;
    for (std::size_t i = 0; i < reps.size() && !duplicate; ++i)
      duplicate = prints[i] == f && grp::are_isomorphic(reps[i], g, limits);
    if (!duplicate) {
      reps.push_back(std::move(g));
      prints.push_back(std::move(f));
    }
  }
  return reps;
}

}  // namespace

VarietyCensus enumerate_variety_groups(const grp::VarietyParams &params, const Limits &limits, Traversal order) {
  params.validate();
  const BigInt n = params.n();
  if (n > limits.census_order || n > limits.cayley_order)
    throw Error(ErrorCode::LimitExceeded, "order " + n.str() + " exceeds the census limit");

  VarietyCensus census;
  census.params = params;
  const auto r_group = elementary_abelian(params.r, params.gamma);
  auto h_groups = dedupe(extensions(params.q, params.beta, r_group, limits, order, census.candidates), limits);
  std::vector<grp::CayleyGroup> all;
  for (const auto &h : h_groups)
    for (auto &g : extensions(params.p, params.alpha, h, limits, order, census.candidates)) all.push_back(std::move(g));
  const auto chain = params.chain();
  for (const auto &g : all)
    if (!grp::in_variety(g, chain))
      throw Error(ErrorCode::NotInVariety, "constructed group of order " + std::to_string(g.order()) + " left the variety");
  census.groups = dedupe(std::move(all), limits);
  std::stable_sort(census.groups.begin(), census.groups.end(), [](const grp::CayleyGroup &a, const grp::CayleyGroup &b) {
    return grp::fingerprint(a) < grp::fingerprint(b);
  });
  return census;
}

nlohmann::json to_json(const VarietyCensus &census) {
  nlohmann::json reps = nlohmann::json::array();
  nlohmann::json signatures = nlohmann::json::array();
  for (std::size_t i = 0; i < census.groups.size(); ++i) {
    const auto &g = census.groups[i];
    const auto f = grp::fingerprint(g);
    reps.push_back({{"index", i}, {"order", g.order()}, {"fingerprint", grp::to_json(f)}});
    const bool abelian = grp::is_abelian(g, g.all());
    signatures.push_back({{"index", i}, {"abelian", abelian}, {"center", f.center}, {"derived", f.derived}});
  }
  return nlohmann::json{{"params", grp::to_json(census.params)},
                        {"count", census.count()},
                        {"candidates", census.candidates},
                        {"representatives", reps},
                        {"signatures", signatures}};
}

}  // namespace aqar::enumerate
