#include "aqar/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "aqar/error.hpp"

namespace aqar::oracle {

using perm::Perm;
using perm::PermGroup;

std::uint64_t closure_order(unsigned degree, std::span<const Perm> gens, std::uint64_t limit) {
  std::unordered_set<Perm, perm::PermHash> seen{Perm(degree)};
  std::vector<Perm> queue{Perm(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto &g : gens) {
      Perm next = queue[i] * g;
      if (seen.insert(next).second) {
        if (seen.size() > limit) throw Error(ErrorCode::LimitExceeded, "closure exceeds " + std::to_string(limit));
        queue.push_back(std::move(next));
      }
    }
  return seen.size();
}

namespace {

// Calls fn on every set partition of {0..n-1} as a block label per point
// (restricted growth string).
template <class Fn>
bool any_partition(unsigned n, Fn &&fn) {
  std::vector<unsigned> label(n, 0);
  auto rec = [&](auto &self, unsigned i, unsigned blocks) -> bool {
    if (i == n) return fn(label, blocks);
    for (unsigned b = 0; b <= blocks && b < n; ++b) {
      label[i] = b;
      if (self(self, i + 1, std::max(blocks, b + 1))) return true;
    }
    return false;
  };
  return n == 0 ? false : rec(rec, 1, 1);
}

bool preserves(const Perm &g, const std::vector<unsigned> &label, unsigned blocks) {
  std::vector<unsigned> image(blocks, static_cast<unsigned>(-1));
  for (unsigned x = 0; x < label.size(); ++x) {
    auto &slot = image[label[x]];
    const unsigned target = label[g[x]];
    if (slot == static_cast<unsigned>(-1)) slot = target;
    else if (slot != target) return false;
  }
  return true;
}

bool witness_chain(const grp::CayleyGroup &g, std::span<const std::uint64_t> chain) {
  const auto all = g.all();
  if (chain.size() == 1) return grp::is_abelian(g, all) && chain[0] % grp::exponent(g, all) == 0;
  for (const auto &n : grp::all_subgroups(g)) {
    if (!grp::is_normal(g, n) || !grp::is_abelian(g, n) || chain[0] % grp::exponent(g, n) != 0) continue;
    if (witness_chain(grp::quotient(g, n), chain.subspan(1))) return true;
  }
  return false;
}

}  // namespace

bool primitive_by_partitions(const PermGroup &g) {
  const unsigned n = g.degree();
  if (n > 10) throw Error(ErrorCode::DegreeLimit, "partition scan needs degree <= 10");
  if (n <= 1) return true;
  if (orbits(g).size() != 1) return false;
  const bool blocked = any_partition(n, [&](const std::vector<unsigned> &label, unsigned blocks) {
    if (blocks == 1 || blocks == n) return false;
    return std::all_of(g.generators().begin(), g.generators().end(),
                       [&](const Perm &x) { return preserves(x, label, blocks); });
  });
  return !blocked;
}

bool in_variety_by_normal_witness(const grp::CayleyGroup &g, std::span<const std::uint64_t> chain) {
  if (chain.empty()) return g.order() == 1;
  return witness_chain(g, chain);
}

std::optional<Perm> conjugator_by_scan(const PermGroup &a, const PermGroup &b) {
  const unsigned n = a.degree();
  if (n != b.degree()) throw Error(ErrorCode::DegreeMismatch, "groups act on different degrees");
  if (n > 9) throw Error(ErrorCode::DegreeLimit, "conjugator scan needs degree <= 9");
  if (a.order() != b.order()) return std::nullopt;
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 1u);
  do {
    const Perm x = Perm::from_images(images);
    if (std::all_of(a.generators().begin(), a.generators().end(),
                    [&](const Perm &g) { return b.contains(g.conjugate_by(x)); }))
      return x;
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

std::vector<PermGroup> random_subgroups(unsigned degree, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> how_many(1, 3);
  std::uniform_int_distribution<unsigned> power(1, degree + 1);
  std::vector<PermGroup> out;
  std::vector<unsigned> images(degree);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Perm> gens;
    for (unsigned j = how_many(rng); j > 0; --j) {
      std::iota(images.begin(), images.end(), 1u);
      std::shuffle(images.begin(), images.end(), rng);
      gens.push_back(Perm::from_images(images).power(power(rng)));
    }
    out.emplace_back(degree, std::move(gens));
  }
  return out;
}

}  // namespace aqar::oracle
