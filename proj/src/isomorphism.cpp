#include <algorithm>

#include "aqar/error.hpp"
#include "aqar/groupmodel.hpp"

namespace aqar::grp {

namespace {

constexpr Index unset = static_cast<Index>(-1);

std::vector<std::pair<std::uint64_t, std::size_t>> element_invariants(const CayleyGroup &g) {
  std::vector<std::pair<std::uint64_t, std::size_t>> inv(g.order());
  for (Index x = 0; x < g.order(); ++x) {
    std::size_t centralizer = 0;
    for (Index y = 0; y < g.order(); ++y) centralizer += g.mul(x, y) == g.mul(y, x);
    inv[x] = {g.element_order(x), centralizer};
  }
  return inv;
}

// Extends g_j -> images[j] (j < images.size()) along right multiplication from
// the identity.  Fails on any inconsistency or non-injectivity.
bool propagate(const CayleyGroup &a, const CayleyGroup &b, const std::vector<Index> &images,
               std::vector<Index> &phi) {
  const auto &gens = a.generators();
  std::fill(phi.begin(), phi.end(), unset);
  std::vector<char> used(b.order(), 0);
  std::vector<Index> reached{a.identity()};
  phi[a.identity()] = b.identity();
  used[b.identity()] = 1;
  for (std::size_t i = 0; i < reached.size(); ++i) {
    const Index x = reached[i];
    for (std::size_t j = 0; j < images.size(); ++j) {
      const Index y = a.mul(x, gens[j]);
      const Index img = b.mul(phi[x], images[j]);
      if (phi[y] == unset) {
        if (used[img]) return false;
        phi[y] = img;
        used[img] = 1;
        reached.push_back(y);
      } else if (phi[y] != img) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<Index>> find_isomorphism(const CayleyGroup &a, const CayleyGroup &b, const Limits &limits) {
  for (auto n : {a.order(), b.order()})
    if (n > limits.cayley_order)
      throw Error(ErrorCode::LimitExceeded, "group order " + std::to_string(n) + " exceeds the table limit");
  if (a.order() != b.order()) return std::nullopt;
  if (fingerprint(a) != fingerprint(b)) return std::nullopt;

  const auto inv_a = element_invariants(a);
  const auto inv_b = element_invariants(b);
  const auto &gens = a.generators();
  std::vector<std::vector<Index>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (Index y = 0; y < b.order(); ++y)
      if (inv_b[y] == inv_a[gens[j]]) candidates[j].push_back(y);

  std::vector<Index> images;
  std::vector<Index> phi(a.order(), unset);
  auto search = [&](auto &self) -> bool {
    if (images.size() == gens.size()) return true;
    for (auto y : candidates[images.size()]) {
      images.push_back(y);
      if (propagate(a, b, images, phi) && self(self)) return true;
      images.pop_back();
    }
    return false;
  };
  if (!search(search)) return std::nullopt;
  propagate(a, b, images, phi);
  return phi;
}

bool are_isomorphic(const CayleyGroup &a, const CayleyGroup &b, const Limits &limits) {
  return find_isomorphism(a, b, limits).has_value();
}

}  // namespace aqar::grp
