#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "aqar/groupmodel.hpp"
#include "aqar/perm.hpp"

/// Slow reference implementations used to cross-check the engine.  None of
/// them call the stabilizer chain, the block algorithm or verbal subgroups.
namespace aqar::oracle {

/// Size of <gens> by breadth-first closure.  Throws LimitExceeded past `limit`.
std::uint64_t closure_order(unsigned degree, std::span<const perm::Perm> gens, std::uint64_t limit = 1'000'000);

/// Transitive and no set partition into k blocks, 1 < k < n, is preserved by
/// every generator.  Every partition is tried.  n <= 10.
bool primitive_by_partitions(const perm::PermGroup &g);

/// G lies in A_{c0} ... A_{cm} iff some normal N is abelian of exponent
/// dividing c0 and G/N lies in A_{c1} ... A_{cm}; every normal subgroup is tried.
bool in_variety_by_normal_witness(const grp::CayleyGroup &g, std::span<const std::uint64_t> chain);

/// x in S_n with x^-1 a x = b, scanning all of S_n.  n <= 9.
std::optional<perm::Perm> conjugator_by_scan(const perm::PermGroup &a, const perm::PermGroup &b);

/// `count` subgroups of S_degree, each generated by 1 to 3 powers x^e of
/// uniform random permutations x, 1 <= e <= degree + 1.
std::vector<perm::PermGroup> random_subgroups(unsigned degree, std::size_t count, std::uint64_t seed);

}  // namespace aqar::oracle
