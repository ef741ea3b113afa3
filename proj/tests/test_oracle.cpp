#include <doctest.h>

#include <set>

#include "aqar/construct.hpp"
#include "aqar/enumerate.hpp"
#include "aqar/error.hpp"
#include "aqar/oracle.hpp"

using namespace aqar;
using perm::Perm;
using perm::PermGroup;

namespace {

PermGroup pgrp(unsigned n, std::initializer_list<const char *> cycles) {
  std::vector<Perm> gens;
  for (const char *c : cycles) gens.push_back(Perm::parse_cycles(n, c));
  return PermGroup(n, gens);
}

}  // namespace

TEST_CASE("closure order matches the stabilizer chain") {
  const auto groups = oracle::random_subgroups(6, 30, 2024);
  std::set<std::uint64_t> distinct;
  for (const auto &g : groups) {
    const auto order = oracle::closure_order(6, g.generators());
    CHECK(BigInt(order) == g.order());
    distinct.insert(order);
  }
  CHECK(distinct.size() >= 4);
  CHECK(oracle::closure_order(5, PermGroup::symmetric(5).generators()) == 120);
  CHECK_THROWS_AS(oracle::closure_order(6, PermGroup::symmetric(6).generators(), 100), Error);
}

TEST_CASE("random subgroups are reproducible") {
  const auto a = oracle::random_subgroups(6, 5, 7);
  const auto b = oracle::random_subgroups(6, 5, 7);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].generators() == b[i].generators());
}

TEST_CASE("partition scan agrees with the block algorithm") {
  CHECK(oracle::primitive_by_partitions(PermGroup::symmetric(4)));
  CHECK_FALSE(oracle::primitive_by_partitions(pgrp(4, {"(1,2,3,4)"})));
  CHECK_FALSE(oracle::primitive_by_partitions(pgrp(4, {"(1,2)"})));
  CHECK(oracle::primitive_by_partitions(pgrp(5, {"(1,2,3,4,5)"})));
  for (unsigned n = 2; n <= 6; ++n)
    for (std::uint64_t q : {2, 3, 5})
      for (std::uint64_t r : {2, 3, 5}) {
        if (q == r) continue;
        for (const auto &c : enumerate::enumerate_transitive_classes(n, q, r).classes)
          CHECK(oracle::primitive_by_partitions(c.representative) == perm::is_primitive(c.representative).primitive);
      }
}

TEST_CASE("normal-subgroup witness agrees with verbal subgroups") {
  const std::vector<grp::CayleyGroup> groups{
      grp::cayley_from(PermGroup::symmetric(3)), grp::cayley_from(PermGroup::symmetric(4)),
      grp::cayley_from(pgrp(4, {"(1,2)(3,4)", "(1,2,3)"})), grp::CayleyGroup::cyclic(6),
      grp::CayleyGroup::cyclic(4), grp::direct_product(grp::CayleyGroup::cyclic(2), grp::CayleyGroup::cyclic(2))};
  const std::vector<std::vector<std::uint64_t>> chains{{2}, {3}, {2, 3}, {3, 2}, {2, 3, 2}, {3, 2, 3}, {2, 2}, {6}};
  for (const auto &g : groups)
    for (const auto &c : chains) CHECK(oracle::in_variety_by_normal_witness(g, c) == grp::in_variety(g, c));
  CHECK(oracle::in_variety_by_normal_witness(grp::CayleyGroup::cyclic(1), {}));
}

TEST_CASE("conjugator scan agrees with backtracking") {
  const auto a = pgrp(4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  const auto b = pgrp(4, {"(1,2)", "(3,4)"});
  CHECK_FALSE(oracle::conjugator_by_scan(a, b).has_value());
  CHECK_FALSE(perm::subgroup_conjugate(a, b).has_value());
  const auto c = pgrp(4, {"(1,3)", "(2,4)"});
  const auto x = oracle::conjugator_by_scan(b, c);
  REQUIRE(x.has_value());
  CHECK(perm::same_group(PermGroup(4, {b.generators()[0].conjugate_by(*x), b.generators()[1].conjugate_by(*x)}), c));
  CHECK(perm::subgroup_conjugate(b, c).has_value());
  const auto built = construct::primitive_aqar_group(2, 7, construct::PrimitiveCase::AffineQR);
  const auto found = enumerate::enumerate_primitive_classes(8, 2, 7).classes.at(0).representative;
  CHECK(oracle::conjugator_by_scan(built, found).has_value());
}
