#include <doctest.h>

#include "aqar/construct.hpp"
#include "aqar/enumerate.hpp"
#include "aqar/error.hpp"

using namespace aqar;
using namespace aqar::enumerate;

namespace {

std::vector<std::string> orders(const ClassInventory &inv) {
  std::vector<std::string> out;
  for (const auto &c : inv.classes) out.push_back(c.order.str());
  return out;
}

}  // namespace

TEST_CASE("primitive classes at small degree") {
  auto inv = enumerate_primitive_classes(4, 2, 3);
  CHECK(orders(inv) == std::vector<std::string>{"12"});
  CHECK(perm::subgroup_conjugate(inv.classes[0].representative,
                                 construct::primitive_aqar_group(2, 3, construct::PrimitiveCase::AffineQR)));
  inv = enumerate_primitive_classes(3, 3, 2);
  CHECK(orders(inv) == std::vector<std::string>{"3", "6"});
  CHECK(inv.classes[0].signature == std::vector<unsigned>{1, 0});
  CHECK(inv.classes[1].signature == std::vector<unsigned>{1, 1});
  inv = enumerate_primitive_classes(5, 5, 2);
  CHECK(orders(inv) == std::vector<std::string>{"5", "10"});
  CHECK(enumerate_primitive_classes(6, 2, 3).classes.empty());
  CHECK_THROWS_AS(enumerate_primitive_classes(9, 3, 2), Error);
}

TEST_CASE("transitive classes at small degree") {
  auto inv = enumerate_transitive_classes(4, 2, 3);
  CHECK(orders(inv) == std::vector<std::string>{"4", "12"});
  CHECK(inv.classes[0].class_size == 1);
  inv = enumerate_transitive_classes(3, 3, 2);
  CHECK(orders(inv) == std::vector<std::string>{"3", "6"});
  inv = enumerate_transitive_classes(2, 2, 3);
  CHECK(orders(inv) == std::vector<std::string>{"2"});
  CHECK_THROWS_AS(enumerate_transitive_classes(7, 7, 2), Error);
}

TEST_CASE("unfiltered inventories list every class once") {
  const auto inv = enumerate_classes(4, ClassFilter{{2}, false, false});
  // trivial, two classes of order 2, two of order 4
  CHECK(orders(inv) == std::vector<std::string>{"1", "2", "2", "4", "4"});
  CHECK(inv.total_subgroups() == 1 + 6 + 3 + 1 + 3);
  for (std::size_t i = 0; i < inv.classes.size(); ++i)
    for (std::size_t j = i + 1; j < inv.classes.size(); ++j)
      CHECK_FALSE(perm::subgroup_conjugate(inv.classes[i].representative, inv.classes[j].representative));
}

TEST_CASE("cyclic primitive groups of prime degree") {
  for (unsigned n = 2; n <= 6; ++n)
    for (std::uint64_t r : {2, 3, 5}) {
      const auto inv = enumerate_classes(n, ClassFilter{{r}, true, true});
      CHECK(inv.classes.size() == (n == r ? 1u : 0u));
    }
}

TEST_CASE("degree eight through the regular normal subgroup") {
  const auto inv = enumerate_primitive_classes(8, 2, 7);
  CHECK(inv.method == "regular-normal-subgroup");
  CHECK(inv.regular_subgroups == 30);
  CHECK(inv.regular_subgroups_conjugate);
  REQUIRE(inv.classes.size() == 1);
  CHECK(inv.classes[0].order == 56);
  CHECK(inv.classes[0].signature == std::vector<unsigned>{3, 1});
  CHECK(perm::subgroup_conjugate(inv.classes[0].representative,
                                 construct::primitive_aqar_group(2, 7, construct::PrimitiveCase::AffineQR)));
}

TEST_CASE("variety censuses") {
  struct Case {
    grp::VarietyParams params;
    std::size_t count;
  };
  for (const auto &c : {Case{{3, 2, 5, 1, 1, 0}, 2}, Case{{5, 2, 3, 0, 1, 1}, 1}, Case{{2, 3, 5, 2, 1, 0}, 2},
                        Case{{3, 2, 5, 1, 1, 1}, 2}, Case{{2, 3, 5, 2, 1, 1}, 2}, Case{{2, 3, 5, 0, 0, 0}, 1}}) {
    const auto census = enumerate_variety_groups(c.params);
    CHECK(census.count() == c.count);
    const auto reversed = enumerate_variety_groups(c.params, {}, Traversal::Reverse);
    CHECK(reversed.count() == c.count);
    const auto chain = c.params.chain();
    for (std::size_t i = 0; i < census.groups.size(); ++i) {
      CHECK(census.groups[i].order() == c.params.n());
      CHECK(grp::in_variety(census.groups[i], chain));
      for (std::size_t j = i + 1; j < census.groups.size(); ++j)
        CHECK_FALSE(grp::are_isomorphic(census.groups[i], census.groups[j]));
      bool matched = false;
      for (const auto &g : reversed.groups) matched = matched || grp::are_isomorphic(census.groups[i], g);
      CHECK(matched);
    }
  }
}

TEST_CASE("census members are the expected groups") {
  const auto c6 = enumerate_variety_groups({3, 2, 5, 1, 1, 0});
  const auto s3 = grp::cayley_from(perm::PermGroup::symmetric(3));
  const auto cyc = grp::CayleyGroup::cyclic(6);
  CHECK(((grp::are_isomorphic(c6.groups[0], cyc) && grp::are_isomorphic(c6.groups[1], s3)) ||
         (grp::are_isomorphic(c6.groups[1], cyc) && grp::are_isomorphic(c6.groups[0], s3))));
  const auto only = enumerate_variety_groups({5, 2, 3, 0, 1, 1});
  CHECK(grp::are_isomorphic(only.groups[0], cyc));
}

TEST_CASE("census limits and parallel build") {
  Limits tight;
  tight.census_order = 10;
  CHECK_THROWS_AS(enumerate_variety_groups({2, 3, 5, 2, 1, 0}, tight), Error);
  CHECK_THROWS_AS(enumerate_variety_groups({2, 2, 5, 1, 1, 0}), Error);
  Limits par;
  par.jobs = 3;
  CHECK(enumerate_variety_groups({2, 3, 5, 2, 1, 1}, par).count() == 2);
}
