#include <doctest.h>

#include "aqar/construct.hpp"
#include "aqar/error.hpp"
#include "aqar/groupmodel.hpp"

using namespace aqar;
using namespace aqar::grp;

namespace {

CayleyGroup from_cycles(unsigned n, std::initializer_list<const char *> cycles) {
  std::vector<perm::Perm> gens;
  for (auto c : cycles) gens.push_back(perm::Perm::parse_cycles(n, c));
  return cayley_from(perm::PermGroup(n, gens));
}

CayleyGroup s3() { return from_cycles(3, {"(1 2 3)", "(1 2)"}); }
CayleyGroup a4() { return from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)", "(2 3 4)"}); }
CayleyGroup c(std::size_t n) { return CayleyGroup::cyclic(n); }

CayleyGroup companion_a4() {
  auto f2 = gf::make_field(2, 1);
  mat::GL space(f2, 2);
  const auto h = c(3);
  const mat::Mat comp = space.from_ints({{0, 1}, {1, 1}});
  auto action = construct::action_from_generators(space, h, std::vector<mat::Mat>{comp});
  REQUIRE(action);
  return construct::semidirect_product(f2, 2, *action, h);
}

}  // namespace

TEST_CASE("tables from concrete groups") {
  CHECK(s3().order() == 6);
  CHECK(cayley_from(perm::PermGroup(3, {})).order() == 1);
  const auto singer = mat::singer_subgroup(2, gf::make_field(2, 1));
  CHECK(are_isomorphic(cayley_from(singer), c(3)));
  Limits tight;
  tight.cayley_order = 5;
  CHECK_THROWS_AS(cayley_from(perm::PermGroup::symmetric(3), tight), Error);
}

TEST_CASE("Fitting subgroup") {
  CHECK(fitting_subgroup(s3()).size() == 3);
  CHECK(fitting_subgroup(a4()).size() == 4);
  CHECK(fitting_subgroup(c(12)).size() == 12);
  CHECK(fitting_subgroup(from_cycles(4, {"(1 2 3 4)", "(1 2)"})).size() == 4);
  CHECK(fitting_subgroup(direct_product(s3(), c(5))).size() == 15);
  CHECK(fitting_subgroup(c(1)).size() == 1);
  const auto f = fitting_subgroup(a4());
  CHECK(is_normal(a4(), f));
}

TEST_CASE("isomorphism testing") {
  CHECK_FALSE(are_isomorphic(c(6), s3()));
  CHECK(are_isomorphic(a4(), companion_a4()));
  CHECK_FALSE(are_isomorphic(direct_product(c(2), c(2)), c(4)));
  CHECK(are_isomorphic(direct_product(c(2), c(3)), c(6)));
  CHECK_FALSE(are_isomorphic(direct_product(c(2), c(4)), direct_product(c(2), direct_product(c(2), c(2)))));
  const auto d4 = from_cycles(4, {"(1 2 3 4)", "(1 3)"});
  const auto q8 = cayley_from(mat::closure(mat::GL(gf::make_field(3, 1), 2),
                                           {mat::GL(gf::make_field(3, 1), 2).from_ints({{0, 1}, {-1, 0}}),
                                            mat::GL(gf::make_field(3, 1), 2).from_ints({{1, 1}, {1, -1}})}));
  REQUIRE(q8.order() == 8);
  CHECK_FALSE(are_isomorphic(d4, q8));
  const auto phi = find_isomorphism(a4(), companion_a4());
  REQUIRE(phi);
  const auto b = companion_a4();
  const auto a = a4();
  for (Index x = 0; x < 12; ++x)
    for (Index y = 0; y < 12; ++y) REQUIRE((*phi)[a.mul(x, y)] == b.mul((*phi)[x], (*phi)[y]));
}

TEST_CASE("isomorphism is an equivalence on a sample") {
  const std::vector<CayleyGroup> sample{c(6), s3(), direct_product(c(3), c(2)), from_cycles(6, {"(1 2 3)(4 5 6)", "(1 4)(2 6)(3 5)"}),
                                        from_cycles(5, {"(1 2 3)", "(4 5)"})};
  for (const auto &x : sample) CHECK(are_isomorphic(x, x));
  for (const auto &x : sample)
    for (const auto &y : sample) {
      CHECK(are_isomorphic(x, y) == are_isomorphic(y, x));
      if (!(fingerprint(x) == fingerprint(y))) CHECK_FALSE(are_isomorphic(x, y));
      for (const auto &z : sample)
        if (are_isomorphic(x, y) && are_isomorphic(y, z)) CHECK(are_isomorphic(x, z));
    }
}

TEST_CASE("verbal subgroups") {
  CHECK(verbal_ar_subgroup(s3(), 2).size() == 3);
  CHECK(verbal_ar_subgroup(a4(), 3).size() == 4);
  CHECK(verbal_ar_subgroup(c(6), 2).size() == 3);
  for (const auto &g : {s3(), a4(), c(6), companion_a4(), direct_product(a4(), c(5))})
    for (std::uint64_t r : {2, 3, 5}) {
      const auto k = verbal_ar_subgroup(g, r);
      REQUIRE(is_normal(g, k));
      const auto qt = quotient(g, k);
      CHECK(is_abelian(qt, qt.all()));
      CHECK(r % qt.exponent() == 0);
    }
}

TEST_CASE("variety membership") {
  const std::uint64_t c23[] = {2, 3}, c32[] = {3, 2}, c325[] = {3, 2, 5};
  CHECK(in_variety(a4(), c23));
  CHECK_FALSE(in_variety(s3(), c23));
  CHECK(in_variety(s3(), c32));
  CHECK(in_variety(c(30), c325));
  const std::uint64_t c2[] = {2};
  CHECK(in_variety(direct_product(c(2), c(2)), c2));
  CHECK_FALSE(in_variety(c(4), c2));
  CHECK_THROWS_AS(in_variety(c(2), std::span<const std::uint64_t>{}), Error);
}

TEST_CASE("quotients") {
  const auto g = a4();
  CHECK(are_isomorphic(quotient(g, verbal_ar_subgroup(g, 3)), c(3)));
  CHECK(are_isomorphic(quotient(g, {g.identity()}), g));
  const auto six = c(6);
  CHECK(are_isomorphic(quotient(six, {0, 3}), c(3)));
  const auto sym = s3();
  const Index t = sym.generators().back();
  try {
    quotient(sym, generated(sym, std::vector<Index>{t}));
    FAIL("expected NotNormal");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotNormal);
  }
}

TEST_CASE("Sylow systems") {
  for (const auto &g : {s3(), c(6), direct_product(a4(), c(5)), companion_a4(), from_cycles(4, {"(1 2 3 4)", "(1 2)"})}) {
    const auto sys = sylow_system(g);
    REQUIRE(sys.primes.size() == sys.subgroups.size());
    for (std::size_t i = 0; i < sys.primes.size(); ++i) {
      const auto u = sys.primes[i];
      CHECK(sys.subgroups[i].size() == checked_pow(u, valuation(g.order(), u)));
      for (std::size_t j = 0; j < sys.primes.size(); ++j) {
        const auto &a = sys.subgroups[i];
        const auto &b = sys.subgroups[j];
        CHECK(product_set(g, a, b).size() * intersect(a, b).size() == a.size() * b.size());
        CHECK(permutable(g, a, b));
      }
    }
  }
  const auto seeded = sylow_system(direct_product(a4(), c(5)), 17);
  CHECK(seeded.subgroups.size() == 3);
}

TEST_CASE("subgroup enumeration") {
  CHECK(all_subgroups(from_cycles(4, {"(1 2 3 4)", "(1 2)"})).size() == 30);
  CHECK(all_subgroups(a4()).size() == 10);
  CHECK(all_subgroups(c(12)).size() == 6);
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(CayleyGroup({{0, 1}, {0, 1}}, 0), Error);
  CHECK_THROWS_AS(CayleyGroup({{0, 1, 2, 3, 4},
                               {1, 0, 3, 4, 2},
                               {2, 4, 0, 1, 3},
                               {3, 2, 4, 0, 1},
                               {4, 3, 1, 2, 0}},
                              0),
                  Error);
  CHECK_THROWS_AS(CayleyGroup({{1, 0}, {0, 1}}, 0), Error);
}

TEST_CASE("table JSON and parameters") {
  const auto j = to_json(c(3));
  CHECK(j.dump() == R"({"identity":0,"order":3,"table":[[0,1,2],[1,2,0],[2,0,1]]})");
  CHECK(are_isomorphic(cayley_from_json(j), c(3)));
  VarietyParams v{2, 3, 5, 2, 1, 1};
  CHECK(v.n() == 60);
  CHECK_NOTHROW(v.validate());
  CHECK_THROWS_AS((VarietyParams{2, 2, 5, 1, 1, 1}.validate()), Error);
  CHECK(to_json(fingerprint(s3())).dump() == R"({"center":1,"derived":3,"exponent":6,"order_histogram":{"1":1,"2":3,"3":2}})");
}
