#include <doctest.h>

#include "aqar/error.hpp"
#include "aqar/matgrp.hpp"

using namespace aqar;
using namespace aqar::mat;

namespace {

GL space(unsigned t, unsigned k, unsigned alpha) { return GL(gf::make_field(t, k), alpha); }

Mat ints(const GL &s, std::vector<std::vector<long>> rows) { return s.from_ints(rows); }

}  // namespace

TEST_CASE("general linear group orders") {
  CHECK(gl_order(2, gf::field_make(2, 1)) == 6);
  CHECK(gl_order(2, gf::field_make(3, 1)) == 48);
  CHECK(gl_order(3, gf::field_make(2, 1)) == 168);
  CHECK(gl_order(1, gf::field_make(2, 2)) == 3);
  CHECK(general_linear_group(space(3, 1, 2)).order() == 48);
  CHECK(general_linear_group(space(2, 1, 3)).order() == 168);
  CHECK(general_linear_group(space(2, 2, 2)).order() == 180);
}

TEST_CASE("matrix arithmetic") {
  const auto s = space(3, 1, 2);
  const Mat a = ints(s, {{1, 2}, {0, 1}});
  const Mat b = ints(s, {{0, 1}, {1, 0}});
  CHECK(s.mul(a, s.inverse(a)) == s.identity());
  CHECK(s.det(b) == s.field().from_int(-1));
  CHECK(s.order(a) == 3);
  CHECK(s.conjugate(a, b) == ints(s, {{1, 0}, {2, 1}}));
  CHECK(s.apply(a, {0, 1}) == Vec{2, 1});
  CHECK_THROWS_AS(s.inverse(ints(s, {{1, 1}, {1, 1}})), Error);
}

TEST_CASE("element enumeration is ordered and complete") {
  const auto s = space(2, 1, 3);
  std::vector<Mat> all;
  s.for_each_element([&](const Mat &m) {
    all.push_back(m);
    return true;
  });
  CHECK(all.size() == 168);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("closure") {
  const auto s = space(2, 1, 2);
  CHECK(closure(s, {ints(s, {{0, 1}, {1, 1}})}).order() == 3);
  CHECK(closure(s, {s.identity()}).order() == 1);
  const auto s3 = space(3, 1, 2);
  CHECK(closure(s3, {ints(s3, {{-1, 0}, {0, 1}}), ints(s3, {{1, 0}, {0, -1}}), ints(s3, {{-1, 0}, {0, -1}})}).order() ==
        4);
  try {
    closure(s, {ints(s, {{1, 1}, {1, 1}})});
    FAIL("expected SingularGenerator");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::SingularGenerator);
  }
  Limits tight;
  tight.closure_elements = 10;
  CHECK_THROWS_AS(general_linear_group(s3, tight), Error);
}

TEST_CASE("irreducibility by spinning") {
  const auto s = space(2, 1, 2);
  const Mat companion = ints(s, {{0, 1}, {1, 1}});
  CHECK(is_irreducible(s, std::vector<Mat>{companion}));
  CHECK_FALSE(is_irreducible(s, std::vector<Mat>{}));
  const auto s3 = space(3, 1, 2);
  CHECK_FALSE(is_irreducible(s3, std::vector<Mat>{ints(s3, {{2, 0}, {0, 1}})}));
  Limits tight;
  tight.spin_limit = 3;
  CHECK_THROWS_AS(is_irreducible(s, std::vector<Mat>{companion}, tight), Error);
}

TEST_CASE("linear primitivity") {
  const auto s3 = space(3, 1, 2);
  const Mat swap = ints(s3, {{0, 1}, {1, 0}});
  const Mat flip = ints(s3, {{1, 0}, {0, 2}});
  CHECK_FALSE(is_primitive_linear(s3, std::vector<Mat>{flip}));
  CHECK_FALSE(is_primitive_linear(s3, std::vector<Mat>{swap, flip}));
  const Mat quarter = ints(s3, {{0, 2}, {1, 0}});
  const Mat other = ints(s3, {{1, 1}, {1, 2}});
  CHECK(is_primitive_linear(s3, std::vector<Mat>{quarter, other}));
  CHECK_FALSE(is_primitive_linear(s3, std::vector<Mat>{quarter}));
  for (auto [t, alpha] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}, {5u, 2u}}) {
    const auto g = singer_subgroup(alpha, gf::make_field(t, 1));
    CHECK(is_primitive_linear(g.space(), g.generators()));
  }
  const auto s2 = space(2, 1, 3);
  const Mat cycle = ints(s2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  CHECK_FALSE(is_primitive_linear(s2, std::vector<Mat>{cycle}));
  CHECK_THROWS_AS(is_primitive_linear(space(2, 1, 4), std::vector<Mat>{}), Error);
}

TEST_CASE("Singer cycles") {
  for (auto [t, k, alpha, order] : {std::tuple{2u, 1u, 2u, 3}, {3u, 1u, 2u, 8}, {2u, 1u, 3u, 7}, {2u, 2u, 2u, 15},
                                    {5u, 1u, 2u, 24}, {2u, 1u, 4u, 15}, {3u, 1u, 1u, 2}}) {
    const auto g = singer_subgroup(alpha, gf::make_field(t, k));
    CHECK(g.order() == order);
    CHECK(g.generators().size() == 1);
    CHECK(is_irreducible(g));
  }
}

TEST_CASE("maximal elementary abelian r-subgroups by construction") {
  auto f2 = gf::make_field(2, 1);
  auto f3 = gf::make_field(3, 1);
  auto g = maximal_ar_subgroup(2, f2, 3);
  REQUIRE(g);
  CHECK(g->order() == 3);
  CHECK(is_irreducible(*g));
  g = maximal_ar_subgroup(2, f3, 2);
  REQUIRE(g);
  CHECK(g->order() == 4);
  for (const auto &m : g->elements()) {
    CHECK(m(0, 1) == 0);
    CHECK(m(1, 0) == 0);
  }
  g = maximal_ar_subgroup(3, f2, 3);
  REQUIRE(g);
  CHECK(g->order() == 3);
  CHECK(g->generators()[0](2, 2) == 1);
  CHECK_FALSE(maximal_ar_subgroup(1, f2, 7));
  try {
    maximal_ar_subgroup(2, f2, 2);
    FAIL("expected CharacteristicConflict");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::CharacteristicConflict);
  }
}

TEST_CASE("conjugacy in GL") {
  const auto s = space(2, 1, 2);
  const auto a = closure(s, {ints(s, {{0, 1}, {1, 1}})});
  const auto b = closure(s, {ints(s, {{1, 1}, {1, 0}})});
  const auto x = conjugate_in_gl(a, b);
  REQUIRE(x);
  CHECK(b.contains(s.conjugate(a.generators()[0], *x)));
  const auto s3 = space(3, 1, 2);
  const auto central = closure(s3, {ints(s3, {{-1, 0}, {0, -1}})});
  const auto diag = closure(s3, {ints(s3, {{1, 0}, {0, -1}})});
  CHECK_FALSE(conjugate_in_gl(central, diag));
  CHECK(conjugate_in_gl(diag, diag) == s3.identity());
  Limits tight;
  tight.gl_bruteforce = 10;
  CHECK_THROWS_AS(conjugate_in_gl(diag, diag, tight), Error);
}

TEST_CASE("classification of maximal elementary abelian r-subgroups") {
  auto f2 = gf::make_field(2, 1);
  auto f3 = gf::make_field(3, 1);
  struct Case {
    unsigned alpha;
    gf::FieldPtr field;
    std::uint64_t r;
    BigInt order;
  };
  for (const auto &c : {Case{2, f2, 3, 3}, Case{2, f3, 2, 4}, Case{3, f2, 3, 3}, Case{3, f2, 7, 7}}) {
    const auto classes = classify_elem_abelian_r(c.alpha, c.field, c.r);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].representative.order() == c.order);
    const auto built = maximal_ar_subgroup(c.alpha, c.field, c.r);
    REQUIRE(built);
    CHECK(conjugate_in_gl(*built, classes[0].representative));
  }
  const auto three = classify_elem_abelian_r(3, f2, 3);
  CHECK(three[0].class_size == 28);
  const auto two = classify_elem_abelian_r(2, f3, 2);
  CHECK(two[0].class_size == 6);
  const auto gl22 = classify_elem_abelian_r(3, f2, 2);
  CHECK(gl22.size() == 2);
  for (std::size_t i = 0; i < gl22.size(); ++i)
    for (std::size_t j = i + 1; j < gl22.size(); ++j)
      CHECK_FALSE(conjugate_in_gl(gl22[i].representative, gl22[j].representative));
}

TEST_CASE("matrix group JSON") {
  const auto s = space(2, 1, 2);
  const auto g = closure(s, {ints(s, {{0, 1}, {1, 1}})});
  const auto j = to_json(g);
  CHECK(j.dump() == R"({"alpha":2,"field":{"k":1,"modulus":[0,1],"t":2},"generators":[[[[0],[1]],[[1],[1]]]]})");
  CHECK(mat_group_from_json(j).order() == 3);
  const auto ji = nlohmann::json::parse(R"({"field":{"t":3,"k":1},"alpha":2,"generators":[[[2,0],[0,1]],[[1,0],[0,2]]]})");
  CHECK(mat_group_from_json(ji).order() == 4);
  const auto bad = nlohmann::json::parse(R"({"field":{"t":2,"k":2},"alpha":1,"generators":[[[1]]]})");
  CHECK_THROWS_AS(mat_group_from_json(bad), Error);
}
