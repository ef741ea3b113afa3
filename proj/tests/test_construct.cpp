#include <doctest.h>

#include <algorithm>

#include "aqar/construct.hpp"
#include "aqar/error.hpp"

using namespace aqar;
using namespace aqar::construct;

namespace {

perm::PermGroup pgrp(unsigned n, std::initializer_list<const char *> cycles) {
  std::vector<perm::Perm> gens;
  for (auto c : cycles) gens.push_back(perm::Perm::parse_cycles(n, c));
  return perm::PermGroup(n, gens);
}

ErrorCode code_of(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("primitive groups in the affine case") {
  const auto g32 = primitive_aqar_group(3, 2, PrimitiveCase::AffineQR);
  CHECK(g32.degree() == 3);
  CHECK(g32.order() == 6);
  CHECK(grp::are_isomorphic(grp::cayley_from(g32), grp::cayley_from(perm::PermGroup::symmetric(3))));
  const auto g23 = primitive_aqar_group(2, 3, PrimitiveCase::AffineQR);
  CHECK(g23.degree() == 4);
  CHECK(g23.order() == 12);
  CHECK(perm::subgroup_conjugate(g23, pgrp(4, {"(1 2)(3 4)", "(1 3)(2 4)", "(2 3 4)"})));
  const auto g27 = primitive_aqar_group(2, 7, PrimitiveCase::AffineQR);
  CHECK(g27.degree() == 8);
  CHECK(g27.order() == 56);
  CHECK(perm::is_primitive(g27).primitive);
  const auto spec = primitive_spec(2, 7, PrimitiveCase::AffineQR);
  CHECK(provenance(spec).dump() == R"({"beta":3,"case":"AffineQR","n":8,"q":2,"r":7,"theorem":"B"})");
}

TEST_CASE("cyclic primitive groups") {
  const auto cr = primitive_aqar_group(2, 5, PrimitiveCase::CyclicR);
  CHECK(cr.degree() == 5);
  CHECK(cr.order() == 5);
  const auto cq = primitive_aqar_group(7, 2, PrimitiveCase::CyclicQ);
  CHECK(cq.degree() == 7);
  CHECK(cq.order() == 7);
}

TEST_CASE("construction preconditions") {
  CHECK(code_of([] { primitive_aqar_group(3, 3, PrimitiveCase::AffineQR); }) == ErrorCode::SamePrime);
  CHECK(code_of([] { primitive_aqar_group(2, 5, PrimitiveCase::AffineQR); }) == ErrorCode::DegreeLimit);
  CHECK(code_of([] { primitive_aqar_group(4, 3, PrimitiveCase::AffineQR); }) == ErrorCode::NotPrime);
  CHECK(parse_case("affine") == PrimitiveCase::AffineQR);
  CHECK_THROWS_AS(parse_case("other"), Error);
}

TEST_CASE("structure verification") {
  const auto rep = verify_primitive_structure(primitive_aqar_group(2, 3, PrimitiveCase::AffineQR), 2, 3);
  CHECK(rep.kind == PrimitiveCase::AffineQR);
  CHECK(rep.all_passed());
  CHECK(rep.checks.size() == 8);
  CHECK(rep.minimal_normal_exponent == 2);
  const auto cyc = verify_primitive_structure(pgrp(3, {"(1 2 3)"}), 2, 3);
  CHECK(cyc.kind == PrimitiveCase::CyclicR);
  CHECK(cyc.all_passed());
  const auto s3 = verify_primitive_structure(primitive_aqar_group(3, 2, PrimitiveCase::AffineQR), 3, 2);
  CHECK(s3.all_passed());
  CHECK(s3.minimal_normal_exponent == 1);
  const auto exponent_check = std::find_if(s3.checks.begin(), s3.checks.end(),
                                           [](const Check &c) { return c.id == "minimal_normal_prime_power"; });
  REQUIRE(exponent_check != s3.checks.end());
  CHECK(exponent_check->passed);
  CHECK(exponent_check->detail.find("strict k > 1") != std::string::npos);
  CHECK(code_of([] { verify_primitive_structure(pgrp(4, {"(1 2 3 4)"}), 2, 3); }) == ErrorCode::NotPrimitive);
  CHECK(code_of([] { verify_primitive_structure(perm::PermGroup::symmetric(4), 2, 3); }) == ErrorCode::NotInVariety);
  CHECK(code_of([] { verify_primitive_structure(pgrp(4, {"(1 2)"}), 2, 3); }) == ErrorCode::NotPrimitive);
}

TEST_CASE("every desk-scale construction verifies") {
  for (std::uint64_t q : {2, 3, 5, 7})
    for (std::uint64_t r : {2, 3, 5, 7}) {
      if (q == r) continue;
      for (auto kind : {PrimitiveCase::CyclicR, PrimitiveCase::CyclicQ, PrimitiveCase::AffineQR}) {
        perm::PermGroup g;
        try {
          g = primitive_aqar_group(q, r, kind);
        } catch (const Error &e) {
          REQUIRE(e.code() == ErrorCode::DegreeLimit);
          continue;
        }
        const auto rep = verify_primitive_structure(g, q, r);
        CHECK(rep.all_passed());
        if (kind == PrimitiveCase::AffineQR) CHECK(g.order() == BigInt(g.degree()) * r);
      }
    }
}

TEST_CASE("semidirect products") {
  auto f2 = gf::make_field(2, 1);
  auto f3 = gf::make_field(3, 1);
  const auto c2 = grp::CayleyGroup::cyclic(2);
  const auto c3 = grp::CayleyGroup::cyclic(3);

  mat::GL gl1(f3, 1);
  auto inversion = action_from_generators(gl1, c2, std::vector<mat::Mat>{gl1.from_ints({{-1}})});
  REQUIRE(inversion);
  const auto s3 = semidirect_product(f3, 1, *inversion, c2);
  CHECK(grp::are_isomorphic(s3, grp::cayley_from(perm::PermGroup::symmetric(3))));

  mat::GL gl2(f2, 2);
  auto comp = action_from_generators(gl2, c3, std::vector<mat::Mat>{gl2.from_ints({{0, 1}, {1, 1}})});
  REQUIRE(comp);
  const auto a4 = semidirect_product(f2, 2, *comp, c3);
  CHECK(a4.order() == 12);
  CHECK_FALSE(grp::is_abelian(a4, a4.all()));

  std::vector<mat::Mat> trivial(3, gl2.identity());
  const auto direct = semidirect_product(f2, 2, trivial, c3);
  CHECK(grp::are_isomorphic(direct, grp::direct_product(grp::direct_product(c3, grp::CayleyGroup::cyclic(2)),
                                                        grp::CayleyGroup::cyclic(2))));
  CHECK(grp::is_abelian(direct, direct.all()));

  CHECK_FALSE(action_from_generators(gl2, c2, std::vector<mat::Mat>{gl2.from_ints({{0, 1}, {1, 1}})}));
  std::vector<mat::Mat> bad{gl2.identity(), gl2.from_ints({{0, 1}, {1, 1}})};
  CHECK(code_of([&] { semidirect_product(f2, 2, bad, c2); }) == ErrorCode::NotHomomorphism);
}
