#include <doctest.h>

#include <numeric>

#include "aqar/error.hpp"
#include "aqar/gf.hpp"

using namespace aqar;
using namespace aqar::gf;

namespace {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (std::uint64_t i = 0; i < e; ++i) r = r * a % m;
  return r;
}

FieldElem elem(std::vector<unsigned> c) { return FieldElem{std::move(c)}; }

}  // namespace

TEST_CASE("multiplicative order of small residues") {
  CHECK(multiplicative_order(2, 3) == 2);
  CHECK(multiplicative_order(3, 2) == 1);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(2, 5) == 4);
}

TEST_CASE("multiplicative order rejects bad input") {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code_of([] { multiplicative_order(2, 4); }) == ErrorCode::NotCoprime);
  CHECK(code_of([] { multiplicative_order(6, 9); }) == ErrorCode::NotCoprime);
  CHECK(code_of([] { multiplicative_order(1, 1); }) == ErrorCode::BadModulus);
  CHECK(code_of([] { multiplicative_order(3, 0); }) == ErrorCode::BadModulus);
}

TEST_CASE("multiplicative order is the least exponent returning to one") {
  for (std::int64_t m = 2; m <= 60; ++m)
    for (std::int64_t a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      const auto e = multiplicative_order(a, m);
      REQUIRE(pow_mod(a, e, m) == 1 % m);
      for (std::uint64_t d = 1; d < e; ++d) REQUIRE(pow_mod(a, d, m) != 1);
    }
}

TEST_CASE("canonical moduli") {
  CHECK(field_make(2, 1).modulus == std::vector<unsigned>{0, 1});
  CHECK(field_make(2, 2).modulus == std::vector<unsigned>{1, 1, 1});
  CHECK(field_make(3, 2).modulus == std::vector<unsigned>{1, 0, 1});
  CHECK(field_make(2, 3).modulus == std::vector<unsigned>{1, 1, 0, 1});
  CHECK(field_make(5, 2) == field_make(5, 2));
  CHECK_THROWS_AS(field_make(4, 1), Error);
  Limits tight;
  tight.field_size = 100;
  CHECK_THROWS_AS(field_make(2, 8, tight), Error);
}

TEST_CASE("GF(4) and GF(3) arithmetic") {
  Field f4(field_make(2, 2));
  const auto x = elem({0, 1});
  CHECK(f4.mul(x, x) == elem({1, 1}));
  CHECK(f4.pow(x, BigInt(3)) == elem({1, 0}));
  CHECK(f4.add(x, x) == elem({0, 0}));
  Field f3(field_make(3, 1));
  CHECK(f3.inv(elem({2})) == elem({2}));
  CHECK_THROWS_AS(f3.inv(elem({0})), Error);
  CHECK_THROWS_AS(f4.mul(x, elem({1})), Error);
}

TEST_CASE("big exponents reduce modulo the group order") {
  Field f9(field_make(3, 2));
  const BigInt huge = BigInt(1) << 200;
  for (Field::Elem a = 1; a < f9.size(); ++a)
    CHECK(f9.pow(a, huge) == f9.pow(a, static_cast<std::uint64_t>(huge % 8)));
  CHECK(f9.pow(Field::Elem{0}, BigInt(0)) == 1);
  CHECK(f9.pow(Field::Elem{0}, BigInt(5)) == 0);
}

TEST_CASE("element orders") {
  CHECK(element_order(elem({0, 1}), field_make(2, 2)) == 3);
  CHECK(element_order(elem({1, 0, 0}), field_make(2, 3)) == 1);
  CHECK(element_order(elem({2}), field_make(5, 1)) == 4);
  try {
    element_order(elem({0}), field_make(5, 1));
    FAIL("expected ZeroElement");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::ZeroElement);
  }
}

TEST_CASE("field axioms on small fields") {
  for (auto [t, k] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}, {7u, 1u}, {2u, 4u}}) {
    Field f(field_make(t, k));
    const auto s = f.size();
    for (Field::Elem a = 1; a < s; ++a) {
      REQUIRE(f.mul(a, f.inv(a)) == 1);
      REQUIRE((s - 1) % f.order(a) == 0);
      REQUIRE(f.add(a, f.neg(a)) == 0);
    }
    CHECK(f.order(f.primitive_element()) == s - 1);
    for (Field::Elem a = 0; a < s; a += 3)
      for (Field::Elem b = 0; b < s; b += 2)
        for (Field::Elem c = 0; c < s; c += 5)
          REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
  }
}

TEST_CASE("reducible moduli are rejected") {
  CHECK_THROWS_AS(Field(FieldSpec{2, 2, {1, 0, 1}}), Error);
  CHECK_THROWS_AS(Field(FieldSpec{3, 2, {1, 0, 2}}), Error);
  CHECK_NOTHROW(Field(FieldSpec{3, 2, {2, 1, 1}}));
}

TEST_CASE("field JSON round trip") {
  const auto spec = field_make(3, 2);
  nlohmann::json j = spec;
  CHECK(j.dump() == R"({"k":2,"modulus":[1,0,1],"t":3})");
  CHECK(j.get<FieldSpec>() == spec);
  nlohmann::json e = elem({2, 1});
  CHECK(e.get<FieldElem>() == elem({2, 1}));
}
