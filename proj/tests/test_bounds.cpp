#include <doctest.h>

#include "aqar/bounds.hpp"
#include "aqar/error.hpp"

using namespace aqar;
using namespace aqar::bounds;

namespace {

double mid(const LogBound &b) {
  const auto iv = log2_interval(b);
  return (iv.lower + iv.upper) / 2;
}

}  // namespace

TEST_CASE("census bound values") {
  const auto b = census_bound({3, 2, 5, 1, 1, 0});
  CHECK(mid(b) == doctest::Approx(15.9722).epsilon(1e-5));
  CHECK_FALSE(b.exact_value().has_value());
  const auto exps = b.prime_exponents();
  CHECK(exps.at(3) == Rational(17, 2));
  CHECK(exps.at(2) == Rational(5, 2));

  CHECK(census_bound({2, 3, 5, 1, 0, 0}).exact_value() == BigInt(384));

  const auto empty = census_bound({2, 3, 5, 0, 0, 0});
  CHECK(empty.degenerate());
  CHECK(empty.constant() == -1);
  CHECK(empty.terms().empty());
  CHECK(mid(empty) == doctest::Approx(-1));
  CHECK_THROWS_AS(census_bound({2, 2, 5, 1, 0, 0}), Error);
}

TEST_CASE("class-count bounds") {
  CHECK(transitive_class_bound(4).exact_value() == BigInt(884736));
  CHECK(mid(transitive_class_bound(2)) == doctest::Approx(std::log2(std::sqrt(6.0) * 16)));
  CHECK(gl_class_bound(2, 1).exact_value() == BigInt(192));
  CHECK(mid(gl_class_bound(4, 2)) == doctest::Approx(41 + 23.0 / 3 + 2.5 * std::log2(6.0)));
  CHECK_THROWS_AS(transitive_class_bound(1), Error);
  CHECK_THROWS_AS(gl_class_bound(6, 1), Error);
  CHECK_THROWS_AS(gl_class_bound(2, 0), Error);
}

TEST_CASE("order bounds") {
  CHECK(linear_order_bound(1, 2, 3, 7).exact_value() == BigInt(6));
  CHECK(std::exp2(mid(linear_order_bound(2, 2, 3, 7))) == doctest::Approx(std::sqrt(6.0) * 36));
  CHECK(std::exp2(mid(linear_order_bound(2, 2, 3, 5))) == doctest::Approx(std::sqrt(6.0) * 25));
  CHECK(soluble_a_order_bound(3).exact_value() == BigInt(6));
  CHECK(std::exp2(mid(soluble_a_order_bound(4))) == doctest::Approx(std::pow(6.0, 1.5)));
  CHECK_THROWS_AS(linear_order_bound(1, 2, 3, 4), Error);
  CHECK_THROWS_AS(linear_order_bound(1, 2, 2, 5), Error);
  CHECK_THROWS_AS(linear_order_bound(0, 2, 3, 5), Error);
}

TEST_CASE("count comparisons") {
  CHECK(compare_count(2, census_bound({3, 2, 5, 1, 1, 0})) == Verdict::LE);
  CHECK(compare_count(884737, transitive_class_bound(4)) == Verdict::GT);
  const auto tie = compare(884736, transitive_class_bound(4));
  CHECK(tie.verdict == Verdict::LE);
  CHECK(tie.method == "exact");
  CHECK(compare(0, transitive_class_bound(2)).method == "trivial");
  CHECK(compare_count(0, census_bound({2, 3, 5, 0, 0, 0})) == Verdict::LE);
  CHECK(compare_count(1, census_bound({2, 3, 5, 0, 0, 0})) == Verdict::GT);
  // 61 <= sqrt(6) * 25 < 62
  CHECK(compare_count(61, linear_order_bound(2, 2, 3, 5)) == Verdict::LE);
  CHECK(compare_count(62, linear_order_bound(2, 2, 3, 5)) == Verdict::GT);
}

TEST_CASE("interval and exact routes agree") {
  std::vector<LogBound> all;
  for (unsigned n = 2; n <= 9; ++n) {
    all.push_back(transitive_class_bound(n));
    all.push_back(soluble_a_order_bound(n));
  }
  for (unsigned a = 1; a <= 3; ++a) {
    all.push_back(gl_class_bound(3, a));
    all.push_back(linear_order_bound(a, 2, 3, 5));
    all.push_back(linear_order_bound(a, 5, 7, 2));
  }
  for (unsigned a = 0; a <= 2; ++a)
    for (unsigned b = 0; b <= 2; ++b)
      for (unsigned g = 0; g <= 2; ++g) all.push_back(census_bound({2, 3, 5, a, b, g}));
  for (const auto &bound : all) {
    const auto iv = log2_interval(bound);
    CHECK(iv.lower <= iv.upper);
    const double top = std::min(iv.upper, 200.0);
    std::vector<BigInt> counts{1, 2, 3, 7, 100};
    if (top > 1) {
      const BigInt near = BigInt(std::floor(std::exp2(std::min(top, 60.0))));
      counts.insert(counts.end(), {near - 1, near, near + 1});
    }
    for (const auto &c : counts) {
      const auto exact = compare_exactly(c, bound);
      CHECK(compare_count(c, bound) == exact);
      unsigned agreed = 0;
      for (unsigned prec : {64u, 128u, 256u, 512u})
        if (const auto v = compare_by_interval(c, bound, prec)) {
          CHECK(*v == exact);
          ++agreed;
        }
      if (const auto value = bound.exact_value(); value && *value != c) CHECK(agreed > 0);
    }
  }
}

TEST_CASE("census bound grows with beta and gamma") {
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; b <= 3; ++b)
      for (unsigned g = 0; g <= 3; ++g) {
        const auto here = log2_interval(census_bound({5, 2, 3, a, b, g}));
        const auto up_b = log2_interval(census_bound({5, 2, 3, a, b + 1, g}));
        const auto up_g = log2_interval(census_bound({5, 2, 3, a, b, g + 1}));
        CHECK(here.lower <= up_b.upper);
        CHECK(here.lower <= up_g.upper);
        CHECK(here.upper <= up_b.upper);
        CHECK(here.upper <= up_g.upper);
      }
}

TEST_CASE("bounds render with enclosure and exact value") {
  const auto j = to_json(transitive_class_bound(4));
  CHECK(j["formula_id"] == "transitive-classes");
  CHECK(j["exact"] == "884736");
  CHECK(j["log2"]["lower"].get<double>() <= std::log2(884736.0));
  CHECK(j["log2"]["upper"].get<double>() >= std::log2(884736.0));
  CHECK(j["terms"]["6"] == "3");
  CHECK(to_json(census_bound({3, 2, 5, 1, 1, 0}))["exact"].is_null());
  CHECK(rational_string(Rational(23, 6)) == "23/6");
}
