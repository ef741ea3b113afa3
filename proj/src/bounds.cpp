#include "aqar/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "aqar/error.hpp"

namespace aqar::bounds {

namespace {

class Real {
 public:
  explicit Real(unsigned precision) { mpfr_init2(v_, precision); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real &) = delete;
  Real &operator=(const Real &) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

void set_integer(Real &out, const BigInt &x, mpfr_rnd_t rnd) {
  mpfr_set_str(out.get(), x.str().c_str(), 10, rnd);
}

// Encloses x / y for x >= 0, y > 0.
void enclose_ratio(Real &lo, Real &hi, const BigInt &x, const BigInt &y, unsigned precision) {
  Real x_lo(precision), x_hi(precision), y_lo(precision), y_hi(precision);
  set_integer(x_lo, x, MPFR_RNDD);
  set_integer(x_hi, x, MPFR_RNDU);
  set_integer(y_lo, y, MPFR_RNDD);
  set_integer(y_hi, y, MPFR_RNDU);
  mpfr_div(lo.get(), x_lo.get(), y_hi.get(), MPFR_RNDD);
  mpfr_div(hi.get(), x_hi.get(), y_lo.get(), MPFR_RNDU);
}

// Encloses the rational c.
void enclose_rational(Real &lo, Real &hi, const Rational &c, unsigned precision) {
  const BigInt num = abs(numerator(c));
  enclose_ratio(lo, hi, num, denominator(c), precision);
  if (c < 0) {
    mpfr_neg(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_neg(hi.get(), hi.get(), MPFR_RNDU);
    mpfr_swap(lo.get(), hi.get());
  }
}

void enclose_log2(Real &lo, Real &hi, const BigInt &x, unsigned precision) {
  Real x_lo(precision), x_hi(precision);
  set_integer(x_lo, x, MPFR_RNDD);
  set_integer(x_hi, x, MPFR_RNDU);
  mpfr_log2(lo.get(), x_lo.get(), MPFR_RNDD);
  mpfr_log2(hi.get(), x_hi.get(), MPFR_RNDU);
}

void enclose_bound(Real &lo, Real &hi, const LogBound &b, unsigned precision) {
  enclose_rational(lo, hi, b.constant(), precision);
  Real c_lo(precision), c_hi(precision), l_lo(precision), l_hi(precision), t(precision);
  for (const auto &[base, coeff] : b.terms()) {
    enclose_rational(c_lo, c_hi, coeff, precision);
    enclose_log2(l_lo, l_hi, base, precision);
    if (coeff > 0) {
      mpfr_mul(t.get(), c_lo.get(), l_lo.get(), MPFR_RNDD);
      mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), c_hi.get(), l_hi.get(), MPFR_RNDU);
      mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    } else {
      mpfr_mul(t.get(), c_lo.get(), l_hi.get(), MPFR_RNDD);
      mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), c_hi.get(), l_lo.get(), MPFR_RNDU);
      mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    }
  }
}

void require_prime(std::uint64_t x, const char *name) {
  if (!is_prime(x)) throw Error(ErrorCode::InvalidParams, std::string(name) + " = " + std::to_string(x) + " is not prime");
}

const Rational half_log6{1, 2};

// 2^{a-1+(23/6)a log a+a log 6}
void add_wreath_factor(LogBound &b, unsigned alpha) {
  b.add_constant(Rational(alpha) - 1);
  if (alpha >= 2) b.add_log(alpha, Rational(23 * alpha, 6));
  b.add_log(6, alpha);
}

}  // namespace

void LogBound::add_log(std::uint64_t base, const Rational &coeff) {
  if (base == 0) throw Error(ErrorCode::InvalidParams, "logarithm of 0");
  if (base == 1 || coeff == 0) return;
  auto &slot = terms_[base];
  slot += coeff;
  if (slot == 0) terms_.erase(base);
}

std::map<std::uint64_t, Rational> LogBound::prime_exponents() const {
  std::map<std::uint64_t, Rational> out;
  if (constant_ != 0) out[2] += constant_;
  for (const auto &[base, coeff] : terms_)
    for (const auto &[p, e] : factorize(base)) out[p] += coeff * e;
  std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
  return out;
}

std::optional<BigInt> LogBound::exact_value() const {
  BigInt value = 1;
  for (const auto &[p, e] : prime_exponents()) {
    if (denominator(e) != 1 || e < 0) return std::nullopt;
    value *= boost::multiprecision::pow(BigInt(p), numerator(e).convert_to<unsigned>());
  }
  return value;
}

Interval log2_interval(const LogBound &b, unsigned precision) {
  Real lo(precision), hi(precision);
  enclose_bound(lo, hi, b, precision);
  return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

LogBound census_bound(const grp::VarietyParams &params) {
  params.validate();
  const auto [p, q, r, a, be, g] = params;
  LogBound b("census");
  b.add_log(p, Rational(6) * a * a);
  add_wreath_factor(b, a);
  b.add_log(6, half_log6 * (Rational((a + g) * be + (a + be) * g) + Rational(a * (a - 1), 2)));
  if (be + g > 0) {
    const BigInt n = params.n();
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
      b.add_log(n.convert_to<std::uint64_t>(), be + g);
    } else {
      b.add_log(p, Rational(a) * (be + g));
      b.add_log(q, Rational(be) * (be + g));
      b.add_log(r, Rational(g) * (be + g));
    }
  }
  b.set_degenerate(a == 0);
  return b;
}

LogBound gl_class_bound(std::uint64_t s, unsigned alpha) {
  std::uint64_t t = 0;
  unsigned k = 0;
  if (!prime_power(s, t, k)) throw Error(ErrorCode::InvalidParams, "s = " + std::to_string(s) + " is not a prime power");
  if (alpha == 0) throw Error(ErrorCode::InvalidParams, "alpha must be at least 1");
  LogBound b("gl-classes");
  b.add_log(s, Rational(5) * alpha * alpha);
  b.add_log(6, Rational(alpha * (alpha - 1), 4));
  add_wreath_factor(b, alpha);
  return b;
}

LogBound transitive_class_bound(unsigned n) {
  if (n < 2) throw Error(ErrorCode::InvalidParams, "n must be at least 2");
  LogBound b("transitive-classes");
  b.add_log(6, Rational(n * (n - 1), 4));
  b.add_log(n, n + 2);
  return b;
}

LogBound linear_order_bound(unsigned alpha, std::uint64_t q, std::uint64_t r, std::uint64_t s) {
  if (alpha == 0) throw Error(ErrorCode::InvalidParams, "alpha must be at least 1");
  require_prime(q, "q");
  require_prime(r, "r");
  std::uint64_t t = 0;
  unsigned k = 0;
  if (!prime_power(s, t, k)) throw Error(ErrorCode::InvalidParams, "s = " + std::to_string(s) + " is not a prime power");
  if (q == r || t == q || t == r) throw Error(ErrorCode::InvalidParams, "q, r and the characteristic must be distinct");
  LogBound b("linear-order");
  b.add_log(6, half_log6 * (Rational(alpha) - 1));
  b.add_log(std::min(q * r, s), alpha);
  return b;
}

LogBound soluble_a_order_bound(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidParams, "n must be at least 1");
  LogBound b("soluble-a-order");
  b.add_log(6, half_log6 * (Rational(n) - 1));
  return b;
}

std::string_view to_string(Verdict v) { return v == Verdict::LE ? "LE" : "GT"; }

std::optional<Verdict> compare_by_interval(const BigInt &count, const LogBound &bound, unsigned precision) {
  if (count <= 0) return Verdict::LE;
  Real b_lo(precision), b_hi(precision), c_lo(precision), c_hi(precision);
  enclose_bound(b_lo, b_hi, bound, precision);
  enclose_log2(c_lo, c_hi, count, precision);
  if (mpfr_less_p(c_hi.get(), b_lo.get())) return Verdict::LE;
  if (mpfr_greater_p(c_lo.get(), b_hi.get())) return Verdict::GT;
  return std::nullopt;
}

Verdict compare_exactly(const BigInt &count, const LogBound &bound) {
  if (count <= 0) return Verdict::LE;
  const auto exps = bound.prime_exponents();
  BigInt d = 1;
  for (const auto &[p, e] : exps) d = boost::multiprecision::lcm(d, denominator(e));
  double bits = static_cast<double>(msb(count) + 1) * d.convert_to<double>();
  for (const auto &[p, e] : exps) bits += std::abs(e.convert_to<double>()) * d.convert_to<double>() * std::log2(double(p));
  if (bits > double(1 << 24))
    throw Error(ErrorCode::LimitExceeded, "exact comparison needs about " + std::to_string(bits) + " bits");
  const unsigned dd = d.convert_to<unsigned>();
  BigInt left = boost::multiprecision::pow(count, dd);
  BigInt right = 1;
  for (const auto &[p, e] : exps) {
    const BigInt k = numerator(Rational(e * d));
    const BigInt factor = boost::multiprecision::pow(BigInt(p), abs(k).convert_to<unsigned>());
    (k > 0 ? right : left) *= factor;
  }
  return left <= right ? Verdict::LE : Verdict::GT;
}

Comparison compare(const BigInt &count, const LogBound &bound) {
  if (count <= 0) return {Verdict::LE, "trivial", 0};
  for (unsigned precision = 64; precision <= 4096; precision *= 2)
    if (auto v = compare_by_interval(count, bound, precision)) return {*v, "interval", precision};
  return {compare_exactly(count, bound), "exact", 0};
}

Verdict compare_count(const BigInt &count, const LogBound &bound) { return compare(count, bound).verdict; }

std::string rational_string(const Rational &x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

nlohmann::json to_json(const LogBound &b) {
  const auto iv = log2_interval(b);
  nlohmann::json terms = nlohmann::json::object();
  for (const auto &[base, coeff] : b.terms()) terms[std::to_string(base)] = rational_string(coeff);
  const auto exact = b.exact_value();
  return {{"formula_id", b.formula_id()},
          {"log2", {{"lower", iv.lower}, {"upper", iv.upper}}},
          {"exact", exact ? nlohmann::json(exact->str()) : nlohmann::json(nullptr)},
          {"degenerate", b.degenerate()},
          {"constant", rational_string(b.constant())},
          {"terms", terms}};
}

}  // namespace aqar::bounds
