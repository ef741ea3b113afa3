#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "aqar/groupmodel.hpp"
#include "aqar/numeric.hpp"

namespace aqar::bounds {

/// constant + sum coeff * log2(base), bases >= 2.
class LogBound {
 public:
  LogBound() = default;
  explicit LogBound(std::string formula_id) : formula_id_(std::move(formula_id)) {}

  void add_constant(const Rational &c) { constant_ += c; }
  /// Merges equal bases and drops zero coefficients; base 1 contributes nothing.
  void add_log(std::uint64_t base, const Rational &coeff);

  const Rational &constant() const { return constant_; }
  const std::map<std::uint64_t, Rational> &terms() const { return terms_; }
  const std::string &formula_id() const { return formula_id_; }
  bool degenerate() const { return degenerate_; }
  void set_degenerate(bool d) { degenerate_ = d; }

  /// The value as prod p^e over primes p with rational exponents.
  std::map<std::uint64_t, Rational> prime_exponents() const;
  /// 2^value when it is a nonnegative integer.
  std::optional<BigInt> exact_value() const;

 private:
  Rational constant_;
  std::map<std::uint64_t, Rational> terms_;
  std::string formula_id_;
  bool degenerate_ = false;
};

/// Outward-rounded enclosure of log2 of a bound or a count.
struct Interval {
  double lower = 0;
  double upper = 0;
};

Interval log2_interval(const LogBound &b, unsigned precision = 128);

/// p^{6a^2} 2^{a-1+(23/6)a log a+a log 6} (6^{1/2})^{(a+g)b+(a+b)g+a(a-1)/2} n^{b+g}
/// for groups of order n = p^a q^b r^g in A_p A_q A_r.  a log a is 0 at a = 0,
/// which is flagged degenerate.  Throws InvalidParams.
LogBound census_bound(const grp::VarietyParams &params);

/// s^{5a^2} 6^{a(a-1)/4} 2^{a-1+(23/6)a log a+a log 6}: classes of maximal
/// A_q A_r subgroups of GL(a, s).  Throws InvalidParams (a = 0, s not a prime power).
LogBound gl_class_bound(std::uint64_t s, unsigned alpha);

/// 6^{n(n-1)/4} 2^{(n+2) log n}: transitive A_q A_r subgroups of S_n.  n >= 2.
LogBound transitive_class_bound(unsigned n);

/// (6^{1/2})^{a-1} min(qr, s)^a: order of an A_q A_r subgroup of GL(a, s).
/// Throws InvalidParams unless q, r and the characteristic of s are distinct primes.
LogBound linear_order_bound(unsigned alpha, std::uint64_t q, std::uint64_t r, std::uint64_t s);

/// (6^{1/2})^{n-1}: order of a soluble A-subgroup of S_n.  n >= 1.
LogBound soluble_a_order_bound(unsigned n);

enum class Verdict { LE, GT };
std::string_view to_string(Verdict v);

struct Comparison {
  Verdict verdict = Verdict::LE;
  std::string method;      // "trivial", "interval" or "exact"
  unsigned precision = 0;  // bits used by the interval route
};

/// Decides count <= 2^value.  Tries intervals at doubling precision, then
/// compares count^D against the exact product of prime powers.
Comparison compare(const BigInt &count, const LogBound &bound);
Verdict compare_count(const BigInt &count, const LogBound &bound);

/// Interval route alone; none when the enclosures overlap at this precision.
std::optional<Verdict> compare_by_interval(const BigInt &count, const LogBound &bound, unsigned precision);
/// Big-integer route alone.  Throws LimitExceeded past 2^24 bits.
Verdict compare_exactly(const BigInt &count, const LogBound &bound);

std::string rational_string(const Rational &x);

/// {formula_id, log2:{lower, upper}, exact, degenerate, constant, terms}
nlohmann::json to_json(const LogBound &b);

}  // namespace aqar::bounds
