#include "aqar/numeric.hpp"

#include <numeric>
#include <string>

#include "aqar/error.hpp"

namespace aqar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::SingularGenerator: return "SingularGenerator";
    case ErrorCode::CharacteristicConflict: return "CharacteristicConflict";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NoSystemFound: return "NoSystemFound";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NotInVariety: return "NotInVariety";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::DegreeLimit: return "DegreeLimit";
    case ErrorCode::SamePrime: return "SamePrime";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

unsigned valuation(std::uint64_t n, std::uint64_t u) {
  unsigned e = 0;
  if (n == 0 || u < 2) return 0;
  while (n % u == 0) {
    n /= u;
    ++e;
  }
  return e;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base)
      throw Error(ErrorCode::LimitExceeded,
                  std::to_string(base) + "^" + std::to_string(exp) + " overflows 64 bits");
    r *= base;
  }
  return r;
}

std::uint64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (m < 2) throw Error(ErrorCode::BadModulus, "modulus " + std::to_string(m) + " < 2");
  std::int64_t r = a % m;
  if (r < 0) r += m;
  if (std::gcd(r, m) != 1)
    throw Error(ErrorCode::NotCoprime,
                std::to_string(a) + " is not coprime to " + std::to_string(m));
  // direct iteration; every modulus used here is tiny
  std::uint64_t e = 1;
  unsigned __int128 x = static_cast<std::uint64_t>(r);
  while (x != 1) {
    x = (x * static_cast<std::uint64_t>(r)) % static_cast<std::uint64_t>(m);
    ++e;
  }
  return e;
}

bool prime_power(std::uint64_t n, std::uint64_t &u, unsigned &k) {
  auto f = factorize(n);
  if (f.size() != 1) return false;
  u = f[0].first;
  k = f[0].second;
  return true;
}

}  // namespace aqar
