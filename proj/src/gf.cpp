#include "aqar/gf.hpp"

#include <numeric>
#include <string>

#include "aqar/error.hpp"

namespace aqar::gf {

namespace {

std::vector<unsigned> digits(std::uint32_t a, unsigned t, unsigned k) {
  std::vector<unsigned> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = a % t;
    a /= t;
  }
  return d;
}

std::uint32_t undigits(const std::vector<unsigned> &d, unsigned t) {
  std::uint32_t a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * t + d[i];
  return a;
}

void trim(Poly &p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

FieldSpec prime_spec(unsigned t) { return FieldSpec{t, 1, {0, 1}}; }

}  // namespace

std::uint64_t FieldSpec::size() const { return checked_pow(t, k); }

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const unsigned t = spec_.t, k = spec_.k;
  if (!is_prime(t)) throw Error(ErrorCode::NotPrime, std::to_string(t) + " is not prime");
  if (k == 0) throw Error(ErrorCode::InvalidParams, "field degree must be positive");
  if (spec_.modulus.size() != k + 1 || spec_.modulus.back() != 1)
    throw Error(ErrorCode::InvalidParams, "modulus must be monic of degree k");
  for (unsigned c : spec_.modulus)
    if (c >= t) throw Error(ErrorCode::InvalidParams, "modulus coefficient out of range");
  const std::uint64_t s = spec_.size();
  if (s > (1ull << 24)) throw Error(ErrorCode::LimitExceeded, "field too large for tables");
  size_ = static_cast<std::uint32_t>(s);
  if (k > 1) {
    Field base(prime_spec(t));
    Poly m(spec_.modulus.begin(), spec_.modulus.end());
    if (!is_irreducible(base, m))
      throw Error(ErrorCode::InvalidParams, "modulus is reducible over GF(" + std::to_string(t) + ")");
  }

  neg_.resize(size_);
  for (std::uint32_t a = 0; a < size_; ++a) {
    auto d = digits(a, t, k);
    for (auto &c : d) c = (t - c) % t;
    neg_[a] = undigits(d, t);
  }
  if (size_ <= 256) {
    add_table_.resize(std::size_t(size_) * size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
      auto da = digits(a, t, k);
      for (std::uint32_t b = 0; b < size_; ++b) {
        auto db = digits(b, t, k);
        for (unsigned i = 0; i < k; ++i) db[i] = (da[i] + db[i]) % t;
        add_table_[std::size_t(a) * size_ + b] = undigits(db, t);
      }
    }
  }

  if (size_ == 2) {
    primitive_ = 1;
  } else {
    // first element (by index) whose powers exhaust the multiplicative group
    for (Elem g = 2; g < size_; ++g) {
      std::uint64_t e = 1;
      Elem x = g;
      while (x != 1) {
        x = raw_mul(x, g);
        ++e;
      }
      if (e == size_ - 1u) {
        primitive_ = g;
        break;
      }
    }
  }
  exp_.resize(size_ - 1);
  log_.assign(size_, 0);
  Elem x = 1;
  for (std::uint32_t i = 0; i + 1 < size_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = raw_mul(x, primitive_);
  }
}

Field::Elem Field::raw_mul(Elem a, Elem b) const {
  const unsigned t = spec_.t, k = spec_.k;
  auto da = digits(a, t, k), db = digits(b, t, k);
  std::vector<unsigned> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % t;
  for (std::size_t d = prod.size(); d-- > k;) {
    unsigned c = prod[d];
    if (!c) continue;
    for (unsigned i = 0; i <= k; ++i)
      prod[d - k + i] = (prod[d - k + i] + (t - c) * spec_.modulus[i]) % t;
  }
  prod.resize(k);
  return undigits(prod, t);
}

Field::Elem Field::add(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[std::size_t(a) * size_ + b];
  const unsigned t = spec_.t;
  Elem r = 0, place = 1;
  while (a || b) {
    r += ((a % t + b % t) % t) * place;
    a /= t;
    b /= t;
    place *= t;
  }
  return r;
}

Field::Elem Field::neg(Elem a) const { return neg_[a]; }

Field::Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t l = std::uint64_t(log_[a]) + log_[b];
  return exp_[l % (size_ - 1)];
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) * (e % (size_ - 1))) % (size_ - 1)];
}

Field::Elem Field::pow(Elem a, const BigInt &e) const {
  if (e < 0) throw Error(ErrorCode::InvalidParams, "negative exponent");
  if (e == 0) return 1;
  if (a == 0) return 0;
  return pow(a, static_cast<std::uint64_t>(e % (size_ - 1)));
}

std::uint64_t Field::order(Elem a) const {
  if (a == 0) throw Error(ErrorCode::ZeroElement, "zero has no multiplicative order");
  std::uint64_t n = size_ - 1;
  std::uint64_t l = log_[a];
  return n / std::gcd(n, l == 0 ? n : l);
}

Field::Elem Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(spec_.t);
  if (r < 0) r += spec_.t;
  return static_cast<Elem>(r);
}

FieldElem Field::to_elem(Elem a) const { return FieldElem{digits(a, spec_.t, spec_.k)}; }

Field::Elem Field::index_of(const FieldElem &x) const {
  if (x.coeffs.size() != spec_.k)
    throw Error(ErrorCode::FieldMismatch, "element has " + std::to_string(x.coeffs.size()) +
                                              " coefficients, field degree is " + std::to_string(spec_.k));
  for (unsigned c : x.coeffs)
    if (c >= spec_.t) throw Error(ErrorCode::FieldMismatch, "coefficient not reduced mod t");
  return undigits(x.coeffs, spec_.t);
}

FieldElem Field::add(const FieldElem &a, const FieldElem &b) const {
  return to_elem(add(index_of(a), index_of(b)));
}
FieldElem Field::mul(const FieldElem &a, const FieldElem &b) const {
  return to_elem(mul(index_of(a), index_of(b)));
}
FieldElem Field::inv(const FieldElem &a) const { return to_elem(inv(index_of(a))); }
FieldElem Field::pow(const FieldElem &a, const BigInt &e) const {
  return to_elem(pow(index_of(a), e));
}

std::uint64_t element_order(const FieldElem &x, const FieldSpec &spec) {
  Field f(spec);
  return f.order(f.index_of(x));
}

Poly poly_rem(const Field &f, Poly a, const Poly &b) {
  trim(a);
  Poly d = b;
  trim(d);
  if (d.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const auto lead_inv = f.inv(d.back());
  while (a.size() >= d.size()) {
    auto c = f.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, d[i]));
    trim(a);
  }
  return a;
}

bool is_irreducible(const Field &f, const Poly &monic) {
  Poly m = monic;
  trim(m);
  if (m.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(m.size() - 1);
  const std::uint64_t s = f.size();
  for (unsigned e = 1; 2 * e <= deg; ++e) {
    const std::uint64_t count = checked_pow(s, e);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(e + 1);
      std::uint64_t v = idx;
      for (unsigned i = 0; i < e; ++i) {
        g[i] = static_cast<Field::Elem>(v % s);
        v /= s;
      }
      g[e] = 1;
      if (poly_rem(f, m, g).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(const Field &f, unsigned degree, std::uint64_t limit) {
  if (degree == 0) throw Error(ErrorCode::InvalidParams, "degree must be positive");
  const std::uint64_t s = f.size();
  const std::uint64_t count = checked_pow(s, degree);
  if (count > limit)
    throw Error(ErrorCode::LimitExceeded, std::to_string(s) + "^" + std::to_string(degree) +
                                              " exceeds the field limit " + std::to_string(limit));
  // idx enumerates coefficient tuples with c_{degree-1} as the most significant digit
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly g(degree + 1);
    std::uint64_t v = idx;
    for (unsigned i = 0; i < degree; ++i) {
      g[i] = static_cast<Field::Elem>(v % s);
      v /= s;
    }
    g[degree] = 1;
    if (is_irreducible(f, g)) return g;
  }
  throw Error(ErrorCode::InvalidParams, "no irreducible polynomial found");
}

FieldSpec field_make(unsigned t, unsigned k, const Limits &limits) {
  if (!is_prime(t)) throw Error(ErrorCode::NotPrime, std::to_string(t) + " is not prime");
  if (k == 0) throw Error(ErrorCode::InvalidParams, "field degree must be positive");
  if (k == 1) return prime_spec(t);
  Field base(prime_spec(t));
  Poly m = least_irreducible(base, k, limits.field_size);
  return FieldSpec{t, k, std::vector<unsigned>(m.begin(), m.end())};
}

void to_json(nlohmann::json &j, const FieldSpec &spec) {
  j = nlohmann::json{{"t", spec.t}, {"k", spec.k}, {"modulus", spec.modulus}};
}

void from_json(const nlohmann::json &j, FieldSpec &spec) {
  spec.t = j.at("t").get<unsigned>();
  spec.k = j.at("k").get<unsigned>();
  spec.modulus = j.at("modulus").get<std::vector<unsigned>>();
}

void to_json(nlohmann::json &j, const FieldElem &x) { j = x.coeffs; }
void from_json(const nlohmann::json &j, FieldElem &x) { x.coeffs = j.get<std::vector<unsigned>>(); }

}  // namespace aqar::gf
