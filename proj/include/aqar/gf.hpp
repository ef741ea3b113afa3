#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <json.hpp>

#include "aqar/limits.hpp"
#include "aqar/numeric.hpp"

/// Exact arithmetic in GF(t^k).
///
/// A field is fixed by its FieldSpec: the characteristic t, the degree k and a
/// monic irreducible modulus over GF(t).  Elements are polynomials of degree
/// < k in ascending coefficient order.  Internally the Field class encodes an
/// element as the integer sum(c_i * t^i) so that matrices and tables can hold
/// plain indices.
namespace aqar::gf {

struct FieldSpec {
  unsigned t = 2;
  unsigned k = 1;
  std::vector<unsigned> modulus{0, 1};  // ascending, k + 1 entries, monic

  std::uint64_t size() const;
  bool operator==(const FieldSpec &) const = default;
};

struct FieldElem {
  std::vector<unsigned> coeffs;  // ascending, exactly k entries

  bool operator==(const FieldElem &) const = default;
};

/// The canonical field GF(t^k): its modulus is the lexicographically least
/// monic irreducible of degree k, comparing coefficients from the highest
/// degree down.  GF(t) itself uses the modulus x.
FieldSpec field_make(unsigned t, unsigned k, const Limits &limits = {});

class Field {
 public:
  using Elem = std::uint32_t;

  explicit Field(FieldSpec spec);

  const FieldSpec &spec() const { return spec_; }
  unsigned characteristic() const { return spec_.t; }
  unsigned degree() const { return spec_.k; }
  std::uint32_t size() const { return size_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem primitive_element() const { return primitive_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem pow(Elem a, const BigInt &e) const;
  std::uint64_t order(Elem a) const;

  /// Image of an integer under Z -> GF(t) -> GF(t^k).
  Elem from_int(std::int64_t v) const;

  FieldElem to_elem(Elem a) const;
  Elem index_of(const FieldElem &x) const;

  FieldElem add(const FieldElem &a, const FieldElem &b) const;
  FieldElem mul(const FieldElem &a, const FieldElem &b) const;
  FieldElem inv(const FieldElem &a) const;
  FieldElem pow(const FieldElem &a, const BigInt &e) const;

  bool operator==(const Field &other) const { return spec_ == other.spec_; }

 private:
  Elem raw_mul(Elem a, Elem b) const;

  FieldSpec spec_;
  std::uint32_t size_ = 0;
  Elem primitive_ = 1;
  std::vector<Elem> exp_;           // exp_[i] = primitive^i, i < size - 1
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
  std::vector<Elem> add_table_;     // only for small fields
  std::vector<Elem> neg_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(unsigned t, unsigned k, const Limits &limits = {}) {
  return std::make_shared<const Field>(field_make(t, k, limits));
}

/// Least e >= 1 with x^e = 1.  Throws ZeroElement for x = 0.
std::uint64_t element_order(const FieldElem &x, const FieldSpec &spec);

/// Polynomials over a Field, ascending coefficient order, no trailing zeros
/// except for the zero polynomial {}.
using Poly = std::vector<Field::Elem>;

Poly poly_rem(const Field &f, Poly a, const Poly &b);
bool is_irreducible(const Field &f, const Poly &monic);

/// Lexicographically least monic irreducible polynomial of the given degree
/// over f (coefficients compared from degree - 1 downwards by element index).
Poly least_irreducible(const Field &f, unsigned degree, std::uint64_t limit);

void to_json(nlohmann::json &j, const FieldSpec &spec);
void from_json(const nlohmann::json &j, FieldSpec &spec);
void to_json(nlohmann::json &j, const FieldElem &x);
void from_json(const nlohmann::json &j, FieldElem &x);

}  // namespace aqar::gf
