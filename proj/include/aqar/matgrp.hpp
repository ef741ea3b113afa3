#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "aqar/gf.hpp"
#include "aqar/limits.hpp"
#include "aqar/numeric.hpp"

/// Matrix groups over GF(s).  Matrices act on column vectors and multiply in
/// the usual order, so a group product is the matrix product.
namespace aqar::mat {

using Elem = gf::Field::Elem;
using Vec = std::vector<Elem>;

class Mat {
 public:
  Mat() = default;
  Mat(unsigned alpha, std::vector<Elem> entries);

  unsigned alpha() const { return alpha_; }
  Elem operator()(unsigned i, unsigned j) const { return entries_[i * alpha_ + j]; }
  Elem &at(unsigned i, unsigned j) { return entries_[i * alpha_ + j]; }
  const std::vector<Elem> &entries() const { return entries_; }

  auto operator<=>(const Mat &) const = default;
  bool operator==(const Mat &) const = default;

 private:
  unsigned alpha_ = 0;
  std::vector<Elem> entries_;  // row-major
};

struct MatHash {
  std::size_t operator()(const Mat &m) const noexcept;
};

/// Arithmetic in GL(alpha, s).
class GL {
 public:
  GL(gf::FieldPtr field, unsigned alpha);

  const gf::Field &field() const { return *field_; }
  const gf::FieldPtr &field_ptr() const { return field_; }
  unsigned alpha() const { return alpha_; }
  std::uint64_t field_size() const { return field_->size(); }

  Mat identity() const;
  Mat mul(const Mat &a, const Mat &b) const;
  Elem det(const Mat &a) const;
  Mat inverse(const Mat &a) const;  // SingularGenerator on det 0
  Mat power(const Mat &a, std::uint64_t e) const;
  Mat conjugate(const Mat &a, const Mat &x) const;  // x^-1 a x
  std::uint64_t order(const Mat &a) const;
  Vec apply(const Mat &a, const Vec &v) const;

  /// Matrix from integer entries (reduced into the prime field).
  Mat from_ints(const std::vector<std::vector<long>> &rows) const;

  /// |GL(alpha, s)|
  BigInt order() const;
  /// Transvections I + c e_ij (c != 0) and diag(w, 1, ..., 1) with w primitive.
  std::vector<Mat> generators() const;
  /// Visits every invertible matrix in ascending row-major order; stops when
  /// fn returns false.
  void for_each_element(const std::function<bool(const Mat &)> &fn) const;

  bool operator==(const GL &o) const { return alpha_ == o.alpha_ && *field_ == *o.field_; }

 private:
  gf::FieldPtr field_;
  unsigned alpha_;
};

BigInt gl_order(unsigned alpha, const gf::FieldSpec &spec);

class MatGroup {
 public:
  MatGroup(GL space, std::vector<Mat> generators, std::vector<Mat> sorted_elements);

  const GL &space() const { return space_; }
  unsigned alpha() const { return space_.alpha(); }
  const std::vector<Mat> &generators() const { return generators_; }
  const std::vector<Mat> &elements() const { return elements_; }
  BigInt order() const { return BigInt(elements_.size()); }
  bool contains(const Mat &m) const;

 private:
  GL space_;
  std::vector<Mat> generators_;
  std::vector<Mat> elements_;
};

/// Full element closure.  Throws SingularGenerator or LimitExceeded.
MatGroup closure(const GL &space, std::vector<Mat> generators, const Limits &limits = {});
MatGroup general_linear_group(const GL &space, const Limits &limits = {});

/// Exhaustive line spinning.  Throws LimitExceeded when s^alpha is above
/// limits.spin_limit.
bool is_irreducible(const GL &space, std::span<const Mat> generators, const Limits &limits = {});
inline bool is_irreducible(const MatGroup &g, const Limits &limits = {}) {
  return is_irreducible(g.space(), g.generators(), limits);
}

/// Irreducible and permuting no decomposition of the space into alpha lines.
/// alpha must be prime, so lines are the only possible blocks; throws
/// InvalidParams otherwise.
bool is_primitive_linear(const GL &space, std::span<const Mat> generators, const Limits &limits = {});

/// Multiplication by the least primitive element of GF(s^alpha) =
/// GF(s)[x]/(f), f the least monic irreducible of degree alpha, written in
/// the basis 1, x, ..., x^(alpha-1).
Mat singer_generator(const GL &space, const Limits &limits = {});
MatGroup singer_subgroup(unsigned alpha, const gf::FieldPtr &field, const Limits &limits = {});

/// Block-diagonal (C_r)^k from k = floor(alpha / d) copies of the order-r
/// power of a Singer cycle of GL(d, s), d = ord_r(s), padded by an identity
/// block.  None when k = 0.
std::optional<MatGroup> maximal_ar_subgroup(unsigned alpha, const gf::FieldPtr &field, std::uint64_t r,
                                            const Limits &limits = {});

std::optional<Mat> conjugate_in_gl(const MatGroup &a, const MatGroup &b, const Limits &limits = {});

struct GLClass {
  MatGroup representative;
  BigInt class_size;
};

/// Brute-force oracle: maximal elementary abelian r-subgroups of GL(alpha, s)
/// up to conjugacy, ordered by (order, least element list).
std::vector<GLClass> classify_elem_abelian_r(unsigned alpha, const gf::FieldPtr &field, std::uint64_t r,
                                             const Limits &limits = {});

/// Canonical generators: greedy over the sorted element list.
std::vector<Mat> canonical_generators(const MatGroup &g, const Limits &limits = {});

// JSON: {field:{t,k,modulus}, alpha, generators:[[[coeffs...]...]...]};
// integer entries are accepted when k = 1.
nlohmann::json to_json(const MatGroup &g);
nlohmann::json mat_to_json(const GL &space, const Mat &m);
MatGroup mat_group_from_json(const nlohmann::json &j, const Limits &limits = {});

}  // namespace aqar::mat
