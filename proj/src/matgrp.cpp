#include "aqar/matgrp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "aqar/error.hpp"

namespace aqar::mat {

namespace {

// Row-reduced basis of a subspace; rows are normalized with pivot 1.
class Echelon {
 public:
  explicit Echelon(const gf::Field &f) : f_(&f) {}

  Vec reduce(Vec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elem c = v[pivots_[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f_->sub(v[j], f_->mul(c, rows_[i][j]));
    }
    return v;
  }

  bool insert(const Vec &v) {
    Vec w = reduce(v);
    auto it = std::find_if(w.begin(), w.end(), [](Elem e) { return e != 0; });
    if (it == w.end()) return false;
    const Elem scale = f_->inv(*it);
    for (auto &e : w) e = f_->mul(e, scale);
    pivots_.push_back(static_cast<unsigned>(it - w.begin()));
    rows_.push_back(std::move(w));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  const gf::Field *f_;
  std::vector<Vec> rows_;
  std::vector<unsigned> pivots_;
};

// Vector with v[0] as the most significant base-s digit of m.
Vec vector_from_index(std::uint64_t m, unsigned alpha, std::uint64_t s) {
  Vec v(alpha);
  for (unsigned j = alpha; j-- > 0;) {
    v[j] = static_cast<Elem>(m % s);
    m /= s;
  }
  return v;
}

// GF(s)[x]/(f) with elements as ascending coefficient vectors of length deg f.
struct Extension {
  const gf::Field *f;
  gf::Poly modulus;

  unsigned degree() const { return static_cast<unsigned>(modulus.size() - 1); }

  Vec mul(const Vec &a, const Vec &b) const {
    gf::Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = f->add(prod[i + j], f->mul(a[i], b[j]));
    }
    gf::Poly rem = gf::poly_rem(*f, prod, modulus);
    rem.resize(degree(), 0);
    return rem;
  }

  Vec pow(Vec a, std::uint64_t e) const {
    Vec result(degree(), 0);
    result[0] = 1;
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  bool is_one(const Vec &a) const {
    if (a[0] != 1) return false;
    return std::all_of(a.begin() + 1, a.end(), [](Elem e) { return e == 0; });
  }
};

std::uint64_t checked_field_power(std::uint64_t s, unsigned alpha, std::uint64_t limit) {
  const std::uint64_t n = checked_pow(s, alpha);
  if (n > limit)
    throw Error(ErrorCode::LimitExceeded,
                std::to_string(s) + "^" + std::to_string(alpha) + " exceeds the limit " + std::to_string(limit));
  return n;
}

void require_gl_scale(const GL &space, const Limits &limits) {
  if (space.order() > limits.gl_bruteforce)
    throw Error(ErrorCode::LimitExceeded, "|GL(" + std::to_string(space.alpha()) + ", " +
                                              std::to_string(space.field_size()) + ")| = " +
                                              space.order().str() + " exceeds the brute-force limit");
}

}  // namespace

Mat::Mat(unsigned alpha, std::vector<Elem> entries) : alpha_(alpha), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(alpha) * alpha)
    throw Error(ErrorCode::DegreeMismatch, "matrix entry count does not match dimension");
}

std::size_t MatHash::operator()(const Mat &m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.entries()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

GL::GL(gf::FieldPtr field, unsigned alpha) : field_(std::move(field)), alpha_(alpha) {
  if (!field_) throw Error(ErrorCode::InvalidParams, "null field");
  if (alpha_ == 0) throw Error(ErrorCode::InvalidParams, "dimension must be positive");
}

Mat GL::identity() const {
  std::vector<Elem> e(alpha_ * alpha_, 0);
  for (unsigned i = 0; i < alpha_; ++i) e[i * alpha_ + i] = 1;
  return Mat(alpha_, std::move(e));
}

Mat GL::mul(const Mat &a, const Mat &b) const {
  if (a.alpha() != alpha_ || b.alpha() != alpha_) throw Error(ErrorCode::DegreeMismatch, "matrix dimension mismatch");
  const auto &f = *field_;
  std::vector<Elem> out(alpha_ * alpha_, 0);
  for (unsigned i = 0; i < alpha_; ++i)
    for (unsigned k = 0; k < alpha_; ++k) {
      const Elem c = a(i, k);
      if (c == 0) continue;
      for (unsigned j = 0; j < alpha_; ++j) out[i * alpha_ + j] = f.add(out[i * alpha_ + j], f.mul(c, b(k, j)));
    }
  return Mat(alpha_, std::move(out));
}

Elem GL::det(const Mat &a) const {
  const auto &f = *field_;
  Mat m = a;
  Elem d = 1;
  for (unsigned c = 0; c < alpha_; ++c) {
    unsigned p = c;
    while (p < alpha_ && m(p, c) == 0) ++p;
    if (p == alpha_) return 0;
    if (p != c) {
      for (unsigned j = 0; j < alpha_; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = f.neg(d);
    }
    d = f.mul(d, m(c, c));
    const Elem inv = f.inv(m(c, c));
    for (unsigned i = c + 1; i < alpha_; ++i) {
      const Elem factor = f.mul(m(i, c), inv);
      if (factor == 0) continue;
      for (unsigned j = c; j < alpha_; ++j) m.at(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return d;
}

Mat GL::inverse(const Mat &a) const {
  const auto &f = *field_;
  Mat m = a;
  Mat inv = identity();
  for (unsigned c = 0; c < alpha_; ++c) {
    unsigned p = c;
    while (p < alpha_ && m(p, c) == 0) ++p;
    if (p == alpha_) throw Error(ErrorCode::SingularGenerator, "matrix is singular");
    if (p != c)
      for (unsigned j = 0; j < alpha_; ++j) {
        std::swap(m.at(p, j), m.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    const Elem scale = f.inv(m(c, c));
    for (unsigned j = 0; j < alpha_; ++j) {
      m.at(c, j) = f.mul(m(c, j), scale);
      inv.at(c, j) = f.mul(inv(c, j), scale);
    }
    for (unsigned i = 0; i < alpha_; ++i) {
      if (i == c || m(i, c) == 0) continue;
      const Elem factor = m(i, c);
      for (unsigned j = 0; j < alpha_; ++j) {
        m.at(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
        inv.at(i, j) = f.sub(inv(i, j), f.mul(factor, inv(c, j)));
      }
    }
  }
  return inv;
}

Mat GL::power(const Mat &a, std::uint64_t e) const {
  Mat result = identity();
  Mat base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Mat GL::conjugate(const Mat &a, const Mat &x) const { return mul(mul(inverse(x), a), x); }

std::uint64_t GL::order(const Mat &a) const {
  if (det(a) == 0) throw Error(ErrorCode::SingularGenerator, "matrix is singular");
  const Mat id = identity();
  Mat cur = a;
  std::uint64_t e = 1;
  while (cur != id) {
    cur = mul(cur, a);
    ++e;
  }
  return e;
}

Vec GL::apply(const Mat &a, const Vec &v) const {
  const auto &f = *field_;
  Vec out(alpha_, 0);
  for (unsigned i = 0; i < alpha_; ++i)
    for (unsigned j = 0; j < alpha_; ++j) out[i] = f.add(out[i], f.mul(a(i, j), v[j]));
  return out;
}

Mat GL::from_ints(const std::vector<std::vector<long>> &rows) const {
  if (rows.size() != alpha_) throw Error(ErrorCode::DegreeMismatch, "wrong number of matrix rows");
  std::vector<Elem> e;
  for (const auto &row : rows) {
    if (row.size() != alpha_) throw Error(ErrorCode::DegreeMismatch, "wrong matrix row length");
    for (long v : row) e.push_back(field_->from_int(v));
  }
  return Mat(alpha_, std::move(e));
}

BigInt gl_order(unsigned alpha, const gf::FieldSpec &spec) {
  if (alpha == 0) throw Error(ErrorCode::InvalidParams, "dimension must be positive");
  const BigInt s = spec.size();
  const BigInt sa = boost::multiprecision::pow(s, alpha);
  BigInt order = 1;
  BigInt si = 1;
  for (unsigned i = 0; i < alpha; ++i) {
    order *= sa - si;
    si *= s;
  }
  return order;
}

BigInt GL::order() const { return gl_order(alpha_, field_->spec()); }

std::vector<Mat> GL::generators() const {
  std::vector<Mat> gens;
  const Elem s = field_->size();
  for (unsigned i = 0; i < alpha_; ++i)
    for (unsigned j = 0; j < alpha_; ++j) {
      if (i == j) continue;
      for (Elem c = 1; c < s; ++c) {
        Mat m = identity();
        m.at(i, j) = c;
        gens.push_back(std::move(m));
      }
    }
  Mat d = identity();
  d.at(0, 0) = field_->primitive_element();
  if (d != identity()) gens.push_back(std::move(d));
  return gens;
}

void GL::for_each_element(const std::function<bool(const Mat &)> &fn) const {
  const std::uint64_t s = field_size();
  const std::uint64_t count = checked_pow(s, alpha_);
  std::vector<Elem> entries(alpha_ * alpha_, 0);
  bool stop = false;
  std::function<void(unsigned, const Echelon &)> rec = [&](unsigned row, const Echelon &span) {
    if (row == alpha_) {
      if (!fn(Mat(alpha_, entries))) stop = true;
      return;
    }
    for (std::uint64_t m = 0; m < count && !stop; ++m) {
      Vec v = vector_from_index(m, alpha_, s);
      Echelon next = span;
      if (!next.insert(v)) continue;
      std::copy(v.begin(), v.end(), entries.begin() + row * alpha_);
      rec(row + 1, next);
    }
  };
  rec(0, Echelon(*field_));
}

MatGroup::MatGroup(GL space, std::vector<Mat> generators, std::vector<Mat> sorted_elements)
    : space_(std::move(space)), generators_(std::move(generators)), elements_(std::move(sorted_elements)) {}

bool MatGroup::contains(const Mat &m) const { return std::binary_search(elements_.begin(), elements_.end(), m); }

MatGroup closure(const GL &space, std::vector<Mat> generators, const Limits &limits) {
  for (const auto &g : generators) {
    if (g.alpha() != space.alpha()) throw Error(ErrorCode::DegreeMismatch, "generator dimension mismatch");
    if (space.det(g) == 0) throw Error(ErrorCode::SingularGenerator, "generator is singular");
  }
  std::unordered_set<Mat, MatHash> seen;
  std::vector<Mat> elems{space.identity()};
  seen.insert(elems[0]);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto &g : generators) {
      Mat h = space.mul(elems[i], g);
      if (seen.insert(h).second) {
        elems.push_back(std::move(h));
        if (elems.size() > limits.closure_elements)
          throw Error(ErrorCode::LimitExceeded, "matrix group closure exceeds " +
                                                    std::to_string(limits.closure_elements) + " elements");
      }
    }
  std::sort(elems.begin(), elems.end());
  return MatGroup(space, std::move(generators), std::move(elems));
}

MatGroup general_linear_group(const GL &space, const Limits &limits) {
  if (space.order() > limits.closure_elements)
    throw Error(ErrorCode::LimitExceeded, "|GL| = " + space.order().str() + " exceeds the closure limit");
  return closure(space, space.generators(), limits);
}

bool is_irreducible(const GL &space, std::span<const Mat> generators, const Limits &limits) {
  const unsigned alpha = space.alpha();
  const std::uint64_t s = space.field_size();
  const std::uint64_t count = checked_field_power(s, alpha, limits.spin_limit);
  for (std::uint64_t m = 1; m < count; ++m) {
    Vec v = vector_from_index(m, alpha, s);
    // one representative per line: first nonzero coordinate equal to 1
    if (*std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; }) != 1) continue;
    Echelon span(space.field());
    span.insert(v);
    std::vector<Vec> queue{v};
    for (std::size_t i = 0; i < queue.size() && span.rank() < alpha; ++i)
      for (const auto &g : generators) {
        Vec w = space.apply(g, queue[i]);
        if (span.insert(w)) queue.push_back(std::move(w));
      }
    if (span.rank() < alpha) return false;
  }
  return true;
}

bool is_primitive_linear(const GL &space, std::span<const Mat> generators, const Limits &limits) {
  const unsigned alpha = space.alpha();
  if (!is_prime(alpha) && alpha != 1)
    throw Error(ErrorCode::InvalidParams, "linear primitivity needs a prime dimension, got " + std::to_string(alpha));
  if (!is_irreducible(space, generators, limits)) return false;
  if (alpha == 1) return true;
  const auto &f = space.field();
  const std::uint64_t count = checked_field_power(f.size(), alpha, limits.spin_limit);
  auto normalize = [&](Vec v) {
    const Elem lead = *std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    const Elem scale = f.inv(lead);
    for (auto &e : v) e = f.mul(e, scale);
    return v;
  };
  std::vector<Vec> lines;
  for (std::uint64_t m = 1; m < count; ++m) {
    Vec v = vector_from_index(m, alpha, f.size());
    if (normalize(v) == v) lines.push_back(std::move(v));
  }
  std::map<Vec, std::size_t> line_of;
  for (std::size_t i = 0; i < lines.size(); ++i) line_of.emplace(lines[i], i);
  std::vector<std::vector<std::size_t>> image(generators.size());
  for (std::size_t g = 0; g < generators.size(); ++g)
    for (const auto &v : lines) image[g].push_back(line_of.at(normalize(space.apply(generators[g], v))));

  std::vector<std::size_t> chosen;
  std::uint64_t visited = 0;
  auto preserved = [&] {
    std::vector<char> in(lines.size(), 0);
    for (auto i : chosen) in[i] = 1;
    for (const auto &img : image)
      for (auto i : chosen)
        if (!in[img[i]]) return false;
    return true;
  };
  // Depth-first over independent line sets in increasing index order.
  auto search = [&](auto &&self, std::size_t from, const Echelon &span) -> bool {
    if (chosen.size() == alpha) return preserved();
    for (std::size_t i = from; i < lines.size(); ++i) {
      if (++visited > limits.spin_limit) throw Error(ErrorCode::LimitExceeded, "line decomposition search too large");
      Echelon next = span;
      if (!next.insert(lines[i])) continue;
      chosen.push_back(i);
      if (self(self, i + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return !search(search, 0, Echelon(f));
}

Mat singer_generator(const GL &space, const Limits &limits) {
  const auto &f = space.field();
  const unsigned alpha = space.alpha();
  const std::uint64_t s = f.size();
  const std::uint64_t count = checked_field_power(s, alpha, limits.spin_limit);
  Extension ext{&f, gf::least_irreducible(f, alpha, limits.spin_limit)};
  const std::uint64_t group_order = count - 1;
  const auto primes = factorize(group_order);

  auto ascending = [&](std::uint64_t m) {
    Vec v(alpha);
    for (unsigned i = 0; i < alpha; ++i) {
      v[i] = static_cast<Elem>(m % s);
      m /= s;
    }
    return v;
  };

  for (std::uint64_t m = 1; m < count; ++m) {
    Vec w = ascending(m);
    bool primitive = std::none_of(primes.begin(), primes.end(),
                                  [&](const auto &pe) { return ext.is_one(ext.pow(w, group_order / pe.first)); });
    if (!primitive) continue;
    std::vector<Elem> entries(alpha * alpha, 0);
    Vec basis(alpha, 0);
    for (unsigned j = 0; j < alpha; ++j) {
      std::fill(basis.begin(), basis.end(), 0);
      basis[j] = 1;
      Vec col = ext.mul(w, basis);
      for (unsigned i = 0; i < alpha; ++i) entries[i * alpha + j] = col[i];
    }
    return Mat(alpha, std::move(entries));
  }
  throw Error(ErrorCode::InvalidParams, "no primitive element found");
}

MatGroup singer_subgroup(unsigned alpha, const gf::FieldPtr &field, const Limits &limits) {
  GL space(field, alpha);
  return closure(space, {singer_generator(space, limits)}, limits);
}

std::optional<MatGroup> maximal_ar_subgroup(unsigned alpha, const gf::FieldPtr &field, std::uint64_t r,
                                            const Limits &limits) {
  if (!is_prime(r)) throw Error(ErrorCode::NotPrime, std::to_string(r) + " is not prime");
  if (r == field->characteristic())
    throw Error(ErrorCode::CharacteristicConflict, "r equals the field characteristic");
  GL space(field, alpha);
  const std::uint64_t s = field->size();
  const auto d = static_cast<unsigned>(multiplicative_order(static_cast<std::int64_t>(s % r), static_cast<std::int64_t>(r)));
  const unsigned k = alpha / d;
  if (k == 0) return std::nullopt;

  GL block_space(field, d);
  const std::uint64_t sd = checked_field_power(s, d, limits.spin_limit);
  const Mat h = block_space.power(singer_generator(block_space, limits), (sd - 1) / r);

  std::vector<Mat> gens;
  for (unsigned b = 0; b < k; ++b) {
    Mat g = space.identity();
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) g.at(b * d + i, b * d + j) = h(i, j);
    gens.push_back(std::move(g));
  }
  return closure(space, std::move(gens), limits);
}

std::optional<Mat> conjugate_in_gl(const MatGroup &a, const MatGroup &b, const Limits &limits) {
  const GL &space = a.space();
  if (!(space == b.space())) throw Error(ErrorCode::FieldMismatch, "groups live in different GL");
  require_gl_scale(space, limits);
  if (a.order() != b.order()) return std::nullopt;
  std::optional<Mat> found;
  space.for_each_element([&](const Mat &x) {
    const Mat xi = space.inverse(x);
    for (const auto &g : a.generators())
      if (!b.contains(space.mul(space.mul(xi, g), x))) return true;
    found = x;
    return false;
  });
  return found;
}

std::vector<Mat> canonical_generators(const MatGroup &g, const Limits &limits) {
  std::vector<Mat> gens;
  std::vector<Mat> current{g.space().identity()};
  for (const auto &e : g.elements()) {
    if (std::binary_search(current.begin(), current.end(), e)) continue;
    gens.push_back(e);
    current = closure(g.space(), gens, limits).elements();
    if (current.size() == g.elements().size()) break;
  }
  return gens;
}

std::vector<GLClass> classify_elem_abelian_r(unsigned alpha, const gf::FieldPtr &field, std::uint64_t r,
                                             const Limits &limits) {
  if (!is_prime(r)) throw Error(ErrorCode::NotPrime, std::to_string(r) + " is not prime");
  GL space(field, alpha);
  require_gl_scale(space, limits);

  std::vector<Mat> all;
  space.for_each_element([&](const Mat &m) {
    all.push_back(m);
    return true;
  });
  std::unordered_map<Mat, std::uint32_t, MatHash> index;
  for (std::uint32_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
  auto idx = [&](const Mat &m) { return index.at(m); };
  const std::uint32_t id = idx(space.identity());

  std::vector<std::uint32_t> order_r;
  for (std::uint32_t i = 0; i < all.size(); ++i)
    if (i != id && space.power(all[i], r) == all[id]) order_r.push_back(i);

  using Key = std::vector<std::uint32_t>;  // sorted element indices
  struct Node {
    Key elements;
    std::vector<std::uint32_t> gens;
  };
  std::map<Key, std::vector<std::uint32_t>> found;
  std::deque<Node> queue;
  auto extend = [&](const Node &h, std::uint32_t y) {
    std::set<std::uint32_t> elems(h.elements.begin(), h.elements.end());
    Mat yp = all[y];
    for (std::uint64_t i = 1; i < r; ++i) {
      for (auto e : h.elements) elems.insert(idx(space.mul(all[e], yp)));
      yp = space.mul(yp, all[y]);
    }
    Node k{Key(elems.begin(), elems.end()), h.gens};
    k.gens.push_back(y);
    return k;
  };
  Node trivial{{id}, {}};
  std::vector<Key> maximal;
  queue.push_back(trivial);
  while (!queue.empty()) {
    Node h = std::move(queue.front());
    queue.pop_front();
    bool extended = false;
    for (auto y : order_r) {
      if (std::binary_search(h.elements.begin(), h.elements.end(), y)) continue;
      const Mat &my = all[y];
      bool commutes = std::all_of(h.gens.begin(), h.gens.end(), [&](std::uint32_t g) {
        return space.mul(all[g], my) == space.mul(my, all[g]);
      });
      if (!commutes) continue;
      extended = true;
      Node k = extend(h, y);
      if (found.emplace(k.elements, k.gens).second) queue.push_back(std::move(k));
    }
    if (!extended && !h.gens.empty()) maximal.push_back(h.elements);
  }
  std::sort(maximal.begin(), maximal.end());

  // conjugation by each GL generator as a map on element indices
  std::vector<std::vector<std::uint32_t>> conj;
  for (const auto &g : space.generators()) {
    const Mat gi = space.inverse(g);
    std::vector<std::uint32_t> map(all.size());
    for (std::uint32_t i = 0; i < all.size(); ++i) map[i] = idx(space.mul(space.mul(gi, all[i]), g));
    conj.push_back(std::move(map));
  }

  auto greedy_gens = [&](const Key &elems) {
    std::vector<std::uint32_t> gens;
    std::set<std::uint32_t> current{id};
    for (auto e : elems) {
      if (current.count(e)) continue;
      gens.push_back(e);
      std::vector<std::uint32_t> base(current.begin(), current.end());
      Mat yp = all[e];
      for (std::uint64_t i = 1; i < r; ++i) {
        for (auto b : base) current.insert(idx(space.mul(all[b], yp)));
        yp = space.mul(yp, all[e]);
      }
      if (current.size() == elems.size()) break;
    }
    return gens;
  };

  struct Found {
    std::size_t order;
    std::vector<std::uint32_t> gens;
    Key elements;
    std::size_t class_size;
  };
  std::vector<Found> classes;
  std::set<Key> assigned;
  for (const auto &m : maximal) {
    if (assigned.count(m)) continue;
    std::vector<Key> orbit{m};
    assigned.insert(m);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto &map : conj) {
        Key img;
        img.reserve(orbit[i].size());
        for (auto e : orbit[i]) img.push_back(map[e]);
        std::sort(img.begin(), img.end());
        if (assigned.insert(img).second) orbit.push_back(std::move(img));
      }
    Found best{m.size(), greedy_gens(m), m, orbit.size()};
    for (const auto &member : orbit) {
      auto g = greedy_gens(member);
      if (g < best.gens) {
        best.gens = std::move(g);
        best.elements = member;
      }
    }
    classes.push_back(std::move(best));
  }
  std::sort(classes.begin(), classes.end(),
            [](const Found &a, const Found &b) { return std::tie(a.order, a.gens) < std::tie(b.order, b.gens); });

  std::vector<GLClass> out;
  for (const auto &c : classes) {
    std::vector<Mat> gens, elems;
    for (auto g : c.gens) gens.push_back(all[g]);
    for (auto e : c.elements) elems.push_back(all[e]);
    out.push_back(GLClass{MatGroup(space, std::move(gens), std::move(elems)), BigInt(c.class_size)});
  }
  return out;
}

nlohmann::json mat_to_json(const GL &space, const Mat &m) {
  nlohmann::json rows = nlohmann::json::array();
  for (unsigned i = 0; i < m.alpha(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (unsigned j = 0; j < m.alpha(); ++j) row.push_back(space.field().to_elem(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const MatGroup &g) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto &m : g.generators()) gens.push_back(mat_to_json(g.space(), m));
  return nlohmann::json{{"field", g.space().field().spec()}, {"alpha", g.alpha()}, {"generators", gens}};
}

MatGroup mat_group_from_json(const nlohmann::json &j, const Limits &limits) {
  try {
    const auto &fj = j.at("field");
    gf::FieldSpec spec;
    if (fj.contains("modulus"))
      spec = fj.get<gf::FieldSpec>();
    else
      spec = gf::field_make(fj.at("t").get<unsigned>(), fj.at("k").get<unsigned>(), limits);
    auto field = std::make_shared<const gf::Field>(spec);
    const auto alpha = j.at("alpha").get<unsigned>();
    GL space(field, alpha);
    std::vector<Mat> gens;
    for (const auto &mj : j.at("generators")) {
      if (mj.size() != alpha) throw Error(ErrorCode::DegreeMismatch, "wrong number of matrix rows");
      std::vector<Elem> entries;
      for (const auto &row : mj) {
        if (row.size() != alpha) throw Error(ErrorCode::DegreeMismatch, "wrong matrix row length");
        for (const auto &e : row) {
          if (e.is_number_integer()) {
            if (spec.k != 1) throw Error(ErrorCode::ParseError, "integer entries require a prime field");
            entries.push_back(field->from_int(e.get<std::int64_t>()));
          } else {
            entries.push_back(field->index_of(e.get<gf::FieldElem>()));
          }
        }
      }
      gens.emplace_back(alpha, std::move(entries));
    }
    return closure(space, std::move(gens), limits);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace aqar::mat
