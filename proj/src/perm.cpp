#include "aqar/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "aqar/error.hpp"

namespace aqar::perm {

Perm::Perm(unsigned degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm Perm::from_images(const std::vector<unsigned> &one_based) {
  Perm p;
  const auto n = one_based.size();
  p.images_.resize(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned v = one_based[i];
    if (v < 1 || v > n || seen[v - 1])
      throw Error(ErrorCode::ParseError, "image list is not a permutation of 1..n");
    seen[v - 1] = true;
    p.images_[i] = static_cast<Point>(v - 1);
  }
  return p;
}

Perm Perm::from_cycles(unsigned degree, const std::vector<std::vector<unsigned>> &cycles) {
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (const auto &c : cycles) {
    for (unsigned v : c) {
      if (v < 1 || v > degree)
        throw Error(ErrorCode::ParseError, "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      if (used[v - 1]) throw Error(ErrorCode::ParseError, "point " + std::to_string(v) + " repeated in cycles");
      used[v - 1] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      p.images_[c[i] - 1] = static_cast<Point>(c[(i + 1) % c.size()] - 1);
  }
  return p;
}

Perm Perm::parse_cycles(unsigned degree, std::string_view text) {
  std::vector<std::vector<unsigned>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw Error(ErrorCode::ParseError, "expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<unsigned> cycle;
    for (;;) {
      skip();
      if (i >= text.size()) throw Error(ErrorCode::ParseError, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error(ErrorCode::ParseError, "unexpected character in cycle notation");
      unsigned v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      cycle.push_back(v);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip();
  }
  return from_cycles(degree, cycles);
}

Perm Perm::operator*(const Perm &rhs) const {
  if (rhs.degree() != degree()) throw Error(ErrorCode::DegreeMismatch, "product of permutations of different degree");
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = rhs.images_[images_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::conjugate_by(const Perm &x) const { return x.inverse() * (*this) * x; }

Perm Perm::power(std::uint64_t e) const {
  Perm result(degree()), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::uint64_t o = 1;
  for (unsigned len : cycle_type()) o = std::lcm(o, std::uint64_t(len));
  return o;
}

std::optional<Point> Perm::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return std::nullopt;
}

std::vector<unsigned> Perm::one_based_images() const {
  std::vector<unsigned> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) v[i] = images_[i] + 1u;
  return v;
}

std::vector<unsigned> Perm::cycle_type() const {
  std::vector<unsigned> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out << ' ';
      out << j + 1;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::size_t PermHash::operator()(const Perm &p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Perm commutator(const Perm &a, const Perm &b) { return a.inverse() * b.inverse() * a * b; }

// ---------------------------------------------------------------------------

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators, std::span<const Point> base_prefix)
    : degree_(degree) {
  for (auto &g : generators) {
    if (g.degree() != degree)
      throw Error(ErrorCode::DegreeMismatch,
                  "generator of degree " + std::to_string(g.degree()) + " in group of degree " + std::to_string(degree));
    if (!g.is_identity() && std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(std::move(g));
  }
  for (Point b : base_prefix) {
    if (b >= degree) throw Error(ErrorCode::InvalidParams, "base point outside the domain");
    bool dup = std::any_of(levels_.begin(), levels_.end(), [&](const Level &l) { return l.base_point == b; });
    if (!dup) levels_.push_back(Level{b, {}, {}, {}});
  }
  strong_ = generators_;
  for (const auto &s : strong_) {
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(), [&](const Level &l) { return s.fixes(l.base_point); });
    if (fixes_base) levels_.push_back(Level{*s.first_moved(), {}, {}, {}});
  }
  schreier_sims();
  order_ = 1;
  for (const auto &l : levels_) order_ *= l.orbit.size();
}

PermGroup PermGroup::symmetric(unsigned degree) {
  std::vector<Perm> gens;
  if (degree >= 2) {
    gens.push_back(Perm::from_cycles(degree, {{1, 2}}));
    std::vector<unsigned> cyc(degree);
    std::iota(cyc.begin(), cyc.end(), 1u);
    gens.push_back(Perm::from_cycles(degree, {cyc}));
  }
  return PermGroup(degree, gens);
}

void PermGroup::rebuild_level(std::size_t i) {
  Level &level = levels_[i];
  level.generators.clear();
  for (const auto &s : strong_) {
    bool ok = true;
    for (std::size_t l = 0; l < i && ok; ++l) ok = s.fixes(levels_[l].base_point);
    if (ok) level.generators.push_back(s);
  }
  level.transversal.assign(degree_, std::nullopt);
  level.orbit.assign(1, level.base_point);
  level.transversal[level.base_point] = Perm(degree_);
  for (std::size_t idx = 0; idx < level.orbit.size(); ++idx) {
    const Point p = level.orbit[idx];
    for (const auto &s : level.generators) {
      const Point q = s[p];
      if (!level.transversal[q]) {
        level.transversal[q] = *level.transversal[p] * s;
        level.orbit.push_back(q);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const auto &level = levels_[l];
    const Point p = g[level.base_point];
    if (!level.transversal[p]) return {std::move(g), l};
    g = g * level.transversal[p]->inverse();
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims() {
  for (std::size_t i = levels_.size(); i-- > 0;) rebuild_level(i);
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const auto orbit = levels_[i].orbit;
    const auto gens = levels_[i].generators;
    for (Point p : orbit) {
      for (const auto &s : gens) {
        const auto &tp = *levels_[i].transversal[p];
        const auto &tq = *levels_[i].transversal[s[p]];
        Perm schreier = tp * s * tq.inverse();
        if (schreier.is_identity()) continue;
        auto [h, j] = sift(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (h.is_identity()) continue;
        if (j == levels_.size()) levels_.push_back(Level{*h.first_moved(), {}, {}, {}});
        strong_.push_back(std::move(h));
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) rebuild_level(l);
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
      if (restarted) break;
    }
    if (!restarted) --i;
  }
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto &l : levels_) b.push_back(l.base_point);
  return b;
}

std::uint64_t PermGroup::order_u64() const {
  if (order_ > BigInt(UINT64_MAX)) throw Error(ErrorCode::LimitExceeded, "group order exceeds 64 bits");
  return static_cast<std::uint64_t>(order_);
}

bool PermGroup::contains(const Perm &g) const {
  if (g.degree() != degree_) return false;
  auto [h, j] = sift(g, 0);
  return j == levels_.size() && h.is_identity();
}

bool PermGroup::contains_all(std::span<const Perm> gs) const {
  return std::all_of(gs.begin(), gs.end(), [&](const Perm &g) { return contains(g); });
}

void PermGroup::for_each_element(const std::function<void(const Perm &)> &fn) const {
  // g = u_{k-1} * ... * u_1 * u_0
  std::function<void(std::size_t, const Perm &)> rec = [&](std::size_t level, const Perm &suffix) {
    if (level == 0) {
      fn(suffix);
      return;
    }
    const auto &l = levels_[level - 1];
    for (Point p : l.orbit) rec(level - 1, suffix * *l.transversal[p]);
  };
  rec(levels_.size(), Perm(degree_));
}

std::vector<Perm> PermGroup::elements(std::uint64_t limit) const {
  if (order_ > limit)
    throw Error(ErrorCode::LimitExceeded,
                "group order " + order_.str() + " exceeds the exhaustive limit " + std::to_string(limit));
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(order_));
  for_each_element([&](const Perm &g) { out.push_back(g); });
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json to_json(const PermGroup &g) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto &p : g.generators()) gens.push_back(p.one_based_images());
  return nlohmann::json{{"degree", g.degree()}, {"generators", gens}};
}

PermGroup perm_group_from_json(const nlohmann::json &j) {
  try {
    const auto degree = j.at("degree").get<unsigned>();
    std::vector<Perm> gens;
    for (const auto &g : j.at("generators")) {
      if (g.is_string()) {
        gens.push_back(Perm::parse_cycles(degree, g.get<std::string>()));
      } else {
        auto images = g.get<std::vector<unsigned>>();
        if (images.size() != degree)
          throw Error(ErrorCode::DegreeMismatch, "generator has " + std::to_string(images.size()) + " images");
        gens.push_back(Perm::from_images(images));
      }
    }
    return PermGroup(degree, gens);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace aqar::perm
