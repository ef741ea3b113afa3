#include "aqar/construct.hpp"

#include <algorithm>

#include "aqar/error.hpp"

namespace aqar::construct {

std::string_view to_string(PrimitiveCase c) {
  switch (c) {
    case PrimitiveCase::CyclicR: return "CyclicR";
    case PrimitiveCase::CyclicQ: return "CyclicQ";
    case PrimitiveCase::AffineQR: return "AffineQR";
  }
  return "?";
}

PrimitiveCase parse_case(std::string_view text) {
  if (text == "cyclic-r" || text == "CyclicR") return PrimitiveCase::CyclicR;
  if (text == "cyclic-q" || text == "CyclicQ") return PrimitiveCase::CyclicQ;
  if (text == "affine" || text == "AffineQR") return PrimitiveCase::AffineQR;
  throw Error(ErrorCode::ParseError, "unknown case '" + std::string(text) + "'");
}

PrimitiveSpec primitive_spec(std::uint64_t q, std::uint64_t r, PrimitiveCase kind, const Limits &limits) {
  for (auto x : {q, r})
    if (!is_prime(x)) throw Error(ErrorCode::NotPrime, std::to_string(x) + " is not prime");
  if (q == r) throw Error(ErrorCode::SamePrime, "q and r must differ");
  PrimitiveSpec spec{q, r, kind, 0, 0};
  std::uint64_t n = 0;
  switch (kind) {
    case PrimitiveCase::CyclicR: n = r; break;
    case PrimitiveCase::CyclicQ: n = q; break;
    case PrimitiveCase::AffineQR:
      spec.beta = static_cast<unsigned>(multiplicative_order(static_cast<std::int64_t>(q % r), static_cast<std::int64_t>(r)));
      n = checked_pow(q, spec.beta);
      break;
  }
  if (n > limits.max_degree)
    throw Error(ErrorCode::DegreeLimit, "degree " + std::to_string(n) + " exceeds the limit " +
                                            std::to_string(limits.max_degree));
  spec.n = static_cast<unsigned>(n);
  return spec;
}

namespace {

perm::Perm cycle_on(unsigned n) {
  std::vector<unsigned> cyc(n);
  for (unsigned i = 0; i < n; ++i) cyc[i] = i + 1;
  return perm::Perm::from_cycles(n, {cyc});
}

// Index of a vector with v[0] as the most significant digit.
unsigned vector_index(const mat::Vec &v, std::uint64_t q) {
  unsigned idx = 0;
  for (auto c : v) idx = static_cast<unsigned>(idx * q + c);
  return idx;
}

mat::Vec index_vector(unsigned idx, unsigned dim, std::uint64_t q) {
  mat::Vec v(dim);
  for (unsigned j = dim; j-- > 0;) {
    v[j] = static_cast<mat::Elem>(idx % q);
    idx /= static_cast<unsigned>(q);
  }
  return v;
}

}  // namespace

perm::PermGroup primitive_aqar_group(const PrimitiveSpec &spec, const Limits &limits) {
  if (spec.kind != PrimitiveCase::AffineQR) return perm::PermGroup(spec.n, {cycle_on(spec.n)});

  const unsigned beta = spec.beta;
  const std::uint64_t q = spec.q;
  auto field = gf::make_field(static_cast<unsigned>(q), 1, limits);
  mat::GL space(field, beta);
  const mat::Mat singer = mat::singer_generator(space, limits);
  const mat::Mat h = space.power(singer, (spec.n - 1) / spec.r);

  std::vector<perm::Perm> gens;
  for (unsigned j = 0; j < beta; ++j) {
    std::vector<unsigned> images(spec.n);
    for (unsigned p = 0; p < spec.n; ++p) {
      mat::Vec v = index_vector(p, beta, q);
      v[j] = field->add(v[j], 1);
      images[p] = vector_index(v, q) + 1;
    }
    gens.push_back(perm::Perm::from_images(images));
  }
  std::vector<unsigned> images(spec.n);
  for (unsigned p = 0; p < spec.n; ++p) images[p] = vector_index(space.apply(h, index_vector(p, beta, q)), q) + 1;
  gens.push_back(perm::Perm::from_images(images));
  return perm::PermGroup(spec.n, std::move(gens));
}

perm::PermGroup primitive_aqar_group(std::uint64_t q, std::uint64_t r, PrimitiveCase kind, const Limits &limits) {
  return primitive_aqar_group(primitive_spec(q, r, kind, limits), limits);
}

nlohmann::json provenance(const PrimitiveSpec &spec) {
  return nlohmann::json{{"theorem", "B"}, {"case", to_string(spec.kind)}, {"q", spec.q},
                        {"r", spec.r},     {"beta", spec.beta},            {"n", spec.n}};
}

bool StructureReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed; });
}

StructureReport verify_primitive_structure(const perm::PermGroup &g, std::uint64_t q, std::uint64_t r,
                                           const Limits &limits) {
  if (!perm::is_transitive(g)) throw Error(ErrorCode::NotPrimitive, "group is not transitive");
  const auto prim = perm::is_primitive(g);
  if (!prim.primitive) throw Error(ErrorCode::NotPrimitive, "group has a nontrivial block");
  const std::uint64_t chain[] = {q, r};
  if (!perm::in_variety(g, chain)) throw Error(ErrorCode::NotInVariety, "group is not in A_q A_r");

  StructureReport rep;
  rep.q = q;
  rep.r = r;
  rep.n = g.degree();
  rep.order = g.order();
  const BigInt n = rep.n;
  auto add = [&](std::string id, bool ok, std::string detail) { rep.checks.push_back({std::move(id), ok, std::move(detail)}); };

  if (rep.order == n && n == r)
    rep.kind = PrimitiveCase::CyclicR;
  else if (rep.order == n && n == q)
    rep.kind = PrimitiveCase::CyclicQ;
  else
    rep.kind = PrimitiveCase::AffineQR;

  const auto minimal = perm::minimal_normal_subgroups(g, limits);
  add("unique_minimal_normal", minimal.size() == 1, std::to_string(minimal.size()) + " minimal normal subgroup(s)");
  if (!minimal.empty()) {
    const auto &m = minimal.front();
    rep.minimal_normal_order = m.order();
    const auto fit = perm::fitting_subgroup(g, limits);
    add("minimal_normal_is_fitting", perm::same_group(m, fit),
        "|M| = " + m.order().str() + ", |F(G)| = " + fit.order().str());
    add("minimal_normal_order_is_degree", m.order() == n, "|M| = " + m.order().str() + ", n = " + n.str());
    std::uint64_t u = 0;
    unsigned k = 0;
    const bool pp = m.order() > 1 && prime_power(m.order_u64(), u, k);
    rep.minimal_normal_prime = u;
    rep.minimal_normal_exponent = k;
    add("minimal_normal_prime_power", pp && k >= 1,
        !pp ? "|M| is not a prime power"
        : k == 1 ? "|M| = " + std::to_string(u) + "^1; accepted as k >= 1, fails the strict k > 1"
                 : "|M| = " + std::to_string(u) + "^" + std::to_string(k));
  }

  if (rep.kind == PrimitiveCase::AffineQR) {
    const auto stab = perm::point_stabilizer(g, 1);
    add("stabilizer_cyclic_of_order_r", stab.order() == r, "|G_1| = " + stab.order().str());
    const auto beta = multiplicative_order(static_cast<std::int64_t>(q % r), static_cast<std::int64_t>(r));
    const BigInt qb = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(beta));
    add("degree_is_q_to_order_of_q_mod_r", qb == n,
        "ord_r(q) = " + std::to_string(beta) + ", q^beta = " + qb.str());
    add("order_is_degree_times_r", rep.order == n * r, "|G| = " + rep.order.str());
    add("order_below_degree_squared", n * r < n * n, "n*r = " + BigInt(n * r).str() + ", n^2 = " + BigInt(n * n).str());
  } else {
    const std::uint64_t expect = rep.kind == PrimitiveCase::CyclicR ? r : q;
    add("order_is_degree", rep.order == n && n == expect, "|G| = " + rep.order.str() + ", n = " + n.str());
  }
  return rep;
}

nlohmann::json to_json(const StructureReport &report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto &c : report.checks) checks.push_back({{"id", c.id}, {"passed", c.passed}, {"detail", c.detail}});
  return nlohmann::json{{"case", to_string(report.kind)},
                        {"q", report.q},
                        {"r", report.r},
                        {"n", report.n},
                        {"order", report.order.str()},
                        {"minimal_normal", {{"order", report.minimal_normal_order.str()},
                                            {"prime", report.minimal_normal_prime},
                                            {"exponent", report.minimal_normal_exponent}}},
                        {"checks", checks},
                        {"all_passed", report.all_passed()}};
}

std::optional<std::vector<mat::Mat>> action_from_generators(const mat::GL &space, const grp::CayleyGroup &acting,
                                                            std::span<const mat::Mat> generator_images) {
  const auto &gens = acting.generators();
  if (generator_images.size() != gens.size())
    throw Error(ErrorCode::InvalidParams, "one image per generator required");
  std::vector<std::optional<mat::Mat>> phi(acting.order());
  phi[acting.identity()] = space.identity();
  std::vector<grp::Index> queue{acting.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto y = acting.mul(x, gens[j]);
      mat::Mat img = space.mul(*phi[x], generator_images[j]);
      if (!phi[y]) {
        phi[y] = std::move(img);
        queue.push_back(y);
      } else if (*phi[y] != img) {
        return std::nullopt;
      }
    }
  }
  std::vector<mat::Mat> out;
  out.reserve(phi.size());
  for (auto &m : phi) out.push_back(std::move(*m));
  return out;
}

grp::CayleyGroup semidirect_product(const gf::FieldPtr &field, unsigned dim, std::span<const mat::Mat> action,
                                    const grp::CayleyGroup &acting, const Limits &limits) {
  const std::size_t h = acting.order();
  if (dim == 0) return acting;
  const std::uint64_t s = field->size();
  const std::uint64_t v = checked_pow(s, dim);
  if (v * h > limits.cayley_order)
    throw Error(ErrorCode::LimitExceeded, "semidirect product order " + std::to_string(v * h) + " exceeds the table limit");
  if (action.size() != h) throw Error(ErrorCode::NotHomomorphism, "one action matrix per acting element required");
  mat::GL space(field, dim);
  for (const auto &m : action)
    if (m.alpha() != dim || space.det(m) == 0) throw Error(ErrorCode::NotHomomorphism, "action matrix is not in GL");
  if (action[acting.identity()] != space.identity())
    throw Error(ErrorCode::NotHomomorphism, "identity does not act trivially");
  for (grp::Index a = 0; a < h; ++a)
    for (grp::Index b = 0; b < h; ++b)
      if (space.mul(action[a], action[b]) != action[acting.mul(a, b)])
        throw Error(ErrorCode::NotHomomorphism, "action is not multiplicative");

  std::vector<mat::Vec> vecs(v);
  for (std::uint64_t i = 0; i < v; ++i) vecs[i] = index_vector(static_cast<unsigned>(i), dim, s);
  // acted[a][i] = index of action[a] * vecs[i]
  std::vector<std::vector<unsigned>> acted(h, std::vector<unsigned>(v));
  for (grp::Index a = 0; a < h; ++a)
    for (std::uint64_t i = 0; i < v; ++i) acted[a][i] = vector_index(space.apply(action[a], vecs[i]), s);
  std::vector<std::vector<unsigned>> add(v, std::vector<unsigned>(v));
  for (std::uint64_t i = 0; i < v; ++i)
    for (std::uint64_t j = 0; j < v; ++j) {
      mat::Vec w(dim);
      for (unsigned k = 0; k < dim; ++k) w[k] = field->add(vecs[i][k], vecs[j][k]);
      add[i][j] = vector_index(w, s);
    }

  const std::size_t n = v * h;
  std::vector<std::vector<grp::Index>> t(n, std::vector<grp::Index>(n));
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t v1 = x / h, h1 = x % h;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t v2 = y / h, h2 = y % h;
      t[x][y] = static_cast<grp::Index>(add[v1][acted[h1][v2]] * h + acting.mul(static_cast<grp::Index>(h1), static_cast<grp::Index>(h2)));
    }
  }
  return grp::CayleyGroup(std::move(t), acting.identity());
}

}  // namespace aqar::construct
