#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aqar/groupmodel.hpp"
#include "aqar/limits.hpp"
#include "aqar/matgrp.hpp"
#include "aqar/perm.hpp"

namespace aqar::construct {

enum class PrimitiveCase { CyclicR, CyclicQ, AffineQR };

std::string_view to_string(PrimitiveCase c);
/// Accepts "cyclic-r", "cyclic-q", "affine" (and the enum spellings).
PrimitiveCase parse_case(std::string_view text);

struct PrimitiveSpec {
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  PrimitiveCase kind = PrimitiveCase::AffineQR;
  unsigned n = 0;
  unsigned beta = 0;  // ord_r(q) for AffineQR, 0 otherwise
};

/// Throws NotPrime, SamePrime, DegreeLimit.
PrimitiveSpec primitive_spec(std::uint64_t q, std::uint64_t r, PrimitiveCase kind, const Limits &limits = {});

/// CyclicR: an r-cycle.  CyclicQ: a q-cycle.  AffineQR: translations of
/// GF(q)^beta together with the order-r power of a Singer cycle, acting on the
/// q^beta vectors numbered 1.. in lexicographic order.
perm::PermGroup primitive_aqar_group(const PrimitiveSpec &spec, const Limits &limits = {});
perm::PermGroup primitive_aqar_group(std::uint64_t q, std::uint64_t r, PrimitiveCase kind, const Limits &limits = {});

nlohmann::json provenance(const PrimitiveSpec &spec);

struct Check {
  std::string id;
  bool passed = false;
  std::string detail;
};

struct StructureReport {
  PrimitiveCase kind = PrimitiveCase::AffineQR;
  std::uint64_t q = 0, r = 0;
  unsigned n = 0;
  BigInt order;
  BigInt minimal_normal_order;
  std::uint64_t minimal_normal_prime = 0;
  unsigned minimal_normal_exponent = 0;  // |M| = prime^exponent
  std::vector<Check> checks;

  bool all_passed() const;
};

/// Checks the normal structure of a primitive group in A_q A_r.  Throws
/// NotPrimitive (including intransitive input) or NotInVariety.
StructureReport verify_primitive_structure(const perm::PermGroup &g, std::uint64_t q, std::uint64_t r,
                                           const Limits &limits = {});
nlohmann::json to_json(const StructureReport &report);

/// Extends images of `acting.generators()` to a homomorphism into GL; none
/// when the assignment is inconsistent.
std::optional<std::vector<mat::Mat>> action_from_generators(const mat::GL &space, const grp::CayleyGroup &acting,
                                                            std::span<const mat::Mat> generator_images);

/// V x H with (v1, h1)(v2, h2) = (v1 + action[h1] v2, h1 h2), V = field^dim,
/// one matrix per element of `acting`.  Elements are numbered
/// index(v) * |H| + h with v read as a base-s number, first coordinate most
/// significant.  Throws NotHomomorphism or LimitExceeded.
grp::CayleyGroup semidirect_product(const gf::FieldPtr &field, unsigned dim, std::span<const mat::Mat> action,
                                    const grp::CayleyGroup &acting, const Limits &limits = {});

}  // namespace aqar::construct
