#pragma once

#include <cstdint>

namespace aqar {

/// Desk-scale ceilings for the exhaustive algorithms. Exceeding one raises
/// ErrorCode::LimitExceeded (or DegreeLimit for degrees).
struct Limits {
  std::uint64_t exhaustive_order = 20160;  // element lists of permutation groups
  unsigned max_degree = 10;                // exhaustive permutation searches
  std::uint64_t cayley_order = 400;        // multiplication tables
  std::uint64_t census_order = 400;        // order n in the variety census
  std::uint64_t gl_bruteforce = 1'000'000; // |GL(alpha, s)| for brute-force scans
  std::uint64_t spin_limit = 10'000;       // s^alpha for line spinning / Singer fields
  std::uint64_t field_size = 1u << 16;     // t^k for field_make
  std::uint64_t closure_elements = 1'000'000;
  unsigned jobs = 1;
};

}  // namespace aqar
