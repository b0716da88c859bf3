#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quadfactor/int_matrix.hpp"

// Brute-force references for the factorization. None of these share code with
// the factorization pipeline.

namespace quadfactor {

/// Exact determinant by fraction-free elimination.
std::int64_t det_oracle(const IntMatrix& b);

/// Rank over Q (modulus 0) or over GF(p) for a prime p.
std::size_t rank_oracle(const IntMatrix& b, std::uint64_t modulus = 0);

inline constexpr std::size_t kMaxMatchingSize = 14;

/// Sum of sgn(sigma) over perfect matchings, i.e. permutations with all
/// b(i, sigma(i)) nonzero, weighted by the entries. Square only, n <= 14.
std::int64_t signed_matchings(const IntMatrix& b);

/// Number of perfect matchings (the permanent of a 0/1 matrix). Same limits.
std::int64_t count_matchings(const IntMatrix& b);

struct SnfReport {
  std::vector<std::int64_t> factors;  // nonzero invariant factors, d_1 | d_2 | ...

  bool all_ones() const;
};

SnfReport smith_normal_form(const IntMatrix& b);

/// Whether B x = v has a rational solution, by comparing ranks.
bool rationally_solvable(const IntMatrix& b, const std::vector<std::int64_t>& v);

/// Determinant by cofactor expansion; only sensible for tiny matrices.
std::int64_t det_cofactor(const IntMatrix& b);

}  // namespace quadfactor
