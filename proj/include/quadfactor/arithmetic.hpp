#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "quadfactor/factorization.hpp"
#include "quadfactor/int_matrix.hpp"

namespace quadfactor {

/// Determinant of the black-to-white matrix in the user's labelling. Requires
/// b = w; the value is always -1, 0 or 1.
std::int64_t det_via_ldu(const LDUFactorization& f);

/// Number of unit entries of the defective identity.
std::size_t rank_via_ldu(const LDUFactorization& f);

/// Row of the defective identity with no unit entry where the transformed
/// right-hand side L^{-1} P v is nonzero. `row` is a factor row index.
struct NoSolution {
  std::size_t row = 0;
  std::int64_t value = 0;
};

struct SolveOutcome {
  std::variant<std::vector<std::int64_t>, NoSolution> result;

  bool solvable() const { return std::holds_alternative<std::vector<std::int64_t>>(result); }
  const std::vector<std::int64_t>& solution() const { return std::get<std::vector<std::int64_t>>(result); }
  const NoSolution& certificate() const { return std::get<NoSolution>(result); }
};

/// Integer solution of B x = v (one solution, free coordinates zero), or a
/// certificate that there is no rational solution. v has length b.
SolveOutcome solve_integer(const LDUFactorization& f, const std::vector<std::int64_t>& v);

/// Sign of a permutation given as an index array.
int permutation_sign(const std::vector<std::size_t>& p);

}  // namespace quadfactor
