#include "quadfactor/arithmetic.hpp"

#include <stdexcept>

#include "quadfactor/errors.hpp"

namespace quadfactor {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in solve");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in solve");
  return r;
}

}  // namespace

int permutation_sign(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::int64_t det_via_ldu(const LDUFactorization& f) {
  const std::size_t n = f.lower.rows();
  if (n != f.upper.rows()) throw InputError("det: black-to-white matrix is not square");
  if (f.defective != IntMatrix::identity(n)) return 0;
  std::int64_t det = permutation_sign(f.black_order) * permutation_sign(f.white_order);
  for (std::size_t i = 0; i < n; ++i) det *= f.lower(i, i) * f.upper(i, i);
  return det;
}

std::size_t rank_via_ldu(const LDUFactorization& f) { return f.defective.count_nonzero(); }

SolveOutcome solve_integer(const LDUFactorization& f, const std::vector<std::int64_t>& v) {
  const std::size_t b = f.lower.rows(), w = f.upper.rows();
  if (v.size() != b) throw InputError("solve: right-hand side has the wrong length");

  // L y = P v; the diagonal of L is +-1 so division is exact.
  std::vector<std::int64_t> y(b);
  for (std::size_t i = 0; i < b; ++i) {
    std::int64_t acc = v[f.black_order[i]];
    for (std::size_t j = 0; j < i; ++j) acc = checked_sub(acc, checked_mul(f.lower(i, j), y[j]));
    y[i] = acc * f.lower(i, i);
  }

  std::vector<std::int64_t> z(w, 0);
  for (std::size_t i = 0; i < b; ++i) {
    bool pivot = false;
    for (std::size_t j = 0; j < w; ++j) {
      if (f.defective(i, j) == 1) {
        z[j] = y[i];
        pivot = true;
      }
    }
    if (!pivot && y[i] != 0) return {NoSolution{i, y[i]}};
  }

  // U u = z, back substitution.
  std::vector<std::int64_t> u(w);
  for (std::size_t i = w; i-- > 0;) {
    std::int64_t acc = z[i];
    for (std::size_t j = i + 1; j < w; ++j) acc = checked_sub(acc, checked_mul(f.upper(i, j), u[j]));
    u[i] = acc * f.upper(i, i);
  }
  std::vector<std::int64_t> x(w);
  for (std::size_t j = 0; j < w; ++j) x[f.white_order[j]] = u[j];
  return {std::move(x)};
}

}  // namespace quadfactor
