#include "quadfactor/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "quadfactor/errors.hpp"

namespace quadfactor {

namespace {

using i128 = __int128;

std::vector<std::vector<i128>> widen(const IntMatrix& b) {
  std::vector<std::vector<i128>> a(b.rows(), std::vector<i128>(b.cols()));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) a[i][j] = b(i, j);
  return a;
}

std::int64_t narrow(i128 x) {
  if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("oracle result exceeds 64 bits");
  return static_cast<std::int64_t>(x);
}

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 r = 1, x = a % p;
  while (e > 0) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::size_t rank_rational(const IntMatrix& b) {
  auto a = widen(b);
  const std::size_t rows = b.rows(), cols = b.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t r = rank;
    while (r < rows && a[r][c] == 0) ++r;
    if (r == rows) continue;
    std::swap(a[r], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const i128 p = a[rank][c], q = a[i][c];
      i128 g = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        a[i][j] = a[i][j] * p - q * a[rank][j];
        g = gcd128(g, a[i][j]);
      }
      if (g > 1)
        for (auto& x : a[i]) x /= g;
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod(const IntMatrix& b, std::uint64_t p) {
  const std::size_t rows = b.rows(), cols = b.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  const auto sp = static_cast<std::int64_t>(p);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<std::uint64_t>(((b(i, j) % sp) + sp) % sp);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t r = rank;
    while (r < rows && a[r][c] == 0) ++r;
    if (r == rows) continue;
    std::swap(a[r], a[rank]);
    const std::uint64_t inv = pow_mod(a[rank][c], p - 2, p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const auto factor = static_cast<std::uint64_t>((unsigned __int128)a[i][c] * inv % p);
      for (std::size_t j = c; j < cols; ++j) {
        const auto sub = static_cast<std::uint64_t>((unsigned __int128)factor * a[rank][j] % p);
        a[i][j] = (a[i][j] + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

void require_matching_size(const IntMatrix& b) {
  if (b.rows() != b.cols()) throw InputError("matching oracle: matrix is not square");
  if (b.rows() > kMaxMatchingSize) throw InputError("matching oracle: refusing n > 14");
}

// Rows are assigned in order; `inversions` counts pairs out of order so far.
void match(const IntMatrix& b, std::size_t row, std::vector<bool>& used, i128 weight, std::size_t inversions, bool signed_sum,
           i128& total) {
  const std::size_t n = b.rows();
  if (row == n) {
    total += (signed_sum && inversions % 2 == 1) ? -weight : weight;
    return;
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (used[c] || b(row, c) == 0) continue;
    std::size_t later = 0;  // already-used columns to the right of c
    for (std::size_t d = c + 1; d < n; ++d)
      if (used[d]) ++later;
    used[c] = true;
    match(b, row + 1, used, weight * b(row, c), inversions + later, signed_sum, total);
    used[c] = false;
  }
}

}  // namespace

std::int64_t det_oracle(const IntMatrix& b) {
  if (b.rows() != b.cols()) throw InputError("det_oracle: matrix is not square");
  const std::size_t n = b.rows();
  if (n == 0) return 1;
  auto a = widen(b);
  i128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[r], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return narrow(sign * a[n - 1][n - 1]);
}

std::size_t rank_oracle(const IntMatrix& b, std::uint64_t modulus) {
  if (modulus == 0) return rank_rational(b);
  if (!is_prime(modulus)) throw InputError("rank_oracle: modulus must be 0 or a prime");
  return rank_mod(b, modulus);
}

std::int64_t signed_matchings(const IntMatrix& b) {
  require_matching_size(b);
  std::vector<bool> used(b.cols(), false);
  i128 total = 0;
  match(b, 0, used, 1, 0, true, total);
  return narrow(total);
}

std::int64_t count_matchings(const IntMatrix& b) {
  require_matching_size(b);
  std::vector<bool> used(b.cols(), false);
  i128 total = 0;
  match(b, 0, used, 1, 0, false, total);
  return narrow(total);
}

bool SnfReport::all_ones() const {
  return std::all_of(factors.begin(), factors.end(), [](std::int64_t d) { return d == 1; });
}

SnfReport smith_normal_form(const IntMatrix& b) {
  auto a = widen(b);
  const std::size_t rows = b.rows(), cols = b.cols();
  SnfReport report;

  auto smallest = [&](std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (!found || abs128(a[i][j]) < abs128(a[pi][pj]))) {
          pi = i;
          pj = j;
          found = true;
        }
    return found;
  };
  auto move_to_pivot = [&](std::size_t t, std::size_t i, std::size_t j) {
    std::swap(a[t], a[i]);
    for (auto& row : a) std::swap(row[t], row[j]);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pi = t, pj = t;
    if (!smallest(t, pi, pj)) break;
    move_to_pivot(t, pi, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const i128 q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const i128 q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A remainder is smaller than the pivot; bring the smallest one in.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < rows; ++i)
          if (a[i][t] != 0 && abs128(a[i][t]) < abs128(a[bi][bj])) bi = i, bj = t;
        for (std::size_t j = t; j < cols; ++j)
          if (a[t][j] != 0 && abs128(a[t][j]) < abs128(a[bi][bj])) bi = t, bj = j;
        move_to_pivot(t, bi, bj);
        continue;
      }
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    report.factors.push_back(narrow(abs128(a[t][t])));
  }
  return report;
}

bool rationally_solvable(const IntMatrix& b, const std::vector<std::int64_t>& v) {
  if (v.size() != b.rows()) throw InputError("rationally_solvable: right-hand side has the wrong length");
  IntMatrix augmented(b.rows(), b.cols() + 1);
  augmented.set_block(0, 0, b);
  for (std::size_t i = 0; i < b.rows(); ++i) augmented(i, b.cols()) = v[i];
  return rank_oracle(b) == rank_oracle(augmented);
}

std::int64_t det_cofactor(const IntMatrix& b) {
  if (b.rows() != b.cols()) throw InputError("det_cofactor: matrix is not square");
  const std::size_t n = b.rows();
  if (n == 0) return 1;
  if (n == 1) return b(0, 0);
  std::int64_t det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (b(0, j) == 0) continue;
    std::vector<std::size_t> keep_rows, keep_cols;
    for (std::size_t i = 1; i < n; ++i) keep_rows.push_back(i);
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) keep_cols.push_back(c);
    const std::int64_t minor = det_cofactor(b.select(keep_rows, keep_cols));
    det += (j % 2 == 0 ? 1 : -1) * b(0, j) * minor;
  }
  return det;
}

}  // namespace quadfactor
