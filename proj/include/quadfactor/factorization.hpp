#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "quadfactor/disk.hpp"
#include "quadfactor/int_matrix.hpp"
#include "quadfactor/surgery.hpp"

namespace quadfactor {

/// B(black_order, white_order) = lower * defective * upper, where
/// black_order[i] is the black label placed in row i and white_order[j] the
/// white label placed in column j.
struct LDUFactorization {
  std::vector<std::size_t> black_order;
  std::vector<std::size_t> white_order;
  IntMatrix lower;
  IntMatrix defective;
  IntMatrix upper;
};

/// The two readings of the block identity for
///   M = [M11 M12; M21 M22],  M11 of size n x n'.
/// `right` needs n' <= n and M11 N = M12; `left` needs n' >= n and N M11 = M21.
enum class BlockVariant { right, left };

struct BlockFactors {
  IntMatrix lower;
  IntMatrix middle;
  IntMatrix upper;
};

/// Three-factor block identity with the product checked exactly. `rows` and
/// `cols` are the top-left block sizes n and n'. Throws InputError when the
/// hypotheses fail.
BlockFactors block_ldu(const IntMatrix& m, std::size_t rows, std::size_t cols, const IntMatrix& n, BlockVariant variant);

/// One cut-and-paste step in matrix form. Blocks, signs and N live in the
/// working orientation whose rows are squares of the diagonal's colour; the
/// assembled factors are in the black-rows orientation:
///   B(black_order, white_order) = lower * center * upper,
///   center = diag(I_{b-b', w-w'}, reduced).
struct StepFactors {
  Color diagonal_color = Color::black;
  std::size_t k = 0;
  std::size_t k_prime = 0;
  IntMatrix b11, b12, b21, b22;
  std::vector<std::int64_t> row_signs;  // diagonal of S for the remaining rows
  std::vector<std::int64_t> col_signs;  // diagonal of S for the remaining columns
  IntMatrix n;
  std::vector<std::size_t> right_columns;  // j_1 .. j_{k-1}, 0-based within the remaining columns

  std::size_t removed_black = 0;
  std::size_t removed_white = 0;
  IntMatrix lower;
  IntMatrix upper;
  IntMatrix reduced;  // black-to-white matrix of the surgery output, block diagonal
  std::vector<std::size_t> black_order;
  std::vector<std::size_t> white_order;

  IntMatrix center() const;
};

/// Colouring of a surgery component inherited from the parent disk.
Bicoloring induced_coloring(const QuadDisk& component, const Bicoloring& parent, std::span<const SquareId> originals);

/// Builds and checks the step identity. Throws InvariantError if any of the
/// block relations fails.
StepFactors step_factor(const QuadDisk& disk, const Bicoloring& coloring, const SurgeryPlan& plan,
                        const SurgeryResult& surgery);

struct LduOptions {
  Color first = Color::black;
  /// Check every assembled factorization exactly on the way up.
  bool verify = true;
};

/// Recursive factorization of the black-to-white matrix with all factor
/// entries in {-1, 0, 1}.
LDUFactorization ldu(const QuadDisk& disk, const LduOptions& options = {});
LDUFactorization ldu(const QuadDisk& disk, const Bicoloring& coloring, bool verify = true);

enum class VerifyFailure {
  none,
  shape,
  permutation,
  entry_bound,
  lower_not_triangular,
  upper_not_triangular,
  diagonal_not_unit,
  not_defective_identity,
  product_mismatch,
};

const char* to_string(VerifyFailure f);

struct VerifyResult {
  VerifyFailure failure = VerifyFailure::none;
  explicit operator bool() const { return failure == VerifyFailure::none; }
};

VerifyResult verify_factorization(const IntMatrix& b, const LDUFactorization& f);

/// 0/1 entries, and any two unit entries are strictly ordered in both row and
/// column.
bool is_defective_identity(const IntMatrix& m);

}  // namespace quadfactor
