#include "quadfactor/factorization.hpp"

#include <algorithm>
#include <set>

namespace quadfactor {

namespace {

IntMatrix sign_matrix(const std::vector<std::int64_t>& signs) { return IntMatrix::diagonal(signs); }

bool is_permutation(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

// [[a, 0], [c, d]]
IntMatrix lower_blocks(const IntMatrix& a, const IntMatrix& c, const IntMatrix& d) {
  IntMatrix m(a.rows() + d.rows(), a.cols() + d.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, c);
  m.set_block(a.rows(), a.cols(), d);
  return m;
}

// [[a, b], [0, d]]
IntMatrix upper_blocks(const IntMatrix& a, const IntMatrix& b, const IntMatrix& d) {
  IntMatrix m(a.rows() + d.rows(), a.cols() + d.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  m.set_block(a.rows(), a.cols(), d);
  return m;
}

}  // namespace

BlockFactors block_ldu(const IntMatrix& m, std::size_t rows, std::size_t cols, const IntMatrix& n, BlockVariant variant) {
  if (rows > m.rows() || cols > m.cols()) throw InputError("block_ldu: split outside the matrix");
  const std::size_t rest_rows = m.rows() - rows, rest_cols = m.cols() - cols;
  const IntMatrix m11 = m.block(0, 0, rows, cols);
  const IntMatrix m12 = m.block(0, cols, rows, rest_cols);
  const IntMatrix m21 = m.block(rows, 0, rest_rows, cols);
  const IntMatrix m22 = m.block(rows, cols, rest_rows, rest_cols);

  BlockFactors f;
  if (variant == BlockVariant::right) {
    if (cols > rows) throw InputError("block_ldu: right variant needs n' <= n");
    if (n.rows() != cols || n.cols() != rest_cols) throw InputError("block_ldu: N has the wrong shape");
    if (m11 * n != m12) throw InputError("block_ldu: M11 N != M12");
    const IntMatrix pad = IntMatrix::defective_identity(cols, rows);
    f.lower = lower_blocks(m11 * pad, m21 * pad, IntMatrix::identity(rest_rows));
    f.middle = block_diagonal(IntMatrix::defective_identity(rows, cols), m22 - m21 * n);
    f.upper = upper_blocks(IntMatrix::identity(cols), n, IntMatrix::identity(rest_cols));
  } else {
    if (cols < rows) throw InputError("block_ldu: left variant needs n' >= n");
    if (n.rows() != rest_rows || n.cols() != rows) throw InputError("block_ldu: N has the wrong shape");
    if (n * m11 != m21) throw InputError("block_ldu: N M11 != M21");
    const IntMatrix pad = IntMatrix::defective_identity(cols, rows);
    f.lower = lower_blocks(IntMatrix::identity(rows), n, IntMatrix::identity(rest_rows));
    f.middle = block_diagonal(IntMatrix::defective_identity(rows, cols), m22 - n * m12);
    f.upper = upper_blocks(pad * m11, pad * m12, IntMatrix::identity(rest_cols));
  }
  check_invariant(f.lower * f.middle * f.upper == m, "block_ldu: product does not reproduce M");
  return f;
}

IntMatrix StepFactors::center() const {
  return block_diagonal(IntMatrix::defective_identity(removed_black, removed_white), reduced);
}

Bicoloring induced_coloring(const QuadDisk& component, const Bicoloring& parent, std::span<const SquareId> originals) {
  std::vector<Color> colors;
  colors.reserve(originals.size());
  for (SquareId s : originals) colors.push_back(parent.color(s));
  return Bicoloring::from_colors(component, std::move(colors));
}

StepFactors step_factor(const QuadDisk& disk, const Bicoloring& coloring, const SurgeryPlan& plan,
                        const SurgeryResult& surgery) {
  StepFactors st;
  const Color row_color = coloring.color(plan.diagonal.squares.front());
  const Color col_color = opposite(row_color);
  st.diagonal_color = row_color;
  st.k = plan.k;
  st.k_prime = plan.k_prime;
  for (SquareId s : plan.diagonal.squares) check_invariant(coloring.color(s) == row_color, "step: diagonal is not monochromatic");
  for (SquareId s : plan.left_squares) check_invariant(coloring.color(s) == col_color, "step: left square has the diagonal colour");

  // Step basis: excised squares in diagonal order, then the surgery output
  // component by component in each component's own labelling.
  std::vector<SquareId> rows(plan.diagonal.squares), cols(plan.left_squares);
  std::vector<IntMatrix> reduced_blocks;
  for (std::size_t c = 0; c < surgery.components.size(); ++c) {
    const auto& originals = surgery.component_squares[c];
    const auto sub = induced_coloring(surgery.components[c], coloring, originals);
    for (SquareId local : sub.squares_of(row_color)) rows.push_back(originals[local]);
    for (SquareId local : sub.squares_of(col_color)) cols.push_back(originals[local]);
    const IntMatrix b = black_to_white_matrix(surgery.components[c], sub);
    reduced_blocks.push_back(row_color == Color::black ? b : b.transpose());
  }
  const IntMatrix reduced_working = block_diagonal(reduced_blocks);

  const std::size_t k = plan.k, kp = plan.k_prime;
  const std::size_t m_rows = rows.size() - k, m_cols = cols.size() - kp;
  check_invariant(reduced_working.rows() == m_rows && reduced_working.cols() == m_cols, "step: surgery output has the wrong size");

  std::set<std::pair<SquareId, SquareId>> adjacent;
  for (auto [a, b] : disk.adjacent_pairs()) {
    adjacent.emplace(a, b);
    adjacent.emplace(b, a);
  }
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = adjacent.count({rows[i], cols[j]}) ? 1 : 0;

  st.b11 = m.block(0, 0, k, kp);
  st.b12 = m.block(0, kp, k, m_cols);
  st.b21 = m.block(k, 0, m_rows, kp);
  st.b22 = m.block(k, kp, m_rows, m_cols);

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < kp; ++j)
      check_invariant(st.b11(i, j) == ((j == i || j + 1 == i) ? 1 : 0), "step: B11 is not lower bidiagonal");

  for (std::size_t i = k; i < rows.size(); ++i) st.row_signs.push_back(plan.region[rows[i]] == Region::right ? -1 : 1);
  for (std::size_t j = kp; j < cols.size(); ++j) st.col_signs.push_back(plan.region[cols[j]] == Region::right ? -1 : 1);

  st.n = IntMatrix(kp, m_cols);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const auto it = std::find(cols.begin() + static_cast<std::ptrdiff_t>(kp), cols.end(), plan.right_squares[i]);
    check_invariant(it != cols.end(), "step: right square missing from the surgery output");
    const auto j = static_cast<std::size_t>(it - cols.begin()) - kp;
    st.right_columns.push_back(j);
    st.n(i, j) = -1;
  }
  check_invariant(st.b11 * st.n == -st.b12, "step: B11 N != -B12");
  check_invariant(st.b12 * sign_matrix(st.col_signs) == -st.b12, "step: sign rule does not negate B12");
  check_invariant(st.b22 - st.b21 * st.n == reduced_working, "step: B22 - B21 N differs from the surgery output");

  // Working-orientation factors.
  IntMatrix l_step = st.b11 * IntMatrix::defective_identity(kp, k);
  if (kp < k) {
    l_step(k - 1, k - 1) = 1;
    check_invariant(l_step * IntMatrix::defective_identity(k, kp) == st.b11, "step: (k,k) edit changed L I");
  }
  const IntMatrix x_block = sign_matrix(st.row_signs) * st.b21 * IntMatrix::defective_identity(kp, k);
  const IntMatrix y_block = st.n * sign_matrix(st.col_signs);
  const IntMatrix lower_w = lower_blocks(l_step, x_block, sign_matrix(st.row_signs));
  const IntMatrix upper_w = upper_blocks(IntMatrix::identity(kp), y_block, sign_matrix(st.col_signs));

  std::vector<std::size_t> row_labels, col_labels;
  for (SquareId s : rows) row_labels.push_back(coloring.label(s));
  for (SquareId s : cols) col_labels.push_back(coloring.label(s));
  if (row_color == Color::black) {
    st.lower = lower_w;
    st.upper = upper_w;
    st.reduced = reduced_working;
    st.black_order = std::move(row_labels);
    st.white_order = std::move(col_labels);
    st.removed_black = k;
    st.removed_white = kp;
  } else {
    st.lower = upper_w.transpose();
    st.upper = lower_w.transpose();
    st.reduced = reduced_working.transpose();
    st.black_order = std::move(col_labels);
    st.white_order = std::move(row_labels);
    st.removed_black = kp;
    st.removed_white = k;
  }
  check_invariant(st.lower.entries_unit_bounded() && st.upper.entries_unit_bounded(), "step: factor entry outside {-1,0,1}");
  const IntMatrix b = black_to_white_matrix(disk, coloring).select(st.black_order, st.white_order);
  check_invariant(st.lower * st.center() * st.upper == b, "step: L (I + B') U does not reproduce B");
  return st;
}

LDUFactorization ldu(const QuadDisk& disk, const Bicoloring& coloring, bool verify) {
  const bool board = is_board(disk);
  const Diagonal diagonal = select_diagonal(disk, board);
  const SurgeryPlan plan = plan_surgery(disk, diagonal);
  const SurgeryResult surgery = cut_and_paste(disk, plan);
  const StepFactors st = step_factor(disk, coloring, plan, surgery);

  // Factor the surgery output, one block per component.
  std::vector<IntMatrix> lowers, defectives, uppers;
  std::vector<std::size_t> sub_black, sub_white;
  for (std::size_t c = 0; c < surgery.components.size(); ++c) {
    const auto sub_coloring = induced_coloring(surgery.components[c], coloring, surgery.component_squares[c]);
    const auto sub = ldu(surgery.components[c], sub_coloring, verify);
    const std::size_t black_offset = sub_black.size(), white_offset = sub_white.size();
    for (auto i : sub.black_order) sub_black.push_back(black_offset + i);
    for (auto j : sub.white_order) sub_white.push_back(white_offset + j);
    lowers.push_back(sub.lower);
    defectives.push_back(sub.defective);
    uppers.push_back(sub.upper);
  }
  const IntMatrix sub_lower = block_diagonal(lowers);
  const IntMatrix sub_defective = block_diagonal(defectives);
  const IntMatrix sub_upper = block_diagonal(uppers);

  const std::size_t rb = st.removed_black, rw = st.removed_white;
  const std::size_t mb = sub_black.size(), mw = sub_white.size();

  // Reorder the rows of X / S_b' and the columns of Y / S_w' to the
  // component labelling, then absorb the component factors.
  IntMatrix x(mb, rb), sb(mb, mb), y(rw, mw), sw(mw, mw);
  for (std::size_t i = 0; i < mb; ++i) {
    for (std::size_t j = 0; j < rb; ++j) x(i, j) = st.lower(rb + sub_black[i], j);
    sb(i, i) = st.lower(rb + sub_black[i], rb + sub_black[i]);
  }
  for (std::size_t j = 0; j < mw; ++j) {
    for (std::size_t i = 0; i < rw; ++i) y(i, j) = st.upper(i, rw + sub_white[j]);
    sw(j, j) = st.upper(rw + sub_white[j], rw + sub_white[j]);
  }

  LDUFactorization f;
  f.lower = lower_blocks(st.lower.block(0, 0, rb, rb), x, sb * sub_lower);
  f.defective = block_diagonal(IntMatrix::defective_identity(rb, rw), sub_defective);
  f.upper = upper_blocks(st.upper.block(0, 0, rw, rw), y, sub_upper * sw);
  f.black_order.assign(st.black_order.begin(), st.black_order.begin() + static_cast<std::ptrdiff_t>(rb));
  for (auto i : sub_black) f.black_order.push_back(st.black_order[rb + i]);
  f.white_order.assign(st.white_order.begin(), st.white_order.begin() + static_cast<std::ptrdiff_t>(rw));
  for (auto j : sub_white) f.white_order.push_back(st.white_order[rw + j]);

  if (verify) {
    const auto result = verify_factorization(black_to_white_matrix(disk, coloring), f);
    if (!result) throw InvariantError(std::string("ldu: assembled factorization fails: ") + to_string(result.failure));
  }
  return f;
}

LDUFactorization ldu(const QuadDisk& disk, const LduOptions& options) {
  return ldu(disk, bicolor(disk, options.first), options.verify);
}

const char* to_string(VerifyFailure f) {
  switch (f) {
    case VerifyFailure::none: return "ok";
    case VerifyFailure::shape: return "shape";
    case VerifyFailure::permutation: return "permutation";
    case VerifyFailure::entry_bound: return "entry-bound";
    case VerifyFailure::lower_not_triangular: return "lower-not-triangular";
    case VerifyFailure::upper_not_triangular: return "upper-not-triangular";
    case VerifyFailure::diagonal_not_unit: return "diagonal-not-unit";
    case VerifyFailure::not_defective_identity: return "not-defective-identity";
    case VerifyFailure::product_mismatch: return "product-mismatch";
  }
  return "unknown";
}

VerifyResult verify_factorization(const IntMatrix& b, const LDUFactorization& f) {
  auto fail = [](VerifyFailure why) { return VerifyResult{why}; };
  const std::size_t nb = b.rows(), nw = b.cols();
  if (f.lower.rows() != nb || f.lower.cols() != nb || f.defective.rows() != nb || f.defective.cols() != nw ||
      f.upper.rows() != nw || f.upper.cols() != nw || f.black_order.size() != nb || f.white_order.size() != nw)
    return fail(VerifyFailure::shape);
  if (!is_permutation(f.black_order) || !is_permutation(f.white_order)) return fail(VerifyFailure::permutation);
  if (!f.lower.entries_unit_bounded() || !f.upper.entries_unit_bounded() || !f.defective.entries_unit_bounded())
    return fail(VerifyFailure::entry_bound);
  if (!f.lower.is_lower_triangular()) return fail(VerifyFailure::lower_not_triangular);
  if (!f.upper.is_upper_triangular()) return fail(VerifyFailure::upper_not_triangular);
  for (std::size_t i = 0; i < nb; ++i)
    if (f.lower(i, i) != 1 && f.lower(i, i) != -1) return fail(VerifyFailure::diagonal_not_unit);
  for (std::size_t j = 0; j < nw; ++j)
    if (f.upper(j, j) != 1 && f.upper(j, j) != -1) return fail(VerifyFailure::diagonal_not_unit);
  if (!is_defective_identity(f.defective)) return fail(VerifyFailure::not_defective_identity);
  if (f.lower * f.defective * f.upper != b.select(f.black_order, f.white_order)) return fail(VerifyFailure::product_mismatch);
  return {};
}

bool is_defective_identity(const IntMatrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 1) {
        units.emplace_back(i, j);
      } else if (m(i, j) != 0) {
        return false;
      }
    }
  for (std::size_t a = 0; a < units.size(); ++a)
    for (std::size_t b = a + 1; b < units.size(); ++b) {
      const auto [i, j] = units[a];
      const auto [i2, j2] = units[b];
      const bool ordered = (i < i2 && j < j2) || (i > i2 && j > j2);
      if (!ordered) return false;
    }
  return true;
}

}  // namespace quadfactor
