#include <doctest.h>

#include <sstream>

#include "quadfactor/int_matrix.hpp"

using quadfactor::IntMatrix;

TEST_CASE("identity and defective identity") {
  CHECK(IntMatrix::identity(3) == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(IntMatrix::defective_identity(2, 3) == IntMatrix{{1, 0, 0}, {0, 1, 0}});
  CHECK(IntMatrix::defective_identity(3, 1) == IntMatrix{{1}, {0}, {0}});
  const auto e = IntMatrix::defective_identity(0, 4);
  CHECK(e.rows() == 0);
  CHECK(e.cols() == 4);
}

TEST_CASE("products with empty shapes") {
  const IntMatrix a(3, 0), b(0, 2);
  const IntMatrix p = a * b;
  CHECK(p == IntMatrix(3, 2));
  CHECK((b * IntMatrix(2, 5)).rows() == 0);
  CHECK((IntMatrix(2, 0) * IntMatrix(0, 0)).cols() == 0);
}

TEST_CASE("arithmetic") {
  const IntMatrix a{{1, 2}, {3, 4}}, b{{0, 1}, {1, 0}};
  CHECK(a * b == IntMatrix{{2, 1}, {4, 3}});
  CHECK(a + b == IntMatrix{{1, 3}, {4, 4}});
  CHECK(a - b == IntMatrix{{1, 1}, {2, 4}});
  CHECK(-a == IntMatrix{{-1, -2}, {-3, -4}});
  CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
  CHECK(a.apply(std::vector<std::int64_t>{1, -1}) == std::vector<std::int64_t>{-1, -1});
  CHECK_THROWS(a * IntMatrix(3, 1));
}

TEST_CASE("blocks and selection") {
  const IntMatrix a{{1, 2, 3}, {4, 5, 6}};
  CHECK(a.block(0, 1, 2, 2) == IntMatrix{{2, 3}, {5, 6}});
  CHECK(a.block(1, 0, 0, 3).rows() == 0);
  const std::vector<std::size_t> rows{1, 0}, cols{2, 0};
  CHECK(a.select(rows, cols) == IntMatrix{{6, 4}, {3, 1}});
  IntMatrix m(3, 3);
  m.set_block(1, 1, IntMatrix{{7, 8}, {9, 10}});
  CHECK(m == IntMatrix{{0, 0, 0}, {0, 7, 8}, {0, 9, 10}});
}

TEST_CASE("block diagonal keeps empty blocks") {
  const std::vector<IntMatrix> blocks{IntMatrix{{1}}, IntMatrix(0, 2), IntMatrix{{5, 6}}};
  CHECK(quadfactor::block_diagonal(blocks) == IntMatrix{{1, 0, 0, 0, 0}, {0, 0, 0, 5, 6}});
  CHECK(quadfactor::block_diagonal(IntMatrix(1, 0), IntMatrix{{2}}) == IntMatrix{{0}, {2}});
}

TEST_CASE("predicates") {
  CHECK(IntMatrix{{1, 0}, {-1, 1}}.is_lower_triangular());
  CHECK_FALSE(IntMatrix{{1, 1}, {0, 1}}.is_lower_triangular());
  CHECK(IntMatrix{{1, 1}, {0, 1}}.is_upper_triangular());
  CHECK(IntMatrix{{1, -1}, {0, 0}}.entries_unit_bounded());
  CHECK_FALSE(IntMatrix{{2}}.entries_unit_bounded());
  CHECK(IntMatrix{{0, 3}, {-4, 0}}.max_abs() == 4);
  CHECK(IntMatrix{{0, 3}, {-4, 0}}.count_nonzero() == 2);
}

TEST_CASE("printing aligns columns") {
  std::ostringstream os;
  os << IntMatrix{{1, -1}, {0, 10}};
  CHECK(os.str() == " 1 -1\n 0 10\n");
}
