#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quadfactor/disk.hpp"

namespace quadfactor {

enum class DiagonalKind { bad, balanced, unbalanced };

const char* to_string(DiagonalKind kind);

/// Side of a diagonal, seen walking from the corner into the disk with the
/// disk's counterclockwise orientation.
enum class Side { left, right };

inline Side other(Side s) { return s == Side::left ? Side::right : Side::left; }
const char* to_string(Side side);

/// A diagonal v_0 ... v_k through squares s_1 ... s_k. Square s_i carries
/// the counterclockwise labels v_{i-1}, right[i-1], v_i, left[i-1].
struct Diagonal {
  std::vector<VertexId> vertices;
  std::vector<SquareId> squares;
  std::vector<VertexId> right;
  std::vector<VertexId> left;
  DiagonalKind kind = DiagonalKind::bad;
  /// Boundary-arc monotonicity, only computed on boards.
  bool monotone_right = false;
  bool monotone_left = false;

  std::size_t k() const { return squares.size(); }
  VertexId corner() const { return vertices.front(); }
  VertexId end() const { return vertices.back(); }
  bool good() const { return kind != DiagonalKind::bad; }
  bool excellent() const { return monotone_right || monotone_left; }
  /// Side vertex of s_i (1-based i) on the given side.
  VertexId side_vertex(Side side, std::size_t i) const { return side == Side::left ? left[i - 1] : right[i - 1]; }
};

/// Boundary vertices lying in a single square, in vertex-id order.
std::vector<VertexId> corners(const QuadDisk& disk);

/// The unique diagonal starting at `corner`, classified. Throws InputError if
/// `corner` is not a corner.
Diagonal trace_diagonal(const QuadDisk& disk, VertexId corner);

/// Counts the sides of s_k at v_k that lie on the boundary: 0 bad,
/// 1 balanced, 2 unbalanced.
DiagonalKind classify(const QuadDisk& disk, const Diagonal& diagonal);

/// One diagonal per corner, in corner order.
std::vector<Diagonal> all_diagonals(const QuadDisk& disk);

/// Good diagonals in corner order. There are always at least four; fewer
/// raises InvariantError.
std::vector<Diagonal> good_diagonals(const QuadDisk& disk);

/// Boundary vertices from v_0 to v_k along the arc on the given side.
std::vector<VertexId> boundary_arc(const QuadDisk& disk, const Diagonal& diagonal, Side side);

/// Fills the monotone_* flags from lattice coordinates of a board.
void mark_monotone_arcs(const QuadDisk& disk, const DevelopingMap& map, Diagonal& diagonal);

/// Diagonals with a boundary arc monotone in both coordinates. Never empty on
/// a board. Throws InputError when `disk` is not a board.
std::vector<Diagonal> excellent_diagonals(const QuadDisk& disk);

struct MinimalArc {
  Diagonal diagonal;
  Side side;
};

/// Diagonals whose arc on `side` strictly contains no other diagonal's arc.
/// Independent route to excellent diagonals on boards.
std::vector<MinimalArc> minimal_arc_diagonals(const QuadDisk& disk);

/// Diagonal used by cut and paste: excellent ones on boards, good ones
/// otherwise; smallest (k, corner id).
Diagonal select_diagonal(const QuadDisk& disk);
Diagonal select_diagonal(const QuadDisk& disk, bool board);

}  // namespace quadfactor
