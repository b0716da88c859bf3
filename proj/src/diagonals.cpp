#include "quadfactor/diagonals.hpp"

#include <algorithm>

namespace quadfactor {

namespace {

bool weakly_monotone(const std::vector<std::int64_t>& xs) {
  bool up = true, down = true;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    up = up && xs[i] >= xs[i - 1];
    down = down && xs[i] <= xs[i - 1];
  }
  return up || down;
}

// Boundary edges (by start position in the boundary cycle) covered by an arc.
std::vector<bool> arc_edges(const QuadDisk& disk, const Diagonal& d, Side side) {
  const auto n = disk.boundary_cycle().size();
  std::vector<bool> covered(n, false);
  auto from = static_cast<std::size_t>(disk.boundary_position(side == Side::right ? d.corner() : d.end()));
  const auto to = static_cast<std::size_t>(disk.boundary_position(side == Side::right ? d.end() : d.corner()));
  while (from != to) {
    covered[from] = true;
    from = (from + 1) % n;
  }
  return covered;
}

bool strict_subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
    if (b[i] && !a[i]) strict = true;
  }
  return strict;
}

}  // namespace

const char* to_string(DiagonalKind kind) {
  switch (kind) {
    case DiagonalKind::bad: return "bad";
    case DiagonalKind::balanced: return "good-balanced";
    case DiagonalKind::unbalanced: return "good-unbalanced";
  }
  return "unknown";
}

const char* to_string(Side side) { return side == Side::left ? "left" : "right"; }

std::vector<VertexId> corners(const QuadDisk& disk) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < disk.vertex_count(); ++v)
    if (disk.is_corner(v)) out.push_back(v);
  return out;
}

Diagonal trace_diagonal(const QuadDisk& disk, VertexId corner) {
  if (corner >= disk.vertex_count() || !disk.is_corner(corner))
    throw InputError("trace_diagonal: vertex is not a corner");
  Diagonal d;
  d.vertices.push_back(corner);
  SquareId s = disk.squares_at(corner).front();
  VertexId v = corner;
  while (true) {
    const auto& q = disk.square(s);
    const int i = disk.position(s, v);
    d.squares.push_back(s);
    d.right.push_back(q[static_cast<std::size_t>((i + 1) % 4)]);
    d.left.push_back(q[static_cast<std::size_t>((i + 3) % 4)]);
    v = q[static_cast<std::size_t>((i + 2) % 4)];
    d.vertices.push_back(v);
    if (disk.is_boundary_vertex(v)) break;
    check_invariant(d.squares.size() < disk.square_count(), "trace_diagonal: diagonal does not terminate");

    // The next square meets s only at v.
    const auto a = disk.across(s, d.right.back(), v);
    const auto b = disk.across(s, v, d.left.back());
    std::optional<SquareId> next;
    for (SquareId t : disk.squares_at(v)) {
      if (t == s || (a && t == *a) || (b && t == *b)) continue;
      check_invariant(!next, "trace_diagonal: ambiguous continuation");
      next = t;
    }
    check_invariant(next.has_value(), "trace_diagonal: interior vertex without opposite square");
    s = *next;
  }
  d.kind = classify(disk, d);
  return d;
}

DiagonalKind classify(const QuadDisk& disk, const Diagonal& d) {
  const VertexId vk = d.end();
  const int on_boundary = (disk.is_boundary_edge(d.right.back(), vk) ? 1 : 0) + (disk.is_boundary_edge(vk, d.left.back()) ? 1 : 0);
  switch (on_boundary) {
    case 0: return DiagonalKind::bad;
    case 1: return DiagonalKind::balanced;
    default: return DiagonalKind::unbalanced;
  }
}

std::vector<Diagonal> all_diagonals(const QuadDisk& disk) {
  std::vector<Diagonal> out;
  for (VertexId c : corners(disk)) out.push_back(trace_diagonal(disk, c));
  return out;
}

std::vector<Diagonal> good_diagonals(const QuadDisk& disk) {
  std::vector<Diagonal> out;
  for (auto& d : all_diagonals(disk))
    if (d.good()) out.push_back(std::move(d));
  check_invariant(out.size() >= 4, "disk has fewer than four good diagonals");
  return out;
}

std::vector<VertexId> boundary_arc(const QuadDisk& disk, const Diagonal& d, Side side) {
  const auto cycle = disk.boundary_cycle();
  const auto n = cycle.size();
  std::vector<VertexId> arc;
  if (side == Side::right) {
    auto p = static_cast<std::size_t>(disk.boundary_position(d.corner()));
    arc.push_back(cycle[p]);
    while (cycle[p] != d.end()) {
      p = (p + 1) % n;
      arc.push_back(cycle[p]);
    }
  } else {
    // Walk backwards from v_0 so the arc also runs from v_0 to v_k.
    auto p = static_cast<std::size_t>(disk.boundary_position(d.corner()));
    arc.push_back(cycle[p]);
    while (cycle[p] != d.end()) {
      p = (p + n - 1) % n;
      arc.push_back(cycle[p]);
    }
  }
  return arc;
}

void mark_monotone_arcs(const QuadDisk& disk, const DevelopingMap& map, Diagonal& d) {
  for (Side side : {Side::right, Side::left}) {
    std::vector<std::int64_t> xs, ys;
    for (VertexId v : boundary_arc(disk, d, side)) {
      const Point p = map.image(v);
      xs.push_back(p.x);
      ys.push_back(p.y);
    }
    const bool monotone = weakly_monotone(xs) && weakly_monotone(ys);
    (side == Side::right ? d.monotone_right : d.monotone_left) = monotone;
  }
}

std::vector<Diagonal> excellent_diagonals(const QuadDisk& disk) {
  const auto map = develop(disk);
  if (!is_board(disk, map)) throw InputError("excellent_diagonals: disk is not a board");
  std::vector<Diagonal> out;
  for (auto& d : all_diagonals(disk)) {
    mark_monotone_arcs(disk, map, d);
    if (d.excellent()) {
      check_invariant(d.good(), "excellent diagonal is not good");
      out.push_back(std::move(d));
    }
  }
  check_invariant(!out.empty(), "board without excellent diagonals");
  return out;
}

std::vector<MinimalArc> minimal_arc_diagonals(const QuadDisk& disk) {
  const auto diagonals = all_diagonals(disk);
  std::vector<std::vector<bool>> arcs;
  std::vector<std::pair<std::size_t, Side>> owner;
  for (std::size_t i = 0; i < diagonals.size(); ++i)
    for (Side side : {Side::right, Side::left}) {
      arcs.push_back(arc_edges(disk, diagonals[i], side));
      owner.emplace_back(i, side);
    }
  std::vector<MinimalArc> out;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const bool minimal = std::none_of(arcs.begin(), arcs.end(), [&](const auto& other) { return strict_subset(other, arcs[a]); });
    if (minimal) out.push_back({diagonals[owner[a].first], owner[a].second});
  }
  return out;
}

Diagonal select_diagonal(const QuadDisk& disk, bool board) {
  auto candidates = board ? excellent_diagonals(disk) : good_diagonals(disk);
  return *std::min_element(candidates.begin(), candidates.end(), [](const Diagonal& a, const Diagonal& b) {
    return a.k() != b.k() ? a.k() < b.k() : a.corner() < b.corner();
  });
}

Diagonal select_diagonal(const QuadDisk& disk) { return select_diagonal(disk, is_board(disk)); }

}  // namespace quadfactor
