#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "quadfactor/errors.hpp"
#include "quadfactor/int_matrix.hpp"

namespace quadfactor {

using VertexId = std::uint32_t;
using SquareId = std::uint32_t;

/// Vertices of one square in cyclic (counterclockwise once validated) order.
using SquareVertices = std::array<VertexId, 4>;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

enum class DiskErrorKind {
  empty,
  degenerate_square,
  unused_vertex,
  edge_overused,
  non_orientable,
  interior_degree,
  pinched_boundary,
  disconnected,
  boundary_not_cycle,
  euler,
  hole,
};

const char* to_string(DiskErrorKind kind);

/// Rejection of a square complex (or board) that is not a quadriculated disk.
class DiskError : public InputError {
 public:
  DiskError(DiskErrorKind kind, const std::string& detail);
  DiskErrorKind kind() const { return kind_; }

 private:
  DiskErrorKind kind_;
};

/// Element counts of a disk. `boundary_by_squares[r]` is V_r, the number of
/// boundary vertices lying in exactly r squares (index 0 unused).
struct DiskCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t interior_edges = 0;
  std::size_t boundary_edges = 0;
  std::size_t squares = 0;
  std::size_t interior_vertices = 0;
  std::vector<std::size_t> boundary_by_squares;

  std::size_t corners() const { return boundary_by_squares.size() > 1 ? boundary_by_squares[1] : 0; }
  /// Sum over r >= 3 of (r - 2) V_r.
  std::size_t excess_boundary_degree() const;
};

/// A validated quadriculated disk: finitely many squares glued along sides,
/// every interior vertex in exactly four squares, boundary a single simple
/// cycle, Euler characteristic one. Square vertex tuples are stored
/// counterclockwise in a single global orientation, fixed by square 0.
/// Immutable once built.
class QuadDisk {
 public:
  /// Validates and orients. Throws DiskError on any violation.
  static QuadDisk build(std::vector<SquareVertices> squares, std::vector<std::string> vertex_names);

  std::size_t square_count() const { return squares_.size(); }
  std::size_t vertex_count() const { return names_.size(); }
  const SquareVertices& square(SquareId s) const { return squares_[s]; }
  std::span<const SquareVertices> squares() const { return squares_; }
  const std::string& vertex_name(VertexId v) const { return names_[v]; }
  std::span<const std::string> vertex_names() const { return names_; }

  std::span<const SquareId> squares_at(VertexId v) const { return vertex_squares_[v]; }
  bool is_boundary_vertex(VertexId v) const { return boundary_vertex_[v]; }
  bool is_corner(VertexId v) const { return boundary_vertex_[v] && vertex_squares_[v].size() == 1; }

  /// Position of v within the tuple of s, or -1.
  int position(SquareId s, VertexId v) const;
  /// True when {a, b} is an edge lying in exactly one square.
  bool is_boundary_edge(VertexId a, VertexId b) const;
  bool has_edge(VertexId a, VertexId b) const;
  /// The square other than s containing the edge {a, b}, if any.
  std::optional<SquareId> across(SquareId s, VertexId a, VertexId b) const;
  /// Neighbour across side i, the edge (q[i], q[i+1]).
  std::optional<SquareId> neighbor(SquareId s, int side) const;

  /// Boundary vertices in counterclockwise order (disk on the left),
  /// starting from the smallest boundary vertex id.
  std::span<const VertexId> boundary_cycle() const { return boundary_cycle_; }
  /// Index of v in boundary_cycle(), or -1 for interior vertices.
  int boundary_position(VertexId v) const { return boundary_index_[v]; }

  const DiskCounts& counts() const { return counts_; }

  /// Edge-adjacent square pairs (s < t), one per interior edge.
  std::vector<std::pair<SquareId, SquareId>> adjacent_pairs() const;

 private:
  struct Edge {
    VertexId a = 0;
    VertexId b = 0;
    std::array<SquareId, 2> squares{};
    std::uint8_t count = 0;
  };

  QuadDisk() = default;
  const Edge* find_edge(VertexId a, VertexId b) const;

  std::vector<SquareVertices> squares_;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::array<std::uint32_t, 4>> square_edges_;
  std::unordered_map<std::uint64_t, std::uint32_t> edge_lookup_;
  std::vector<std::vector<SquareId>> vertex_squares_;
  std::vector<bool> boundary_vertex_;
  std::vector<VertexId> boundary_cycle_;
  std::vector<int> boundary_index_;
  DiskCounts counts_;
};

/// Builds a disk from squares given as vertex-token 4-tuples. Vertex ids are
/// assigned in order of first appearance. Tuples are reoriented as needed so
/// that all agree with square 0.
QuadDisk build_complex(const std::vector<std::array<std::string, 4>>& squares);

enum class Color : std::uint8_t { black, white };

inline Color opposite(Color c) { return c == Color::black ? Color::white : Color::black; }

/// Proper two-colouring of the squares with per-colour labels assigned in
/// square-index order.
class Bicoloring {
 public:
  /// Throws InputError if the colouring is not proper.
  static Bicoloring from_colors(const QuadDisk& disk, std::vector<Color> colors);

  Color color(SquareId s) const { return colors_[s]; }
  std::span<const Color> colors() const { return colors_; }
  std::size_t black_count() const { return black_.size(); }
  std::size_t white_count() const { return white_.size(); }
  std::size_t count(Color c) const { return c == Color::black ? black_.size() : white_.size(); }
  /// Label of s among squares of its own colour (0-based).
  std::size_t label(SquareId s) const { return labels_[s]; }
  std::span<const SquareId> squares_of(Color c) const { return c == Color::black ? black_ : white_; }

 private:
  std::vector<Color> colors_;
  std::vector<std::size_t> labels_;
  std::vector<SquareId> black_;
  std::vector<SquareId> white_;
};

/// Breadth-first colouring; square 0 gets `first`.
Bicoloring bicolor(const QuadDisk& disk, Color first = Color::black);

/// b x w matrix with a one wherever the i-th black and j-th white squares
/// share a side.
IntMatrix black_to_white_matrix(const QuadDisk& disk, const Bicoloring& coloring);

struct DevelopSeed {
  VertexId from = 0;  // mapped to (0, 0)
  VertexId to = 0;    // mapped to (1, 0)
};

struct DevelopOptions {
  std::optional<DevelopSeed> seed;
  /// When set, squares are extended in a pseudo-random order drawn from this seed.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Orientation-preserving placement of every square onto a unit lattice
/// square. placement(s)[i] is the image of square(s)[i].
class DevelopingMap {
 public:
  DevelopingMap(std::vector<std::array<Point, 4>> placements, std::vector<std::vector<Point>> vertex_images);

  const std::array<Point, 4>& placement(SquareId s) const { return placements_[s]; }
  std::span<const std::array<Point, 4>> placements() const { return placements_; }
  /// Lower-left lattice corner of the image of s.
  Point cell(SquareId s) const;
  /// Distinct images of v, sorted.
  std::span<const Point> images(VertexId v) const { return vertex_images_[v]; }
  /// The image of v when it is unique; throws otherwise.
  Point image(VertexId v) const;

 private:
  std::vector<std::array<Point, 4>> placements_;
  std::vector<std::vector<Point>> vertex_images_;
};

/// Throws InputError if the seed is not an edge of the disk.
DevelopingMap develop(const QuadDisk& disk, const DevelopOptions& options = {});

/// Developing map is injective: square images pairwise distinct and every
/// vertex has a single image not shared with any other vertex.
bool is_board(const QuadDisk& disk);
bool is_board(const QuadDisk& disk, const DevelopingMap& map);

}  // namespace quadfactor
