#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quadfactor/diagonals.hpp"
#include "quadfactor/disk.hpp"

namespace quadfactor {

/// Which geometric side of the diagonal is excised together with it.
enum class SidePolicy { automatic, left, right };

/// Position of a square relative to a diagonal. `left` is the excised side,
/// whichever geometric side that is; `right` squares get sign -1 in the
/// factorization step.
enum class Region : std::uint8_t { diagonal, left, right };

/// Everything cut and paste needs, in the diagonal's own vocabulary: the
/// excised side is called left regardless of its geometric side.
struct SurgeryPlan {
  Diagonal diagonal;
  Side chosen = Side::left;  // geometric side playing the role of left
  std::size_t k = 0;
  std::size_t k_prime = 0;
  std::vector<SquareId> left_squares;   // s^l_1 .. s^l_{k'}
  std::vector<SquareId> right_squares;  // s^r_1 .. s^r_{k-1}
  std::vector<VertexId> zigzag_left;       // v^l_{1/2}, v^ll_1, ..., v^l_{k-1/2}
  std::vector<VertexId> zigzag_left_plus;  // zigzag_left, then v^ll_k, v^l_{k+1/2} when balanced
  std::vector<VertexId> zigzag_right;      // v^r_{1/2}, v_1, ..., v^r_{k-1/2}
  std::vector<Region> region;              // per square of the disk

  bool balanced() const { return diagonal.kind == DiagonalKind::balanced; }
  /// Excised squares: s_1 .. s_k, then s^l_1 .. s^l_{k'}.
  std::vector<SquareId> removed() const;
};

/// Throws InputError for a bad diagonal or a side policy that contradicts a
/// balanced diagonal.
SurgeryPlan plan_surgery(const QuadDisk& disk, const Diagonal& diagonal, SidePolicy policy = SidePolicy::automatic);

struct ComponentSplit {
  std::vector<QuadDisk> disks;
  /// members[c][local square] = index into the input square list.
  std::vector<std::vector<std::size_t>> members;
};

/// Splits a square list into edge-connected pieces; a vertex shared by
/// several pieces becomes one vertex per piece. Pieces are ordered by their
/// smallest input index. Throws DiskError if a piece is not a disk.
ComponentSplit split_components(std::span<const SquareVertices> squares, std::span<const std::string> vertex_names);

struct SurgeryResult {
  std::vector<QuadDisk> components;
  std::vector<SquareId> removed_diagonal;  // s_1 .. s_k
  std::vector<SquareId> removed_left;      // s^l_1 .. s^l_{k'}
  /// Original square -> (component, local square) for survivors.
  std::vector<std::optional<std::pair<std::size_t, SquareId>>> relabel;
  /// component_squares[c][local] = original square.
  std::vector<std::vector<SquareId>> component_squares;
  /// Applied identification (zig-zag left vertex, zig-zag right vertex).
  std::vector<std::pair<VertexId, VertexId>> identification;

  std::size_t remaining_squares() const;
  std::vector<SquareId> removed_of(const Bicoloring& coloring, Color c) const;
};

/// Excises the diagonal and its left flank, glues the left zig-zag onto the
/// right one and splits into disks. The input disk is not touched.
SurgeryResult cut_and_paste(const QuadDisk& disk, const SurgeryPlan& plan);

/// Board surgery realised in the plane: left region fixed, right region
/// translated onto the left zig-zag. Succeeds iff every component is then a
/// board placed inside the original cell set, with components disjoint.
/// On failure `why` (when given) receives a short reason.
bool board_surgery_embeds(const QuadDisk& board, const SurgeryPlan& plan, const SurgeryResult& result,
                          std::string* why = nullptr);

}  // namespace quadfactor
