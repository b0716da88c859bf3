#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quadfactor/disk.hpp"

namespace quadfactor {

inline constexpr std::size_t kMaxEnumerationCells = 10;

/// Fixed polyominoes (distinct up to translation) with exactly n cells,
/// including those with holes. Each is translated so the minimum x and y are
/// 0 and sorted by (y, x); the list is in lexicographic order.
std::vector<std::vector<Point>> fixed_polyominoes(std::size_t n);

struct BoardInstance {
  std::vector<Point> cells;
  QuadDisk disk;

  /// Board text accepted by parse_board.
  std::string text() const;
};

/// Hole-free fixed polyominoes with exactly n cells, 1 <= n <= 10, in a
/// deterministic order. Throws InputError outside that range.
std::vector<BoardInstance> enumerate_boards(std::size_t n);

/// All boards with 1..max_cells cells, smaller ones first.
std::vector<BoardInstance> board_universe(std::size_t max_cells);

std::string cells_to_text(const std::vector<Point>& cells);

}  // namespace quadfactor
