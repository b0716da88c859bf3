#include "quadfactor/enumerate.hpp"

#include <algorithm>
#include <set>

#include "quadfactor/board_io.hpp"
#include "quadfactor/errors.hpp"

namespace quadfactor {

namespace {

bool by_row(Point a, Point b) { return a.y != b.y ? a.y < b.y : a.x < b.x; }

std::vector<Point> normalized(std::vector<Point> cells) {
  std::int64_t x0 = cells.front().x, y0 = cells.front().y;
  for (Point c : cells) {
    x0 = std::min(x0, c.x);
    y0 = std::min(y0, c.y);
  }
  for (Point& c : cells) c = Point{c.x - x0, c.y - y0};
  std::sort(cells.begin(), cells.end(), by_row);
  return cells;
}

bool row_order_less(const std::vector<Point>& a, const std::vector<Point>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), by_row);
}

}  // namespace

std::vector<std::vector<Point>> fixed_polyominoes(std::size_t n) {
  if (n == 0) return {};
  std::set<std::vector<Point>, decltype(&row_order_less)> level(&row_order_less);
  level.insert({Point{0, 0}});
  for (std::size_t size = 1; size < n; ++size) {
    std::set<std::vector<Point>, decltype(&row_order_less)> next(&row_order_less);
    for (const auto& poly : level) {
      std::set<Point> occupied(poly.begin(), poly.end());
      for (Point c : poly)
        for (Point step : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}) {
          const Point grown = c + step;
          if (occupied.count(grown)) continue;
          auto cells = poly;
          cells.push_back(grown);
          next.insert(normalized(std::move(cells)));
        }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

std::string cells_to_text(const std::vector<Point>& cells) {
  std::int64_t x0 = cells.front().x, x1 = x0, y0 = cells.front().y, y1 = y0;
  for (Point c : cells) {
    x0 = std::min(x0, c.x);
    x1 = std::max(x1, c.x);
    y0 = std::min(y0, c.y);
    y1 = std::max(y1, c.y);
  }
  const std::set<Point> occupied(cells.begin(), cells.end());
  std::string out;
  for (std::int64_t y = y1; y >= y0; --y) {
    for (std::int64_t x = x0; x <= x1; ++x) out += occupied.count(Point{x, y}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

std::string BoardInstance::text() const { return cells_to_text(cells); }

std::vector<BoardInstance> enumerate_boards(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationCells) throw InputError("enumerate: cell count must be between 1 and 10");
  std::vector<BoardInstance> out;
  for (auto& cells : fixed_polyominoes(n)) {
    try {
      auto disk = board_from_cells(cells);
      out.push_back({std::move(cells), std::move(disk)});
    } catch (const DiskError& e) {
      if (e.kind() != DiskErrorKind::hole) throw;
    }
  }
  return out;
}

std::vector<BoardInstance> board_universe(std::size_t max_cells) {
  if (max_cells < 1 || max_cells > kMaxEnumerationCells) throw InputError("enumerate: cell count must be between 1 and 10");
  std::vector<BoardInstance> out;
  for (std::size_t n = 1; n <= max_cells; ++n) {
    auto boards = enumerate_boards(n);
    std::move(boards.begin(), boards.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace quadfactor
