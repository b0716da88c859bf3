#include "quadfactor/board_io.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace quadfactor {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty() && cur.back() == '\r') cur.pop_back();
  if (!cur.empty()) lines.push_back(std::move(cur));
  return lines;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::string point_name(Point p) { return std::to_string(p.x) + "," + std::to_string(p.y); }

}  // namespace

QuadDisk board_from_cells(std::vector<Point> cells) {
  if (cells.empty()) throw DiskError(DiskErrorKind::empty, "board has no cells");
  std::sort(cells.begin(), cells.end(), [](Point a, Point b) { return a.y != b.y ? a.y < b.y : a.x < b.x; });
  const std::set<Point> occupied(cells.begin(), cells.end());
  if (occupied.size() != cells.size()) throw InputError("board: duplicate cell");

  // Edge connectivity of the cells.
  const Point steps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  {
    std::set<Point> seen{cells.front()};
    std::deque<Point> queue{cells.front()};
    while (!queue.empty()) {
      const Point c = queue.front();
      queue.pop_front();
      for (Point d : steps) {
        const Point n = c + d;
        if (occupied.count(n) && seen.insert(n).second) queue.push_back(n);
      }
    }
    if (seen.size() != cells.size()) throw DiskError(DiskErrorKind::disconnected, "board cells are not edge-connected");
  }

  // Empty cells inside the padded bounding box must all reach the outside
  // through 4-connected empty cells; a trapped cell means a hole or a pinch.
  {
    std::int64_t x0 = cells.front().x, x1 = x0, y0 = cells.front().y, y1 = y0;
    for (Point c : cells) {
      x0 = std::min(x0, c.x);
      x1 = std::max(x1, c.x);
      y0 = std::min(y0, c.y);
      y1 = std::max(y1, c.y);
    }
    --x0, --y0, ++x1, ++y1;
    std::set<Point> outside{{x0, y0}};
    std::deque<Point> queue{{x0, y0}};
    while (!queue.empty()) {
      const Point c = queue.front();
      queue.pop_front();
      for (Point d : steps) {
        const Point n = c + d;
        if (n.x < x0 || n.x > x1 || n.y < y0 || n.y > y1 || occupied.count(n)) continue;
        if (outside.insert(n).second) queue.push_back(n);
      }
    }
    const auto box = static_cast<std::size_t>((x1 - x0 + 1) * (y1 - y0 + 1));
    if (outside.size() + cells.size() != box) throw DiskError(DiskErrorKind::hole, "board encloses an empty cell");
  }

  std::map<Point, VertexId> ids;
  std::vector<std::string> names;
  auto vertex = [&](Point p) {
    auto [it, inserted] = ids.try_emplace(p, static_cast<VertexId>(names.size()));
    if (inserted) names.push_back(point_name(p));
    return it->second;
  };
  std::vector<SquareVertices> squares;
  squares.reserve(cells.size());
  for (Point c : cells)
    squares.push_back({vertex(c), vertex(c + Point{1, 0}), vertex(c + Point{1, 1}), vertex(c + Point{0, 1})});
  return QuadDisk::build(std::move(squares), std::move(names));
}

QuadDisk parse_board(std::string_view text) {
  auto lines = split_lines(text);
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  std::vector<Point> cells;
  const auto height = static_cast<std::int64_t>(lines.size());
  for (std::int64_t row = 0; row < height; ++row) {
    const auto& line = lines[static_cast<std::size_t>(row)];
    for (std::size_t col = 0; col < line.size(); ++col) {
      const char ch = line[col];
      if (ch == '#') {
        cells.push_back({static_cast<std::int64_t>(col), height - 1 - row});
      } else if (ch != '.' && ch != ' ') {
        throw InputError("board: unexpected character '" + std::string(1, ch) + "' on line " + std::to_string(row + 1));
      }
    }
  }
  if (cells.empty()) throw DiskError(DiskErrorKind::empty, "board has no cells");
  std::int64_t min_x = cells.front().x, min_y = cells.front().y;
  for (Point c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
  }
  for (Point& c : cells) c = c - Point{min_x, min_y};
  return board_from_cells(std::move(cells));
}

QuadDisk parse_complex(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && trim(lines[i]).empty()) ++i;
  if (i == lines.size() || trim(lines[i]) != "quadcomplex") throw InputError("complex: missing 'quadcomplex' header");
  std::map<long long, std::array<std::string, 4>> by_index;
  for (++i; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty()) continue;
    std::istringstream in(line);
    std::string tag, index_token;
    in >> tag >> index_token;
    if (tag != "s" || index_token.size() < 2 || index_token.back() != ':')
      throw InputError("complex: malformed line " + std::to_string(i + 1) + ": " + line);
    long long index = 0;
    try {
      std::size_t used = 0;
      index = std::stoll(index_token.substr(0, index_token.size() - 1), &used);
      if (used != index_token.size() - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("complex: bad square index on line " + std::to_string(i + 1));
    }
    std::array<std::string, 4> vs;
    for (auto& v : vs)
      if (!(in >> v)) throw InputError("complex: square on line " + std::to_string(i + 1) + " needs 4 vertices");
    std::string extra;
    if (in >> extra) throw InputError("complex: square on line " + std::to_string(i + 1) + " has more than 4 vertices");
    if (!by_index.emplace(index, vs).second) throw InputError("complex: duplicate square index " + std::to_string(index));
  }
  std::vector<std::array<std::string, 4>> squares;
  long long expect = 0;
  for (auto& [index, vs] : by_index) {
    if (index != expect++) throw InputError("complex: square indices must be 0..F-1");
    squares.push_back(vs);
  }
  if (squares.empty()) throw DiskError(DiskErrorKind::empty, "complex has no squares");
  return build_complex(squares);
}

QuadDisk parse_disk(std::string_view text) {
  for (const auto& line : split_lines(text)) {
    const auto t = trim(line);
    if (t.empty()) continue;
    return t == "quadcomplex" ? parse_complex(text) : parse_board(text);
  }
  throw DiskError(DiskErrorKind::empty, "empty input");
}

QuadDisk read_disk_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_disk(buf.str());
}

std::string write_complex(const QuadDisk& disk) {
  std::ostringstream out;
  out << "quadcomplex\n";
  for (SquareId s = 0; s < disk.square_count(); ++s) {
    out << "s " << s << ":";
    for (VertexId v : disk.square(s)) out << ' ' << disk.vertex_name(v);
    out << '\n';
  }
  return out.str();
}

std::string render_board(const QuadDisk& disk) {
  const auto map = develop(disk);
  if (!is_board(disk, map)) throw InputError("render_board: disk is not a board");
  std::vector<Point> cells;
  for (SquareId s = 0; s < disk.square_count(); ++s) cells.push_back(map.cell(s));
  std::int64_t x0 = cells.front().x, x1 = x0, y0 = cells.front().y, y1 = y0;
  for (Point c : cells) {
    x0 = std::min(x0, c.x);
    x1 = std::max(x1, c.x);
    y0 = std::min(y0, c.y);
    y1 = std::max(y1, c.y);
  }
  const auto w = static_cast<std::size_t>(x1 - x0 + 1);
  std::vector<std::string> rows(static_cast<std::size_t>(y1 - y0 + 1), std::string(w, '.'));
  for (Point c : cells) rows[static_cast<std::size_t>(y1 - c.y)][static_cast<std::size_t>(c.x - x0)] = '#';
  std::string out;
  for (const auto& r : rows) out += r + "\n";
  return out;
}

}  // namespace quadfactor
