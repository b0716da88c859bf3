#include "quadfactor/disk.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>

namespace quadfactor {

namespace {

std::uint64_t edge_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Reverse the cyclic order while keeping the first vertex in place.
SquareVertices reversed(const SquareVertices& q) { return {q[0], q[3], q[2], q[1]}; }

int index_in(const SquareVertices& q, VertexId v) {
  for (int i = 0; i < 4; ++i)
    if (q[i] == v) return i;
  return -1;
}

// +1 when the tuple traverses a -> b, -1 when b -> a.
int direction(const SquareVertices& q, VertexId a, VertexId b) {
  const int i = index_in(q, a);
  return q[(i + 1) % 4] == b ? 1 : -1;
}

Point rotate_left(Point d) { return {-d.y, d.x}; }

// Images of the four vertices of a unit square whose tuple position `i` maps
// to pa and position i+1 maps to pb.
std::array<Point, 4> place_from_edge(int i, Point pa, Point pb) {
  const Point turn = rotate_left(pb - pa);
  std::array<Point, 4> out{};
  out[static_cast<std::size_t>(i)] = pa;
  out[static_cast<std::size_t>((i + 1) % 4)] = pb;
  out[static_cast<std::size_t>((i + 2) % 4)] = pb + turn;
  out[static_cast<std::size_t>((i + 3) % 4)] = pa + turn;
  return out;
}

}  // namespace

const char* to_string(DiskErrorKind kind) {
  switch (kind) {
    case DiskErrorKind::empty: return "empty";
    case DiskErrorKind::degenerate_square: return "degenerate square";
    case DiskErrorKind::unused_vertex: return "unused vertex";
    case DiskErrorKind::edge_overused: return "edge in more than two squares";
    case DiskErrorKind::non_orientable: return "non-orientable gluing";
    case DiskErrorKind::interior_degree: return "interior vertex not in exactly four squares";
    case DiskErrorKind::pinched_boundary: return "boundary not a single simple cycle (pinched vertex)";
    case DiskErrorKind::disconnected: return "disconnected";
    case DiskErrorKind::boundary_not_cycle: return "boundary not a single simple cycle";
    case DiskErrorKind::euler: return "Euler characteristic is not 1";
    case DiskErrorKind::hole: return "not simply connected";
  }
  return "unknown";
}

DiskError::DiskError(DiskErrorKind kind, const std::string& detail)
    : InputError(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)), kind_(kind) {}

std::size_t DiskCounts::excess_boundary_degree() const {
  std::size_t sum = 0;
  for (std::size_t r = 3; r < boundary_by_squares.size(); ++r) sum += (r - 2) * boundary_by_squares[r];
  return sum;
}

QuadDisk QuadDisk::build(std::vector<SquareVertices> squares, std::vector<std::string> vertex_names) {
  if (squares.empty()) throw DiskError(DiskErrorKind::empty, "no squares");
  const std::size_t nv = vertex_names.size();
  const std::size_t nf = squares.size();

  std::vector<bool> used(nv, false);
  for (std::size_t s = 0; s < nf; ++s) {
    const auto& q = squares[s];
    for (int i = 0; i < 4; ++i) {
      if (q[i] >= nv) throw DiskError(DiskErrorKind::degenerate_square, "square " + std::to_string(s) + " has an unknown vertex");
      used[q[i]] = true;
      for (int j = i + 1; j < 4; ++j)
        if (q[i] == q[j]) throw DiskError(DiskErrorKind::degenerate_square, "square " + std::to_string(s) + " repeats a vertex");
    }
  }
  if (auto it = std::find(used.begin(), used.end(), false); it != used.end())
    throw DiskError(DiskErrorKind::unused_vertex, vertex_names[static_cast<std::size_t>(it - used.begin())]);

  QuadDisk d;
  d.names_ = std::move(vertex_names);

  // Edge table.
  d.square_edges_.resize(nf);
  for (std::size_t s = 0; s < nf; ++s) {
    for (int i = 0; i < 4; ++i) {
      const VertexId a = squares[s][i], b = squares[s][(i + 1) % 4];
      auto [it, inserted] = d.edge_lookup_.try_emplace(edge_key(a, b), static_cast<std::uint32_t>(d.edges_.size()));
      if (inserted) d.edges_.push_back(Edge{std::min(a, b), std::max(a, b), {}, 0});
      Edge& e = d.edges_[it->second];
      if (e.count == 2)
        throw DiskError(DiskErrorKind::edge_overused, d.names_[a] + "-" + d.names_[b]);
      e.squares[e.count++] = static_cast<SquareId>(s);
      d.square_edges_[s][static_cast<std::size_t>(i)] = it->second;
    }
  }

  // Orientation by propagation across shared edges, per edge-connected piece.
  std::vector<int> sign(nf, 0);
  for (std::size_t root = 0; root < nf; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::deque<SquareId> queue{static_cast<SquareId>(root)};
    while (!queue.empty()) {
      const SquareId s = queue.front();
      queue.pop_front();
      for (int i = 0; i < 4; ++i) {
        const Edge& e = d.edges_[d.square_edges_[s][static_cast<std::size_t>(i)]];
        if (e.count < 2) continue;
        const SquareId t = e.squares[0] == s ? e.squares[1] : e.squares[0];
        const int want = -sign[s] * direction(squares[s], e.a, e.b) * direction(squares[t], e.a, e.b);
        if (sign[t] == 0) {
          sign[t] = want;
          queue.push_back(t);
        } else if (sign[t] != want) {
          throw DiskError(DiskErrorKind::non_orientable, "squares " + std::to_string(s) + " and " + std::to_string(t));
        }
      }
    }
  }
  for (std::size_t s = 0; s < nf; ++s) {
    if (sign[s] < 0) {
      squares[s] = reversed(squares[s]);
      auto& se = d.square_edges_[s];
      se = {se[3], se[2], se[1], se[0]};
    }
  }
  d.squares_ = std::move(squares);

  // Vertex links.
  d.vertex_squares_.assign(nv, {});
  for (std::size_t s = 0; s < nf; ++s)
    for (VertexId v : d.squares_[s]) d.vertex_squares_[v].push_back(static_cast<SquareId>(s));
  d.boundary_vertex_.assign(nv, false);
  for (VertexId v = 0; v < nv; ++v) {
    const auto& around = d.vertex_squares_[v];
    std::size_t boundary_edges = 0;
    UnionFind link(around.size());
    std::map<std::uint32_t, std::size_t> first_seen;
    for (std::size_t k = 0; k < around.size(); ++k) {
      const SquareId s = around[k];
      const int i = index_in(d.squares_[s], v);
      for (int side : {i, (i + 3) % 4}) {
        const std::uint32_t eid = d.square_edges_[s][static_cast<std::size_t>(side)];
        if (d.edges_[eid].count == 1) {
          ++boundary_edges;
          continue;
        }
        auto [it, inserted] = first_seen.try_emplace(eid, k);
        if (!inserted) link.unite(it->second, k);
      }
    }
    std::size_t pieces = 0;
    for (std::size_t k = 0; k < around.size(); ++k) pieces += link.find(k) == k ? 1 : 0;
    if (pieces != 1 || boundary_edges > 2)
      throw DiskError(DiskErrorKind::pinched_boundary, "at vertex " + d.names_[v]);
    if (boundary_edges == 0 && around.size() != 4)
      throw DiskError(DiskErrorKind::interior_degree,
                      "vertex " + d.names_[v] + " lies in " + std::to_string(around.size()) + " squares");
    d.boundary_vertex_[v] = boundary_edges != 0;
  }

  // Connectivity over shared edges.
  {
    UnionFind cc(nf);
    for (const Edge& e : d.edges_)
      if (e.count == 2) cc.unite(e.squares[0], e.squares[1]);
    for (std::size_t s = 1; s < nf; ++s)
      if (cc.find(s) != cc.find(0)) throw DiskError(DiskErrorKind::disconnected, "square " + std::to_string(s));
  }

  // Boundary cycle, following each boundary edge in its square's orientation.
  std::vector<std::optional<VertexId>> next(nv);
  std::size_t boundary_edge_count = 0;
  for (std::size_t s = 0; s < nf; ++s) {
    for (int i = 0; i < 4; ++i) {
      if (d.edges_[d.square_edges_[s][static_cast<std::size_t>(i)]].count != 1) continue;
      ++boundary_edge_count;
      const VertexId a = d.squares_[s][i], b = d.squares_[s][(i + 1) % 4];
      if (next[a]) throw DiskError(DiskErrorKind::boundary_not_cycle, "two outgoing boundary edges at " + d.names_[a]);
      next[a] = b;
    }
  }
  d.boundary_index_.assign(nv, -1);
  VertexId start = 0;
  while (!d.boundary_vertex_[start]) ++start;
  VertexId cur = start;
  do {
    if (!next[cur] || d.boundary_index_[cur] >= 0)
      throw DiskError(DiskErrorKind::boundary_not_cycle, "at vertex " + d.names_[cur]);
    d.boundary_index_[cur] = static_cast<int>(d.boundary_cycle_.size());
    d.boundary_cycle_.push_back(cur);
    cur = *next[cur];
  } while (cur != start);
  if (d.boundary_cycle_.size() != boundary_edge_count)
    throw DiskError(DiskErrorKind::boundary_not_cycle, "boundary edges split into several cycles");

  const auto chi = static_cast<long long>(nv) - static_cast<long long>(d.edges_.size()) + static_cast<long long>(nf);
  if (chi != 1) throw DiskError(DiskErrorKind::euler, "V - E + F = " + std::to_string(chi));

  DiskCounts& c = d.counts_;
  c.vertices = nv;
  c.edges = d.edges_.size();
  c.boundary_edges = boundary_edge_count;
  c.interior_edges = c.edges - c.boundary_edges;
  c.squares = nf;
  std::size_t max_r = 1;
  for (VertexId v = 0; v < nv; ++v) {
    if (!d.boundary_vertex_[v]) {
      ++c.interior_vertices;
    } else {
      max_r = std::max(max_r, d.vertex_squares_[v].size());
    }
  }
  c.boundary_by_squares.assign(max_r + 1, 0);
  for (VertexId v = 0; v < nv; ++v)
    if (d.boundary_vertex_[v]) ++c.boundary_by_squares[d.vertex_squares_[v].size()];

  check_invariant(4 * c.squares == 2 * c.interior_edges + c.boundary_edges, "4F = 2E_I + E_B");
  check_invariant(c.corners() == 4 + c.excess_boundary_degree(), "V_1 - 4 = sum (r-2) V_r");
  return d;
}

int QuadDisk::position(SquareId s, VertexId v) const { return index_in(squares_[s], v); }

const QuadDisk::Edge* QuadDisk::find_edge(VertexId a, VertexId b) const {
  auto it = edge_lookup_.find(edge_key(a, b));
  return it == edge_lookup_.end() ? nullptr : &edges_[it->second];
}

bool QuadDisk::has_edge(VertexId a, VertexId b) const { return find_edge(a, b) != nullptr; }

bool QuadDisk::is_boundary_edge(VertexId a, VertexId b) const {
  const Edge* e = find_edge(a, b);
  return e != nullptr && e->count == 1;
}

std::optional<SquareId> QuadDisk::across(SquareId s, VertexId a, VertexId b) const {
  const Edge* e = find_edge(a, b);
  if (e == nullptr || e->count < 2) return std::nullopt;
  if (e->squares[0] == s) return e->squares[1];
  if (e->squares[1] == s) return e->squares[0];
  return std::nullopt;
}

std::optional<SquareId> QuadDisk::neighbor(SquareId s, int side) const {
  const Edge& e = edges_[square_edges_[s][static_cast<std::size_t>(side)]];
  if (e.count < 2) return std::nullopt;
  return e.squares[0] == s ? e.squares[1] : e.squares[0];
}

std::vector<std::pair<SquareId, SquareId>> QuadDisk::adjacent_pairs() const {
  std::vector<std::pair<SquareId, SquareId>> out;
  for (const Edge& e : edges_)
    if (e.count == 2) out.emplace_back(std::min(e.squares[0], e.squares[1]), std::max(e.squares[0], e.squares[1]));
  std::sort(out.begin(), out.end());
  return out;
}

QuadDisk build_complex(const std::vector<std::array<std::string, 4>>& squares) {
  std::map<std::string, VertexId> ids;
  std::vector<std::string> names;
  std::vector<SquareVertices> tuples;
  tuples.reserve(squares.size());
  for (const auto& sq : squares) {
    SquareVertices q{};
    for (std::size_t i = 0; i < 4; ++i) {
      auto [it, inserted] = ids.try_emplace(sq[i], static_cast<VertexId>(names.size()));
      if (inserted) names.push_back(sq[i]);
      q[i] = it->second;
    }
    tuples.push_back(q);
  }
  return QuadDisk::build(std::move(tuples), std::move(names));
}

Bicoloring Bicoloring::from_colors(const QuadDisk& disk, std::vector<Color> colors) {
  if (colors.size() != disk.square_count()) throw InputError("colouring has the wrong length");
  for (auto [s, t] : disk.adjacent_pairs())
    if (colors[s] == colors[t])
      throw InputError("squares " + std::to_string(s) + " and " + std::to_string(t) + " share a side and a colour");
  Bicoloring b;
  b.labels_.resize(colors.size());
  for (SquareId s = 0; s < colors.size(); ++s) {
    auto& bucket = colors[s] == Color::black ? b.black_ : b.white_;
    b.labels_[s] = bucket.size();
    bucket.push_back(s);
  }
  b.colors_ = std::move(colors);
  return b;
}

Bicoloring bicolor(const QuadDisk& disk, Color first) {
  const std::size_t nf = disk.square_count();
  std::vector<Color> colors(nf, first);
  std::vector<bool> seen(nf, false);
  std::deque<SquareId> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const SquareId s = queue.front();
    queue.pop_front();
    for (int side = 0; side < 4; ++side) {
      const auto t = disk.neighbor(s, side);
      if (!t) continue;
      if (!seen[*t]) {
        seen[*t] = true;
        colors[*t] = opposite(colors[s]);
        queue.push_back(*t);
      } else {
        check_invariant(colors[*t] != colors[s], "square adjacency graph is not bipartite");
      }
    }
  }
  return Bicoloring::from_colors(disk, std::move(colors));
}

IntMatrix black_to_white_matrix(const QuadDisk& disk, const Bicoloring& coloring) {
  IntMatrix m(coloring.black_count(), coloring.white_count());
  for (auto [s, t] : disk.adjacent_pairs()) {
    const SquareId black = coloring.color(s) == Color::black ? s : t;
    const SquareId white = black == s ? t : s;
    m(coloring.label(black), coloring.label(white)) = 1;
  }
  return m;
}

DevelopingMap::DevelopingMap(std::vector<std::array<Point, 4>> placements, std::vector<std::vector<Point>> vertex_images)
    : placements_(std::move(placements)), vertex_images_(std::move(vertex_images)) {}

Point DevelopingMap::cell(SquareId s) const {
  const auto& p = placements_[s];
  return *std::min_element(p.begin(), p.end());
}

Point DevelopingMap::image(VertexId v) const {
  if (vertex_images_[v].size() != 1) throw InputError("vertex has more than one image");
  return vertex_images_[v].front();
}

DevelopingMap develop(const QuadDisk& disk, const DevelopOptions& options) {
  const std::size_t nf = disk.square_count();
  std::vector<std::optional<std::array<Point, 4>>> placed(nf);

  SquareId seed_square = 0;
  std::array<Point, 4> seed_placement = place_from_edge(0, {0, 0}, {1, 0});
  if (options.seed) {
    const auto [from, to] = *options.seed;
    if (from >= disk.vertex_count() || to >= disk.vertex_count() || !disk.has_edge(from, to))
      throw InputError("develop: seed is not an edge");
    bool found = false;
    for (SquareId s : disk.squares_at(from)) {
      const int i = disk.position(s, from);
      const auto& q = disk.square(s);
      if (q[static_cast<std::size_t>((i + 1) % 4)] == to) {
        seed_square = s;
        seed_placement = place_from_edge(i, {0, 0}, {1, 0});
        found = true;
        break;
      }
      if (q[static_cast<std::size_t>((i + 3) % 4)] == to) {
        seed_square = s;
        seed_placement = place_from_edge((i + 3) % 4, {1, 0}, {0, 0});
        found = true;
      }
    }
    check_invariant(found, "develop: seed edge not found in any square");
  }

  std::mt19937_64 rng(options.shuffle_seed.value_or(0));
  std::vector<SquareId> frontier{seed_square};
  placed[seed_square] = seed_placement;
  while (!frontier.empty()) {
    std::size_t pick = 0;
    if (options.shuffle_seed) pick = std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng);
    const SquareId s = frontier[pick];
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
    const auto& q = disk.square(s);
    const auto& ps = *placed[s];
    for (int side = 0; side < 4; ++side) {
      const auto t = disk.neighbor(s, side);
      if (!t) continue;
      // t traverses the shared edge in the opposite direction.
      const VertexId a = q[static_cast<std::size_t>(side)], b = q[static_cast<std::size_t>((side + 1) % 4)];
      const int j = disk.position(*t, b);
      const auto candidate = place_from_edge(j, ps[static_cast<std::size_t>((side + 1) % 4)], ps[static_cast<std::size_t>(side)]);
      check_invariant(disk.square(*t)[static_cast<std::size_t>((j + 1) % 4)] == a, "develop: inconsistent orientation");
      if (!placed[*t]) {
        placed[*t] = candidate;
        frontier.push_back(*t);
      } else {
        check_invariant(*placed[*t] == candidate, "develop: extension is not well defined");
      }
    }
  }

  std::vector<std::array<Point, 4>> placements;
  placements.reserve(nf);
  std::vector<std::vector<Point>> images(disk.vertex_count());
  for (SquareId s = 0; s < nf; ++s) {
    check_invariant(placed[s].has_value(), "develop: unreachable square");
    placements.push_back(*placed[s]);
    for (std::size_t i = 0; i < 4; ++i) images[disk.square(s)[i]].push_back((*placed[s])[i]);
  }
  for (auto& img : images) {
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
  }
  return {std::move(placements), std::move(images)};
}

bool is_board(const QuadDisk& disk, const DevelopingMap& map) {
  std::vector<Point> cells;
  cells.reserve(disk.square_count());
  for (SquareId s = 0; s < disk.square_count(); ++s) cells.push_back(map.cell(s));
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) return false;

  std::vector<Point> points;
  points.reserve(disk.vertex_count());
  for (VertexId v = 0; v < disk.vertex_count(); ++v) {
    if (map.images(v).size() != 1) return false;
    points.push_back(map.images(v).front());
  }
  std::sort(points.begin(), points.end());
  return std::adjacent_find(points.begin(), points.end()) == points.end();
}

bool is_board(const QuadDisk& disk) { return is_board(disk, develop(disk)); }

}  // namespace quadfactor
