#include <doctest.h>

#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "quadfactor/board_io.hpp"
#include "quadfactor/disk.hpp"
#include "quadfactor/enumerate.hpp"

using namespace quadfactor;

namespace {

DiskErrorKind kind_of(auto&& make) {
  try {
    make();
  } catch (const DiskError& e) {
    return e.kind();
  }
  FAIL("expected a DiskError");
  return DiskErrorKind::empty;
}

Point coordinates(const std::string& name) {
  const auto comma = name.find(',');
  return {std::stoll(name.substr(0, comma)), std::stoll(name.substr(comma + 1))};
}

// Counts recomputed from the square list alone.
void check_counts_by_hand(const QuadDisk& disk) {
  std::map<std::pair<VertexId, VertexId>, int> edges;
  std::vector<int> squares_at(disk.vertex_count(), 0);
  for (const auto& q : disk.squares())
    for (std::size_t i = 0; i < 4; ++i) {
      auto a = q[i], b = q[(i + 1) % 4];
      edges[{std::min(a, b), std::max(a, b)}]++;
      squares_at[a]++;
    }
  std::size_t interior_edges = 0, boundary_edges = 0;
  std::set<VertexId> boundary;
  for (auto [e, n] : edges) {
    if (n == 2) ++interior_edges;
    if (n == 1) {
      ++boundary_edges;
      boundary.insert(e.first);
      boundary.insert(e.second);
    }
  }
  const auto& c = disk.counts();
  CHECK(c.vertices == disk.vertex_count());
  CHECK(c.edges == edges.size());
  CHECK(c.interior_edges == interior_edges);
  CHECK(c.boundary_edges == boundary_edges);
  CHECK(c.vertices - c.edges + c.squares == 1);
  CHECK(4 * c.squares == 2 * c.interior_edges + c.boundary_edges);
  std::size_t v1 = 0, excess = 0, sum = c.interior_vertices;
  for (VertexId v = 0; v < disk.vertex_count(); ++v) {
    if (!boundary.count(v)) {
      CHECK(squares_at[v] == 4);
      continue;
    }
    if (squares_at[v] == 1) ++v1;
    if (squares_at[v] >= 3) excess += static_cast<std::size_t>(squares_at[v] - 2);
  }
  for (std::size_t r = 1; r < c.boundary_by_squares.size(); ++r) sum += c.boundary_by_squares[r];
  CHECK(sum == c.vertices);
  CHECK(v1 == c.corners());
  CHECK(v1 - 4 == excess);
  CHECK(disk.boundary_cycle().size() == boundary_edges);
}

}  // namespace

TEST_CASE("parse_board counts") {
  const auto one = parse_board("#");
  CHECK(one.counts().squares == 1);
  CHECK(one.counts().vertices == 4);
  CHECK(one.counts().edges == 4);

  const auto block = parse_board("##\n##");
  CHECK(block.counts().squares == 4);
  CHECK(block.counts().vertices == 9);
  CHECK(block.counts().edges == 12);
  CHECK(block.counts().interior_vertices == 1);

  const auto tromino = parse_board("##\n#.");
  CHECK(tromino.counts().squares == 3);
  CHECK(tromino.counts().vertices == 8);
  CHECK(tromino.counts().edges == 10);
}

TEST_CASE("parse_board conventions") {
  const auto d = parse_board(".#\r\n##\r\n");
  REQUIRE(d.square_count() == 3);
  // Bottom row first, left to right.
  CHECK(d.vertex_name(d.square(0)[0]) == "0,0");
  CHECK(d.vertex_name(d.square(1)[0]) == "1,0");
  CHECK(d.vertex_name(d.square(2)[0]) == "1,1");
  CHECK(parse_board("#.\n##").counts().squares == parse_board("#\n##").counts().squares);
  CHECK(parse_board("   \n .#  \n").square_count() == 1);
}

TEST_CASE("parse_board rejects") {
  CHECK(kind_of([] { parse_board(""); }) == DiskErrorKind::empty);
  CHECK(kind_of([] { parse_board("..\n.."); }) == DiskErrorKind::empty);
  CHECK(kind_of([] { parse_board("#.\n.#"); }) == DiskErrorKind::disconnected);
  CHECK(kind_of([] { parse_board("###\n#.#\n###"); }) == DiskErrorKind::hole);
  // A pinch traps the cell on its inside.
  CHECK(kind_of([] { parse_board("###\n#.#\n.##"); }) == DiskErrorKind::hole);
  CHECK_THROWS_AS(parse_board("#x"), InputError);
}

TEST_CASE("build_complex") {
  const auto single = build_complex({{"a", "b", "c", "d"}});
  CHECK(single.counts().squares == 1);

  const auto domino = build_complex({{"a", "b", "c", "d"}, {"b", "e", "f", "c"}});
  CHECK(domino.counts().boundary_edges == 6);
  CHECK(domino.counts().interior_edges == 1);

  // Clockwise second square is reoriented.
  const auto flipped = build_complex({{"a", "b", "c", "d"}, {"b", "c", "f", "e"}});
  CHECK(flipped.counts().squares == 2);
  const auto& q = flipped.square(1);
  const auto b = flipped.position(1, 1), c = flipped.position(1, 2);
  CHECK((c - b + 4) % 4 == 3);  // c follows b clockwise, i.e. b follows c counterclockwise
  (void)q;
}

TEST_CASE("build_complex rejects") {
  CHECK(kind_of([] { build_complex({{"a", "b", "c", "d"}, {"c", "e", "f", "g"}}); }) == DiskErrorKind::pinched_boundary);
  CHECK(kind_of([] { build_complex({{"a", "b", "c", "d"}, {"e", "f", "g", "h"}}); }) == DiskErrorKind::disconnected);
  CHECK(kind_of([] { build_complex({{"a", "a", "c", "d"}}); }) == DiskErrorKind::degenerate_square);
  CHECK(kind_of([] {
          build_complex({{"a", "b", "c", "d"}, {"b", "a", "e", "f"}, {"a", "b", "g", "h"}});
        }) == DiskErrorKind::edge_overused);
  // Three squares closing up around o.
  CHECK(kind_of([] {
          build_complex({{"o", "a1", "x1", "a2"}, {"o", "a2", "x2", "a3"}, {"o", "a3", "x3", "a1"}});
        }) == DiskErrorKind::interior_degree);
  // Strip of three squares closed with a half twist.
  CHECK(kind_of([] {
          build_complex({{"b0", "b1", "t1", "t0"}, {"b1", "b2", "t2", "t1"}, {"b2", "t0", "b0", "t2"}});
        }) == DiskErrorKind::non_orientable);
  // Strip of four squares closed without a twist: an annulus.
  CHECK_THROWS_AS(build_complex({{"b0", "b1", "t1", "t0"},
                                 {"b1", "b2", "t2", "t1"},
                                 {"b2", "b3", "t3", "t2"},
                                 {"b3", "b0", "t0", "t3"}}),
                  DiskError);
  CHECK(kind_of([] { QuadDisk::build({{0, 1, 2, 3}}, {"a", "b", "c", "d", "e"}); }) == DiskErrorKind::unused_vertex);
}

TEST_CASE("complex text round trip") {
  const auto board = parse_board("###\n#..\n###");
  const auto again = parse_complex(write_complex(board));
  REQUIRE(again.square_count() == board.square_count());
  for (SquareId s = 0; s < board.square_count(); ++s)
    for (std::size_t i = 0; i < 4; ++i) CHECK(again.vertex_name(again.square(s)[i]) == board.vertex_name(board.square(s)[i]));
  CHECK(parse_disk("quadcomplex\ns 0: a b c d\n").square_count() == 1);
  CHECK_THROWS_AS(parse_complex("quadcomplex\ns 1: a b c d\n"), InputError);
  CHECK_THROWS_AS(parse_complex("quadcomplex\ns 0: a b c\n"), InputError);
  CHECK_THROWS_AS(parse_complex("s 0: a b c d\n"), InputError);
}

TEST_CASE("bicolor") {
  const auto single = bicolor(parse_board("#"));
  CHECK(single.black_count() == 1);
  CHECK(single.white_count() == 0);
  const auto domino = bicolor(parse_board("##"));
  CHECK(domino.black_count() == 1);
  CHECK(domino.white_count() == 1);
  const auto block_disk = parse_board("##\n##");
  const auto block = bicolor(block_disk);
  CHECK(block.black_count() == 2);
  CHECK(block.white_count() == 2);
  CHECK(block.color(0) == block.color(3));
  CHECK(block.color(0) == Color::black);
  CHECK(bicolor(block_disk, Color::white).color(0) == Color::white);
  CHECK_THROWS_AS(Bicoloring::from_colors(block_disk, {Color::black, Color::black, Color::white, Color::black}), InputError);
}

TEST_CASE("black_to_white_matrix") {
  const auto domino = parse_board("##");
  CHECK(black_to_white_matrix(domino, bicolor(domino)) == IntMatrix{{1}});
  const auto block = parse_board("##\n##");
  CHECK(black_to_white_matrix(block, bicolor(block)) == IntMatrix{{1, 1}, {1, 1}});
  const auto rect = parse_board("###\n###");
  const auto b = black_to_white_matrix(rect, bicolor(rect));
  REQUIRE(b.rows() == 3);
  REQUIRE(b.cols() == 3);
  std::multiset<std::int64_t> sums;
  for (std::size_t i = 0; i < 3; ++i) sums.insert(b(i, 0) + b(i, 1) + b(i, 2));
  CHECK(sums == std::multiset<std::int64_t>{2, 2, 3});
  const auto single = parse_board("#");
  const auto m = black_to_white_matrix(single, bicolor(single));
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 0);
}

TEST_CASE("develop") {
  const auto single = develop(parse_board("#"));
  CHECK(single.cell(0) == Point{0, 0});

  // Seeded on the shared edge of a domino.
  const auto domino = parse_board("##");
  const auto shared_a = domino.square(0)[1], shared_b = domino.square(0)[2];
  const auto map = develop(domino, {DevelopSeed{shared_a, shared_b}, std::nullopt});
  CHECK(map.image(shared_a) == Point{0, 0});
  CHECK(map.image(shared_b) == Point{1, 0});
  const Point c0 = map.cell(0), c1 = map.cell(1);
  CHECK(std::abs(c0.x - c1.x) + std::abs(c0.y - c1.y) == 1);
  CHECK_THROWS_AS(develop(domino, {DevelopSeed{domino.square(0)[0], domino.square(0)[2]}, std::nullopt}), InputError);
}

TEST_CASE("develop reproduces board coordinates") {
  for (const auto& inst : board_universe(6)) {
    const auto& disk = inst.disk;
    const auto map = develop(disk);
    // The default seed is the first edge of square 0, which runs along +x
    // from the lower-left corner of the lowest-leftmost cell.
    const Point origin = coordinates(disk.vertex_name(disk.square(0)[0]));
    for (VertexId v = 0; v < disk.vertex_count(); ++v) CHECK(map.image(v) == coordinates(disk.vertex_name(v)) - origin);
  }
}

TEST_CASE("develop does not depend on extension order") {
  std::vector<QuadDisk> disks;
  for (auto& inst : enumerate_boards(7)) disks.push_back(inst.disk);
  for (auto& d : fixtures::stacked_disks(10, 16, 11)) disks.push_back(d);
  disks.push_back(fixtures::spiral());
  for (const auto& disk : disks) {
    const auto base = develop(disk);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const auto shuffled = develop(disk, {std::nullopt, seed});
      for (SquareId s = 0; s < disk.square_count(); ++s) CHECK(shuffled.placement(s) == base.placement(s));
    }
  }
}

TEST_CASE("is_board") {
  for (const auto& inst : board_universe(7)) CHECK(is_board(inst.disk));
  const auto spiral = fixtures::spiral();
  CHECK(spiral.square_count() == 8);
  CHECK_FALSE(is_board(spiral));
  const auto map = develop(spiral);
  CHECK(map.cell(0) == map.cell(4));
  // Squares 0 and 4 are stacked: distinct vertices share an image.
  CHECK(spiral.square(0)[0] != spiral.square(4)[0]);
  CHECK(map.image(spiral.square(0)[0]) == map.image(spiral.square(4)[0]));

  // Eight squares around a missing cell, not glued where the ring closes:
  // squares land on distinct cells but two boundary vertices coincide.
  const auto slit = fixtures::walk_strip({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}});
  const auto slit_map = develop(slit);
  std::set<Point> cells;
  for (SquareId s = 0; s < slit.square_count(); ++s) cells.insert(slit_map.cell(s));
  CHECK(cells.size() == 8);
  CHECK_FALSE(is_board(slit));
}

TEST_CASE("stacked complexes are valid non-boards") {
  const auto disks = fixtures::stacked_disks(25, 18, 1);
  CHECK(disks.size() == 25);
  for (const auto& d : disks) {
    CHECK_FALSE(is_board(d));
    check_counts_by_hand(d);
  }
}

TEST_CASE("count identities on every small board") {
  for (const auto& inst : board_universe(7)) check_counts_by_hand(inst.disk);
  check_counts_by_hand(fixtures::spiral());
}

TEST_CASE("opposite colouring transposes B") {
  for (const auto& inst : board_universe(6)) {
    const auto b = black_to_white_matrix(inst.disk, bicolor(inst.disk));
    CHECK(black_to_white_matrix(inst.disk, bicolor(inst.disk, Color::white)) == b.transpose());
    for (std::size_t i = 0; i < b.rows(); ++i) {
      std::int64_t sum = 0;
      for (std::size_t j = 0; j < b.cols(); ++j) sum += b(i, j);
      CHECK(sum <= 4);
    }
  }
}

TEST_CASE("render_board") {
  CHECK(render_board(parse_board(".#\n##")) == ".#\n##\n");
  CHECK_THROWS_AS(render_board(fixtures::spiral()), InputError);
}
