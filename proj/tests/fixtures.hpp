#pragma once

#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quadfactor/board_io.hpp"
#include "quadfactor/disk.hpp"
#include "quadfactor/factorization.hpp"
#include "quadfactor/int_matrix.hpp"

namespace fixtures {

using quadfactor::IntMatrix;

// A 6 x 7 black-to-white matrix together with a known factorization
// (identity permutations).
inline IntMatrix reference_b() {
  return {{1, 1, 0, 1, 0, 0, 0}, {0, 1, 1, 0, 1, 1, 0}, {0, 0, 1, 0, 0, 1, 0},
          {1, 1, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 1, 1, 0}, {0, 1, 1, 0, 0, 0, 1}};
}

inline IntMatrix reference_l() {
  return {{1, 0, 0, 0, 0, 0},  {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
          {1, 0, 0, -1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 1, 0, 0, -1, 1}};
}

inline IntMatrix reference_d() {
  IntMatrix d(6, 7);
  for (auto [i, j] : std::array<std::pair<int, int>, 6>{{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 6}}}) d(i, j) = 1;
  return d;
}

inline IntMatrix reference_u() {
  return {{1, 1, 0, 1, 0, 0, 0}, {0, 1, 1, 0, 1, 1, 0}, {0, 0, 1, 0, 0, 1, 0},  {0, 0, 0, 1, 0, 0, -1},
          {0, 0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 1}};
}

inline quadfactor::LDUFactorization reference_factorization() {
  quadfactor::LDUFactorization f;
  f.black_order.resize(6);
  f.white_order.resize(7);
  std::iota(f.black_order.begin(), f.black_order.end(), 0);
  std::iota(f.white_order.begin(), f.white_order.end(), 0);
  f.lower = reference_l();
  f.defective = reference_d();
  f.upper = reference_u();
  return f;
}

// Grows a square complex on the lattice one square at a time. A new square is
// glued to the square it grew from and to any square that already shares a
// vertex with it along a common lattice edge, so the complex develops onto the
// lattice but may cover the same cell several times. Steps that break disk
// validity are undone.
class ComplexGrower {
 public:
  explicit ComplexGrower(std::uint64_t seed) : rng_(seed) { add_square({0, 0}); }

  std::size_t size() const { return pos_.size(); }

  void grow(std::size_t target, std::size_t max_attempts = 2000) {
    for (std::size_t attempt = 0; size() < target && attempt < max_attempts; ++attempt) step();
  }

  quadfactor::QuadDisk disk() const { return *build(pos_.size()); }

 private:
  static constexpr std::array<quadfactor::Point, 4> kCorner{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  static constexpr std::array<quadfactor::Point, 4> kStep{{{0, -1}, {1, 0}, {0, 1}, {-1, 0}}};

  std::size_t find(std::size_t h) const {
    while (parent_[h] != h) h = parent_[h];
    return h;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  void add_square(quadfactor::Point p) {
    pos_.push_back(p);
    side_.push_back({-1, -1, -1, -1});
    for (int i = 0; i < 4; ++i) parent_.push_back(parent_.size());
  }

  // t lies on side `side` of s.
  void glue(std::size_t s, int side, std::size_t t) {
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        if (pos_[s] + kCorner[a] == pos_[t] + kCorner[b]) unite(4 * s + a, 4 * t + b);
    side_[s][static_cast<std::size_t>(side)] = static_cast<int>(t);
    side_[t][static_cast<std::size_t>((side + 2) % 4)] = static_cast<int>(s);
  }

  void step() {
    const auto saved_pos = pos_;
    const auto saved_side = side_;
    const auto saved_parent = parent_;

    std::uniform_int_distribution<std::size_t> pick(0, pos_.size() - 1);
    const std::size_t c = pick(rng_);
    const int side = static_cast<int>(rng_() % 4);
    if (side_[c][static_cast<std::size_t>(side)] != -1) return;
    const std::size_t n = pos_.size();
    add_square(pos_[c] + kStep[static_cast<std::size_t>(side)]);
    glue(c, side, n);

    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t t = 0; t < n; ++t)
        for (int sd = 0; sd < 4; ++sd) {
          if (side_[n][static_cast<std::size_t>(sd)] != -1 || pos_[t] != pos_[n] + kStep[static_cast<std::size_t>(sd)]) continue;
          if (side_[t][static_cast<std::size_t>((sd + 2) % 4)] != -1) continue;
          bool shares = false;
          for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b)
              shares = shares || (pos_[n] + kCorner[a] == pos_[t] + kCorner[b] && find(4 * n + a) == find(4 * t + b));
          if (!shares) continue;
          glue(n, sd, t);
          changed = true;
        }
    }
    if (!build(pos_.size())) {
      pos_ = saved_pos;
      side_ = saved_side;
      parent_ = saved_parent;
    }
  }

  std::optional<quadfactor::QuadDisk> build(std::size_t count) const {
    std::map<std::size_t, quadfactor::VertexId> ids;
    std::vector<std::string> names;
    std::vector<quadfactor::SquareVertices> squares;
    for (std::size_t s = 0; s < count; ++s) {
      quadfactor::SquareVertices q{};
      for (std::size_t a = 0; a < 4; ++a) {
        const std::size_t root = find(4 * s + a);
        auto [it, fresh] = ids.emplace(root, static_cast<quadfactor::VertexId>(names.size()));
        if (fresh) names.push_back("v" + std::to_string(names.size()));
        q[a] = it->second;
      }
      squares.push_back(q);
    }
    try {
      return quadfactor::QuadDisk::build(squares, names);
    } catch (const quadfactor::DiskError&) {
      return std::nullopt;
    }
  }

  std::mt19937_64 rng_;
  std::vector<quadfactor::Point> pos_;
  std::vector<std::array<int, 4>> side_;
  std::vector<std::size_t> parent_;
};

// A strip of squares following a lattice walk, glued only between
// consecutive squares. Turning repeatedly the same way makes it wind over
// itself.
inline quadfactor::QuadDisk walk_strip(const std::vector<quadfactor::Point>& cells) {
  static constexpr std::array<quadfactor::Point, 4> corner{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  std::vector<std::size_t> parent(4 * cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t h) {
    while (parent[h] != h) h = parent[h];
    return h;
  };
  for (std::size_t i = 0; i + 1 < cells.size(); ++i)
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        if (cells[i] + corner[a] == cells[i + 1] + corner[b]) {
          const auto x = find(4 * i + a), y = find(4 * (i + 1) + b);
          if (x != y) parent[std::max(x, y)] = std::min(x, y);
        }
  std::vector<std::array<std::string, 4>> squares;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::array<std::string, 4> q;
    for (std::size_t a = 0; a < 4; ++a) q[a] = "p" + std::to_string(find(4 * i + a));
    squares.push_back(q);
  }
  return quadfactor::build_complex(squares);
}

// Eight squares circling one lattice point and then some: the developing map
// stacks squares 0 and 4.
inline quadfactor::QuadDisk spiral() {
  return walk_strip({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

// Non-board disks with interior vertices, from the grower.
inline std::vector<quadfactor::QuadDisk> stacked_disks(std::size_t count, std::size_t squares, std::uint64_t seed) {
  std::vector<quadfactor::QuadDisk> out;
  for (std::uint64_t s = seed; out.size() < count && s < seed + 200 * count; ++s) {
    ComplexGrower g(s);
    g.grow(squares);
    auto disk = g.disk();
    if (!quadfactor::is_board(disk) && disk.counts().interior_vertices > 0) out.push_back(std::move(disk));
  }
  return out;
}

}  // namespace fixtures
