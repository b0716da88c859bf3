#include "quadfactor/surgery.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace quadfactor {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

VertexId opposite_vertex(const QuadDisk& disk, SquareId s, VertexId v) {
  return disk.square(s)[static_cast<std::size_t>((disk.position(s, v) + 2) % 4)];
}

// The neighbour of v in square s that is not `not_this`.
VertexId other_neighbor(const QuadDisk& disk, SquareId s, VertexId v, VertexId not_this) {
  const auto& q = disk.square(s);
  const int i = disk.position(s, v);
  const VertexId a = q[static_cast<std::size_t>((i + 1) % 4)], b = q[static_cast<std::size_t>((i + 3) % 4)];
  check_invariant(a == not_this || b == not_this, "surgery: vertex not adjacent in square");
  return a == not_this ? b : a;
}

}  // namespace

std::vector<SquareId> SurgeryPlan::removed() const {
  std::vector<SquareId> out = diagonal.squares;
  out.insert(out.end(), left_squares.begin(), left_squares.end());
  return out;
}

SurgeryPlan plan_surgery(const QuadDisk& disk, const Diagonal& diagonal, SidePolicy policy) {
  if (!diagonal.good()) throw InputError("plan_surgery: diagonal is bad");
  const std::size_t k = diagonal.k();
  const auto& s = diagonal.squares;
  const auto& v = diagonal.vertices;

  SurgeryPlan plan;
  plan.diagonal = diagonal;
  plan.k = k;

  if (diagonal.kind == DiagonalKind::balanced) {
    // The side holding a square next to s_k at v_k must be excised.
    const Side forced = disk.is_boundary_edge(v[k], diagonal.left.back()) ? Side::right : Side::left;
    if ((policy == SidePolicy::left && forced != Side::left) || (policy == SidePolicy::right && forced != Side::right))
      throw InputError("plan_surgery: balanced diagonal forces the other side");
    plan.chosen = forced;
    plan.k_prime = k;
  } else {
    plan.k_prime = k - 1;
    if (policy == SidePolicy::left) {
      plan.chosen = Side::left;
    } else if (policy == SidePolicy::right) {
      plan.chosen = Side::right;
    } else if (k == 1) {
      plan.chosen = Side::left;
    } else if (diagonal.monotone_right != diagonal.monotone_left) {
      // Keep the monotone arc on the side that moves.
      plan.chosen = diagonal.monotone_right ? Side::left : Side::right;
    } else {
      const auto l1 = disk.across(s[0], v[1], diagonal.left[0]);
      const auto r1 = disk.across(s[0], diagonal.right[0], v[1]);
      check_invariant(l1 && r1, "plan_surgery: interior v_1 without both flank squares");
      plan.chosen = *l1 < *r1 ? Side::left : Side::right;
    }
  }

  const Side left = plan.chosen, right = other(left);
  auto lv = [&](std::size_t i) { return diagonal.side_vertex(left, i); };   // v^l_{i-1/2}
  auto rv = [&](std::size_t i) { return diagonal.side_vertex(right, i); };  // v^r_{i-1/2}

  std::vector<VertexId> far_left;  // v^ll_i
  for (std::size_t i = 1; i <= plan.k_prime; ++i) {
    const auto sl = disk.across(s[i - 1], v[i], lv(i));
    check_invariant(sl.has_value(), "plan_surgery: missing left square s^l_" + std::to_string(i));
    plan.left_squares.push_back(*sl);
    far_left.push_back(opposite_vertex(disk, *sl, v[i]));
    if (i < k) check_invariant(other_neighbor(disk, *sl, v[i], lv(i)) == lv(i + 1), "plan_surgery: left square does not meet s_{i+1}");
  }
  for (std::size_t i = 1; i < k; ++i) {
    const auto sr = disk.across(s[i - 1], rv(i), v[i]);
    check_invariant(sr.has_value(), "plan_surgery: missing right square s^r_" + std::to_string(i));
    plan.right_squares.push_back(*sr);
  }

  if (k > 1) {
    for (std::size_t i = 1; i <= k; ++i) {
      plan.zigzag_left.push_back(lv(i));
      plan.zigzag_right.push_back(rv(i));
      if (i < k) {
        plan.zigzag_left.push_back(far_left[i - 1]);
        plan.zigzag_right.push_back(v[i]);
      }
    }
    plan.zigzag_left_plus = plan.zigzag_left;
    if (plan.balanced()) {
      plan.zigzag_left_plus.push_back(far_left[k - 1]);
      plan.zigzag_left_plus.push_back(other_neighbor(disk, plan.left_squares.back(), v[k], lv(k)));
    }
  }

  // Side of every other square by flood fill that never crosses the diagonal.
  constexpr auto unset = static_cast<Region>(255);
  plan.region.assign(disk.square_count(), unset);
  for (SquareId d : s) plan.region[d] = Region::diagonal;
  std::deque<SquareId> queue;
  auto seed = [&](SquareId sq, Region r) {
    check_invariant(plan.region[sq] == unset || plan.region[sq] == r, "plan_surgery: square on both sides");
    if (plan.region[sq] == unset) {
      plan.region[sq] = r;
      queue.push_back(sq);
    }
  };
  for (SquareId sq : plan.left_squares) seed(sq, Region::left);
  for (SquareId sq : plan.right_squares) seed(sq, Region::right);
  while (!queue.empty()) {
    const SquareId a = queue.front();
    queue.pop_front();
    for (int side = 0; side < 4; ++side) {
      const auto b = disk.neighbor(a, side);
      if (!b || plan.region[*b] == Region::diagonal) continue;
      seed(*b, plan.region[a]);
    }
  }
  for (SquareId sq = 0; sq < disk.square_count(); ++sq)
    check_invariant(plan.region[sq] != unset, "plan_surgery: square not reached by side flood fill");
  return plan;
}

ComponentSplit split_components(std::span<const SquareVertices> squares, std::span<const std::string> vertex_names) {
  const std::size_t n = squares.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::map<std::pair<VertexId, VertexId>, std::size_t> first_owner;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < 4; ++i) {
      auto a = squares[s][i], b = squares[s][(i + 1) % 4];
      if (a > b) std::swap(a, b);
      auto [it, inserted] = first_owner.try_emplace({a, b}, s);
      if (!inserted) parent[find_root(parent, s)] = find_root(parent, it->second);
    }

  ComponentSplit out;
  std::unordered_map<std::size_t, std::size_t> component_of_root;
  for (std::size_t s = 0; s < n; ++s) {
    const auto root = find_root(parent, s);
    auto [it, inserted] = component_of_root.try_emplace(root, out.members.size());
    if (inserted) out.members.emplace_back();
    out.members[it->second].push_back(s);
  }
  for (const auto& members : out.members) {
    std::unordered_map<VertexId, VertexId> local;
    std::vector<std::string> names;
    std::vector<SquareVertices> tuples;
    for (std::size_t s : members) {
      SquareVertices q{};
      for (std::size_t i = 0; i < 4; ++i) {
        auto [it, inserted] = local.try_emplace(squares[s][i], static_cast<VertexId>(names.size()));
        if (inserted) names.push_back(vertex_names[squares[s][i]]);
        q[i] = it->second;
      }
      tuples.push_back(q);
    }
    out.disks.push_back(QuadDisk::build(std::move(tuples), std::move(names)));
  }
  return out;
}

std::size_t SurgeryResult::remaining_squares() const {
  std::size_t total = 0;
  for (const auto& c : components) total += c.square_count();
  return total;
}

std::vector<SquareId> SurgeryResult::removed_of(const Bicoloring& coloring, Color c) const {
  std::vector<SquareId> out;
  for (SquareId s : removed_diagonal)
    if (coloring.color(s) == c) out.push_back(s);
  for (SquareId s : removed_left)
    if (coloring.color(s) == c) out.push_back(s);
  return out;
}

SurgeryResult cut_and_paste(const QuadDisk& disk, const SurgeryPlan& plan) {
  SurgeryResult result;
  result.removed_diagonal = plan.diagonal.squares;
  result.removed_left = plan.left_squares;
  std::vector<bool> removed(disk.square_count(), false);
  for (SquareId s : plan.removed()) removed[s] = true;

  std::vector<VertexId> rename(disk.vertex_count());
  std::iota(rename.begin(), rename.end(), 0);
  if (plan.k > 1) {
    check_invariant(plan.zigzag_left.size() == plan.zigzag_right.size(), "cut_and_paste: zig-zag length mismatch");
    const std::set<VertexId> right_side(plan.zigzag_right.begin(), plan.zigzag_right.end());
    for (std::size_t j = 0; j < plan.zigzag_left.size(); ++j) {
      check_invariant(!right_side.count(plan.zigzag_left[j]), "cut_and_paste: zig-zags intersect");
      rename[plan.zigzag_left[j]] = plan.zigzag_right[j];
      result.identification.emplace_back(plan.zigzag_left[j], plan.zigzag_right[j]);
    }
  }

  std::vector<SquareVertices> glued;
  std::vector<SquareId> origin;
  for (SquareId s = 0; s < disk.square_count(); ++s) {
    if (removed[s]) continue;
    SquareVertices q = disk.square(s);
    for (auto& v : q) {
      if (rename[v] != v)
        check_invariant(plan.region[s] == Region::left, "cut_and_paste: right square touches the left zig-zag");
      v = rename[v];
    }
    glued.push_back(q);
    origin.push_back(s);
  }
  {
    std::set<std::array<VertexId, 4>> cells;
    for (auto q : glued) {
      std::sort(q.begin(), q.end());
      check_invariant(cells.insert(q).second, "cut_and_paste: identification merges two squares");
    }
  }

  result.relabel.assign(disk.square_count(), std::nullopt);
  if (glued.empty()) return result;

  ComponentSplit split;
  try {
    split = split_components(glued, disk.vertex_names());
  } catch (const DiskError& e) {
    throw InvariantError(std::string("cut_and_paste: glued piece is not a disk: ") + e.what());
  }

  std::vector<std::set<VertexId>> vertex_sets;
  for (std::size_t c = 0; c < split.members.size(); ++c) {
    std::vector<SquareId> originals;
    std::set<VertexId> verts;
    const auto& comp = split.disks[c];
    for (std::size_t local = 0; local < split.members[c].size(); ++local) {
      const std::size_t g = split.members[c][local];
      originals.push_back(origin[g]);
      result.relabel[origin[g]] = std::make_pair(c, static_cast<SquareId>(local));
      verts.insert(glued[g].begin(), glued[g].end());
      // Gluing must respect orientation: the component keeps every tuple as given.
      for (std::size_t i = 0; i < 4; ++i)
        check_invariant(comp.vertex_name(comp.square(static_cast<SquareId>(local))[i]) == disk.vertex_name(glued[g][i]),
                        "cut_and_paste: gluing reverses orientation");
    }
    result.component_squares.push_back(std::move(originals));
    vertex_sets.push_back(std::move(verts));
  }
  for (std::size_t a = 0; a < vertex_sets.size(); ++a)
    for (std::size_t b = a + 1; b < vertex_sets.size(); ++b) {
      std::size_t shared = 0;
      for (VertexId v : vertex_sets[a]) shared += vertex_sets[b].count(v);
      check_invariant(shared <= 1, "cut_and_paste: components share more than one vertex");
    }
  result.components = std::move(split.disks);
  return result;
}

bool board_surgery_embeds(const QuadDisk& board, const SurgeryPlan& plan, const SurgeryResult& result, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  const auto map = develop(board);
  if (!is_board(board, map)) return fail("input is not a board");

  Point shift{0, 0};
  if (plan.k > 1) shift = map.image(plan.zigzag_left.front()) - map.image(plan.zigzag_right.front());

  std::set<Point> original_cells;
  for (SquareId s = 0; s < board.square_count(); ++s) original_cells.insert(map.cell(s));

  std::set<Point> used_cells;
  for (std::size_t c = 0; c < result.components.size(); ++c) {
    const auto& comp = result.components[c];
    std::vector<std::optional<Point>> vertex_image(comp.vertex_count());
    for (SquareId local = 0; local < comp.square_count(); ++local) {
      const SquareId s = result.component_squares[c][local];
      const Point offset = plan.region[s] == Region::right ? shift : Point{0, 0};
      auto placement = map.placement(s);
      for (auto& p : placement) p = p + offset;
      for (std::size_t i = 0; i < 4; ++i) {
        auto& img = vertex_image[comp.square(local)[i]];
        if (img && *img != placement[i]) return fail("gluing does not match the translated right region");
        img = placement[i];
      }
      const Point cell = *std::min_element(placement.begin(), placement.end());
      if (!original_cells.count(cell)) return fail("component leaves the original board");
      if (!used_cells.insert(cell).second) return fail("components overlap");
    }
    std::set<Point> distinct;
    for (const auto& img : vertex_image) distinct.insert(*img);
    if (distinct.size() != comp.vertex_count()) return fail("component touches itself");
  }
  return true;
}

}  // namespace quadfactor
