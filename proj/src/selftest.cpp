#include "quadfactor/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "quadfactor/arithmetic.hpp"
#include "quadfactor/diagonals.hpp"
#include "quadfactor/oracles.hpp"
#include "quadfactor/surgery.hpp"

namespace quadfactor {

namespace {

template <typename F>
void run_check(InstanceReport& report, const char* name, F&& body) {
  try {
    std::string detail = body();
    if (!detail.empty()) report.failures.push_back(std::string(name) + ": " + detail);
  } catch (const std::exception& e) {
    report.failures.push_back(std::string(name) + ": exception: " + e.what());
  }
}

}  // namespace

std::size_t default_thread_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QUADFACTOR_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) n = std::min(n, static_cast<std::size_t>(cap));
  }
  return n;
}

InstanceReport check_instance(const QuadDisk& disk, std::size_t index,
                              const std::function<void(std::size_t, LDUFactorization&)>& tamper) {
  InstanceReport r;
  r.squares = disk.square_count();

  run_check(r, "validation", [&]() -> std::string {
    const auto& c = disk.counts();
    const auto euler = static_cast<std::int64_t>(c.vertices) - static_cast<std::int64_t>(c.edges) + static_cast<std::int64_t>(c.squares);
    if (euler != 1) return "Euler characteristic " + std::to_string(euler);
    if (4 * c.squares != 2 * c.interior_edges + c.boundary_edges) return "edge count identity";
    if (c.corners() != 4 + c.excess_boundary_degree()) return "corner count identity";
    return {};
  });

  run_check(r, "diagonals", [&]() -> std::string {
    r.good_diagonals = good_diagonals(disk).size();
    return {};
  });

  run_check(r, "surgery", [&]() -> std::string {
    const Diagonal d = select_diagonal(disk, true);
    const SurgeryPlan plan = plan_surgery(disk, d);
    const SurgeryResult result = cut_and_paste(disk, plan);
    if (result.remaining_squares() + plan.k + plan.k_prime != disk.square_count()) return "square count did not drop by k + k'";
    for (const auto& comp : result.components)
      if (!is_board(comp)) return "component is not a board";
    std::string why;
    if (!board_surgery_embeds(disk, plan, result, &why)) return "planar realisation failed: " + why;
    return {};
  });

  run_check(r, "factorization", [&]() -> std::string {
    const Bicoloring coloring = bicolor(disk);
    const IntMatrix b = black_to_white_matrix(disk, coloring);
    LDUFactorization f = ldu(disk, coloring, true);
    if (tamper) tamper(index, f);
    const auto verdict = verify_factorization(b, f);
    if (!verdict) return to_string(verdict.failure);

    r.rank = rank_via_ldu(f);
    const std::size_t q = rank_oracle(b), p2 = rank_oracle(b, 2), p3 = rank_oracle(b, 3);
    if (r.rank != q || q != p2 || q != p3)
      return "rank mismatch ldu=" + std::to_string(r.rank) + " Q=" + std::to_string(q) + " GF2=" + std::to_string(p2) +
             " GF3=" + std::to_string(p3);
    const auto snf = smith_normal_form(b);
    if (!snf.all_ones() || snf.factors.size() != q) return "invariant factor other than 1";
    if (b.rows() == b.cols()) {
      r.square_matrix = true;
      r.det = det_via_ldu(f);
      if (r.det < -1 || r.det > 1) return "determinant outside {-1,0,1}";
      if (det_oracle(b) != r.det) return "determinant differs from elimination";
      if (b.rows() <= kMaxMatchingSize && signed_matchings(b) != r.det) return "determinant differs from signed matchings";
    }
    return {};
  });
  return r;
}

SelftestReport selftest(const SelftestOptions& options) {
  SelftestReport report;
  report.instances = board_universe(options.max_cells);
  report.results.resize(report.instances.size());

  const std::size_t workers = std::max<std::size_t>(1, options.threads ? options.threads : default_thread_count());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < report.instances.size(); i = next++)
      report.results[i] = check_instance(report.instances[i].disk, i, options.tamper);
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  pool.clear();
  return report;
}

std::size_t SelftestReport::failures() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.failures.empty(); }));
}

std::string SelftestReport::text() const {
  struct Row {
    std::size_t boards = 0, square = 0, det_minus = 0, det_zero = 0, det_plus = 0, min_good = 0, failed = 0;
  };
  std::map<std::size_t, Row> rows;
  for (const auto& r : results) {
    Row& row = rows[r.squares];
    if (row.boards == 0 || r.good_diagonals < row.min_good) row.min_good = r.good_diagonals;
    ++row.boards;
    if (!r.failures.empty()) ++row.failed;
    if (r.square_matrix) {
      ++row.square;
      (r.det < 0 ? row.det_minus : r.det == 0 ? row.det_zero : row.det_plus)++;
    }
  }

  std::ostringstream os;
  os << "cells boards square det=-1 det=0 det=+1 min_good failed\n";
  for (const auto& [cells, row] : rows)
    os << cells << ' ' << row.boards << ' ' << row.square << ' ' << row.det_minus << ' ' << row.det_zero << ' ' << row.det_plus
       << ' ' << row.min_good << ' ' << row.failed << '\n';
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].failures.empty()) continue;
    os << "FAIL instance " << i << '\n';
    for (const auto& f : results[i].failures) os << "  " << f << '\n';
    os << instances[i].text();
  }
  os << "total " << results.size() << " boards, " << failures() << " failed\n";
  return os.str();
}

}  // namespace quadfactor
