#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "quadfactor/enumerate.hpp"
#include "quadfactor/factorization.hpp"

namespace quadfactor {

/// Outcome of the invariant suite on one board.
struct InstanceReport {
  std::size_t squares = 0;
  bool square_matrix = false;
  std::int64_t det = 0;
  std::size_t rank = 0;
  std::size_t good_diagonals = 0;
  std::vector<std::string> failures;  // "<check>: <detail>"
};

struct SelftestOptions {
  std::size_t max_cells = 6;
  /// Worker count; 0 means hardware concurrency capped by QUADFACTOR_THREADS.
  std::size_t threads = 0;
  /// Test hook run on every factorization before it is checked.
  std::function<void(std::size_t instance, LDUFactorization&)> tamper;
};

struct SelftestReport {
  std::vector<BoardInstance> instances;
  std::vector<InstanceReport> results;

  std::size_t failures() const;
  /// Deterministic text: per-size summary, then every failure with the
  /// offending board.
  std::string text() const;
};

InstanceReport check_instance(const QuadDisk& disk, std::size_t index = 0,
                              const std::function<void(std::size_t, LDUFactorization&)>& tamper = {});

SelftestReport selftest(const SelftestOptions& options);

/// Worker count from QUADFACTOR_THREADS and the hardware.
std::size_t default_thread_count();

}  // namespace quadfactor
