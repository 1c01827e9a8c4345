#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "staircase/dp.hpp"

namespace staircase {

enum class Statistic { st, sigma, st_turn_budget };

/// "st", "sigma", or "st-turns-<k>".
std::string statistic_name(Statistic s, int turn_budget = -1);

struct SearchOptions {
  int max_cells = 30;   // refuse instances with n*N beyond this
  int threads = 0;      // 0 = hardware concurrency
  int sample_limit = 10;
  int turn_budget = 2;  // used with Statistic::st_turn_budget
  // Called periodically from one worker with
  // (candidates processed, candidates total, best value so far).
  std::function<void(std::uint64_t, std::uint64_t, int)> progress;
};

struct SearchReport {
  int n = 0;
  int N = 0;
  Statistic statistic = Statistic::st;
  int turn_budget = -1;
  int exact_value = 0;
  // Lexicographically first minimizers, canonical w.r.t. complement
  // (their first cell is 0).
  std::vector<Matrix> minimizers_sample;
  std::uint64_t matrices_enumerated = 0;  // candidates evaluated
  std::uint64_t symmetry_factor = 2;      // full space / candidates
  double wall_seconds = 0.0;
  int thread_count = 1;
};

// Exact minimum of the statistic over all n x N matrices (n <= N), by
// exhaustive enumeration of the complement-canonical half of the space with
// shared-bound pruning. exact_value and minimizers_sample do not depend on
// the thread count.
SearchReport exact_extremal(int n, int N, Statistic stat,
                            const SearchOptions& opt = {});

struct ConjectureRow {
  int n = 0;
  int exact_st = 0;
  int expected = 0;  // n - 1
  bool holds = false;
};

/// Exhaustive st(n) versus n - 1 for 2 <= n <= n_max.
std::vector<ConjectureRow> conjecture_scan(int n_max,
                                           const SearchOptions& opt = {});

// Lexicographically least matrix in the orbit under complement, 180 degree
// rotation and (square only) transpose; all of these preserve st, sigma and
// the turn-budgeted statistics.
Matrix canonical_reduce(const Matrix& m);

struct TwoTurnProbe {
  int n = 0;
  int min_observed = 0;
  bool exact = false;  // exhaustive run; sampled results are lower evidence only
  std::uint64_t matrices_inspected = 0;
  std::uint64_t seed = 0;
  std::vector<Matrix> attaining;
  std::string prng;  // set when sampled
};

// Minimum over square matrices of the longest homogeneous staircase with at
// most 2 turns: exhaustive when n*n fits the budget, otherwise a seeded
// random sample of sample_budget matrices, explicitly flagged non-exact.
TwoTurnProbe probe_two_turn_bound(int n, std::uint64_t sample_budget,
                                  std::uint64_t seed,
                                  const SearchOptions& opt = {});

}  // namespace staircase
