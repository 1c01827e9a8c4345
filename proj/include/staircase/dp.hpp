#pragma once

#include <optional>

#include "staircase/staircase.hpp"

namespace staircase {

/// Cap on the number of turning points a staircase may contain.
class TurnBudget {
 public:
  static TurnBudget unbounded() { return TurnBudget(-1); }
  static TurnBudget at_most(int k);

  bool is_unbounded() const { return k_ < 0; }
  int k() const { return k_; }

  friend bool operator==(const TurnBudget&, const TurnBudget&) = default;

 private:
  explicit TurnBudget(int k) : k_(k) {}
  int k_;
};

struct LongestResult {
  int length = 0;
  std::optional<Staircase> witness;  // engaged iff length > 0
};

// Exact maximum length of a value-homogeneous staircase within the turn
// budget, with a witness attaining it. Deterministic tie-break: smallest
// start (i, j), then right steps preferred over down steps.
LongestResult longest_value_staircase(const Matrix& m, int value,
                                      TurnBudget budget = TurnBudget::unbounded());

/// Length-only variant; skips witness reconstruction.
int longest_value_staircase_length(const Matrix& m, int value,
                                   TurnBudget budget = TurnBudget::unbounded());

// The four summary statistics of a matrix. A value that does not occur at
// all contributes length 0.
struct StProfile {
  int st0 = 0;
  int st1 = 0;
  int st = 0;     // max(st0, st1)
  int sigma = 0;  // st0 + st1
  friend bool operator==(const StProfile&, const StProfile&) = default;
};

StProfile st_profile(const Matrix& m);

// Independent oracle with the same contract as longest_value_staircase:
// depth-first enumeration of every staircase, no suffix maxima. Exponential,
// guarded by max_cells.
int brute_force_longest(const Matrix& m, int value,
                        TurnBudget budget = TurnBudget::unbounded(),
                        int max_cells = 25);

}  // namespace staircase
