#pragma once

#include <string>
#include <vector>

#include "staircase/matrix.hpp"

namespace staircase {

// Sequence of equal-valued cells in which every step moves right within a
// row or down within a column; consecutive cells need not be adjacent.
struct Staircase {
  int value = 0;
  std::vector<Position> cells;

  int length() const { return static_cast<int>(cells.size()); }
  bool empty() const { return cells.empty(); }
  friend bool operator==(const Staircase&, const Staircase&) = default;
};

/// Number of cells whose incoming and outgoing steps differ in direction.
/// Assumes the step structure is valid; 0 for single-row/column sequences.
int turns(const Staircase& s);

struct Validation {
  bool valid = false;
  std::string reason;
};

/// Checks bounds, value homogeneity and the step rule against m.
Validation validate_staircase(const Matrix& m, const Staircase& s);

}  // namespace staircase
