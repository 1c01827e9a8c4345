#pragma once

#include <optional>

#include "staircase/dp.hpp"

namespace staircase {

enum class Corner {
  row_first,     // horizontal hand through p, then the cells below it
  column_first,  // cells above p, then the horizontal hand to its right
};

// Maximal one-turn staircase whose (potential) turning point is p, over the
// value held at p. Hands take every equal-valued cell of the half-row and
// half-column; gaps are skipped.
Staircase corner_staircase(const Matrix& m, Position p, Corner shape);

struct SigmaWitness {
  Staircase majority;       // one-turn staircase through the anchor
  Staircase minority;       // opposite-valued cells of the anchor's row
  Position anchor;          // lowest majority-valued cell of column 1
  int majority_value = 0;
  bool transposed = false;  // computed on the transpose when rows() > cols()
};

// Two value-disjoint staircases with |majority| + |minority| >=
// ceil(n/2) + N - 1 after orienting n <= N, certifying the lower bound on
// st0 + st1. Positions refer to the input matrix.
SigmaWitness sigma_witness(const Matrix& m);

enum class WitnessCase {
  trivial_row,
  trivial_column,
  obs9,
  case1,
  case2_sub1,
  case2_sub2,
};

// Execution record of theorem2_witness. Anchors and staircases are stated in
// the normalized coordinate system: the input transposed when `transposed`,
// then complemented when `complemented`. Primed staircases are mapped back
// into that same system; the primed side counts are measured on its 180
// degree rotation, where the primed construction runs.
struct WitnessTrace {
  bool complemented = false;
  bool transposed = false;
  WitnessCase case_taken = WitnessCase::trivial_row;

  int a = -1;     // value of the bottom-left cell of the normalized matrix
  int abar = -1;  // 1 - a

  std::optional<Position> a1, a2, a3, a4, a5, a6;
  std::optional<Position> a1p, a2p, a3p, a4p;

  std::optional<Staircase> s1, s2, s3, s4, s5, s6;
  std::optional<Staircase> s1p, s2p, s3p, s4p;
  std::optional<Staircase> obs9_minority;

  // side counts next to the anchors; -1 when the branch never computed them
  int x1 = -1, y0 = -1, z0 = -1, w1 = -1;
  int xap = -1, yabarp = -1, zabarp = -1, wap = -1;

  // hand sizes of the two corner staircases at a1 and its mirror
  int s1_h = -1, s1_v = -1, sap_h = -1, sap_v = -1;
};

struct Theorem2Result {
  Staircase witness;   // valid in the input matrix
  WitnessTrace trace;
};

/// ceil((10n - 7) / 12).
int theorem2_bound(int n);

// Constructs a staircase with at most 3 turning points in a square matrix.
// Its length is at least theorem2_bound(n) for every n except n = 2, where
// the two anti-diagonal matrices only admit length 1 (theorem2_bound(2) = 2
// overshoots the true minimum there).
Theorem2Result theorem2_witness(const Matrix& m);

// Identity 2|S1| + |S2| + |S3| + |S4| == 4n - 3 + x1 + y0 + z0 + w1, with
// the four side counts recounted directly from the matrix. Requires a trace
// whose run built all four corner staircases.
bool check_observation10(const Matrix& m, const WitnessTrace& t);

/// Same identity for the mirrored system, counted on the 180 degree rotation.
bool check_observation10_primed(const Matrix& m, const WitnessTrace& t);

}  // namespace staircase
