#pragma once

#include "staircase/matrix.hpp"

namespace staircase {

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Matrix with zeros exactly on the two corner triangles
// i + j <= floor(n/2) + 1 and i + j >= floor(n/2) + N + 1. Minimizes
// st0 + st1 for n <= N.
Matrix build_P(int n, int N);

// Wide-range extremal matrix, defined for N >= floor(5n/2) - 1. Its longest
// homogeneous staircase has length ceil((ceil(n/2) + N - 1) / 2), which is
// the exact minimum over all n x N matrices in this range.
Matrix build_Q(int n, int N);

// Middle-range construction, defined for n < N < floor(5n/2) - 1, with
// longest homogeneous staircase ceil((2n + N - 2) / 3).
Matrix build_R(int n, int N);

bool p_params_valid(int n, int N);
bool q_params_valid(int n, int N);
bool r_params_valid(int n, int N);

/// ceil(n/2) + N - 1, the exact minimum of st0 + st1 over n x N (n <= N).
int formula_sigma_P(int n, int N);

/// ceil((ceil(n/2) + N - 1) / 2); requires the Q range.
int formula_st_Q(int n, int N);

/// ceil((2n + N - 2) / 3); requires the R range.
int formula_st_R(int n, int N);

enum class BoundKind { proved_exact, upper_bound_only, conjectured };

struct StUpperBound {
  int value = 0;
  BoundKind kind = BoundKind::conjectured;
  friend bool operator==(const StUpperBound&, const StUpperBound&) = default;
};

// Best known upper bound on the minimum of st over n x N matrices:
// exact for N >= floor(5n/2) - 1, an upper bound in the middle range,
// and the conjectured n - 1 for square shapes below that range.
StUpperBound st_upper_bound(int n, int N);

/// ceil((ceil(n/2) + N - 1) / 2): every n x N matrix has a homogeneous
/// staircase at least this long (n <= N).
int st_lower_bound_from_sigma(int n, int N);

}  // namespace staircase
