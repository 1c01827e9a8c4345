#include "staircase/constructions.hpp"

#include <string>

namespace staircase {

namespace {

std::string dims(int n, int N) {
  return "(n=" + std::to_string(n) + ", N=" + std::to_string(N) + ")";
}

}  // namespace

bool p_params_valid(int n, int N) { return n >= 1 && n <= N; }

bool q_params_valid(int n, int N) {
  return n >= 1 && n <= N && N >= (5 * n) / 2 - 1;
}

bool r_params_valid(int n, int N) {
  return n >= 1 && n < N && N < (5 * n) / 2 - 1;
}

Matrix build_P(int n, int N) {
  if (!p_params_valid(n, N)) {
    throw std::invalid_argument("P requires 1 <= n <= N, got " + dims(n, N));
  }
  Matrix m(n, N);
  const int half = n / 2;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= N; ++j) {
      const bool zero = i + j <= half + 1 || i + j >= half + N + 1;
      m.set(i, j, zero ? 0 : 1);
    }
  }
  return m;
}

Matrix build_Q(int n, int N) {
  if (!q_params_valid(n, N)) {
    throw std::invalid_argument(
        "Q requires N >= floor(5n/2) - 1 = " + std::to_string((5 * n) / 2 - 1) +
        ", got " + dims(n, N));
  }
  Matrix m(n, N);
  const int top = ceil_div(n, 2);
  const int band = (top + N - 1) / 2;  // width of the zero parallelogram
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= N; ++j) {
      bool one = false;
      if (i <= top) {
        one = (i + j <= top + 1) || (top + band + 1 < i + j);
      } else {
        one = (top + N - band < i + j) && (i + j <= top + N);
      }
      m.set(i, j, one ? 1 : 0);
    }
  }
  return m;
}

Matrix build_R(int n, int N) {
  if (!r_params_valid(n, N)) {
    throw std::invalid_argument(
        "R requires n < N < floor(5n/2) - 1 = " +
        std::to_string((5 * n) / 2 - 1) + ", got " + dims(n, N));
  }
  Matrix m(n, N);
  const int top = ceil_div(n, 2);
  const int left = (N - n + 2) / 3;
  const int mid = ceil_div(2 * n + N - 2, 3);
  const int right = ceil_div(N - n - 1, 3);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= N; ++j) {
      bool one = false;
      if (i <= top) {
        one = (i + j <= left + 1) || (left + mid + 1 < i + j);
      } else {
        one = (n + left < i + j) && (i + j <= n + N - right);
      }
      m.set(i, j, one ? 1 : 0);
    }
  }
  return m;
}

int formula_sigma_P(int n, int N) {
  if (!p_params_valid(n, N)) {
    throw std::invalid_argument("requires 1 <= n <= N, got " + dims(n, N));
  }
  return ceil_div(n, 2) + N - 1;
}

int formula_st_Q(int n, int N) {
  if (!q_params_valid(n, N)) {
    throw std::invalid_argument("requires N >= floor(5n/2) - 1, got " +
                                dims(n, N));
  }
  return ceil_div(ceil_div(n, 2) + N - 1, 2);
}

int formula_st_R(int n, int N) {
  if (!r_params_valid(n, N)) {
    throw std::invalid_argument("requires n < N < floor(5n/2) - 1, got " +
                                dims(n, N));
  }
  return ceil_div(2 * n + N - 2, 3);
}

StUpperBound st_upper_bound(int n, int N) {
  if (!p_params_valid(n, N)) {
    throw std::invalid_argument("requires 1 <= n <= N, got " + dims(n, N));
  }
  if (q_params_valid(n, N)) {
    return {formula_st_Q(n, N), BoundKind::proved_exact};
  }
  if (r_params_valid(n, N)) {
    return {formula_st_R(n, N), BoundKind::upper_bound_only};
  }
  // square below the Q range: the conjectured exact value n - 1
  return {n - 1, BoundKind::conjectured};
}

int st_lower_bound_from_sigma(int n, int N) {
  if (!p_params_valid(n, N)) {
    throw std::invalid_argument("requires 1 <= n <= N, got " + dims(n, N));
  }
  return ceil_div(ceil_div(n, 2) + N - 1, 2);
}

}  // namespace staircase
