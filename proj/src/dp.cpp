#include "staircase/dp.hpp"

#include <algorithm>
#include <vector>

namespace staircase {

TurnBudget TurnBudget::at_most(int k) {
  if (k < 0) throw std::invalid_argument("turn budget must be >= 0");
  return TurnBudget(k);
}

namespace {

// f[(i-1)*N + (j-1)] = longest value-staircase starting at (i, j); zero at
// cells of the other value. Reverse sweep with a running row suffix maximum
// and per-column suffix maxima gives O(nN).
std::vector<int> unbounded_table(const Matrix& m, int value) {
  const int n = m.rows(), N = m.cols();
  std::vector<int> f(static_cast<std::size_t>(n) * N, 0);
  std::vector<int> col_best(static_cast<std::size_t>(N) + 1, 0);
  for (int i = n; i >= 1; --i) {
    int row_suffix = 0;
    for (int j = N; j >= 1; --j) {
      if (m.at(i, j) != value) continue;
      const int v = 1 + std::max(row_suffix, col_best[j]);
      f[static_cast<std::size_t>(i - 1) * N + (j - 1)] = v;
      row_suffix = std::max(row_suffix, v);
      col_best[j] = v;  // v exceeds the old suffix maximum by construction
    }
  }
  return f;
}

Staircase reconstruct_unbounded(const Matrix& m, int value,
                                const std::vector<int>& f, int best) {
  const int n = m.rows(), N = m.cols();
  const auto F = [&](int i, int j) {
    return f[static_cast<std::size_t>(i - 1) * N + (j - 1)];
  };
  Position cur{};
  for (int i = 1; i <= n && cur.i == 0; ++i) {
    for (int j = 1; j <= N; ++j) {
      if (F(i, j) == best) {
        cur = {i, j};
        break;
      }
    }
  }
  Staircase s{value, {cur}};
  int remaining = best;
  while (remaining > 1) {
    bool moved = false;
    for (int j = cur.j + 1; j <= N && !moved; ++j) {
      if (m.at(cur.i, j) == value && F(cur.i, j) == remaining - 1) {
        cur = {cur.i, j};
        moved = true;
      }
    }
    for (int i = cur.i + 1; i <= n && !moved; ++i) {
      if (m.at(i, cur.j) == value && F(i, cur.j) == remaining - 1) {
        cur = {i, cur.j};
        moved = true;
      }
    }
    s.cells.push_back(cur);
    --remaining;
  }
  return s;
}

// Layered tables for the turn-budgeted case.
//   hr[t](i,j): longest staircase from (i, j) whose incoming step direction
//   is "right", spending at most t further turns; hd analogous for "down".
//   ans(i,j): longest staircase starting at (i, j) (first direction free).
struct TurnTables {
  int n = 0, N = 0, k = 0;
  std::vector<std::vector<int>> hr, hd;  // one table per layer
  std::vector<int> ans;

  int idx(int i, int j) const { return (i - 1) * N + (j - 1); }
};

TurnTables turn_tables(const Matrix& m, int value, int k) {
  const int n = m.rows(), N = m.cols();
  TurnTables t;
  t.n = n;
  t.N = N;
  t.k = k;
  t.hr.assign(k + 1, std::vector<int>(static_cast<std::size_t>(n) * N, 0));
  t.hd.assign(k + 1, std::vector<int>(static_cast<std::size_t>(n) * N, 0));
  t.ans.assign(static_cast<std::size_t>(n) * N, 0);

  // col_down[t][j]: max hd[t] over processed rows (strictly below) in column j
  std::vector<std::vector<int>> col_down(k + 1,
                                         std::vector<int>(N + 1, 0));
  std::vector<int> row_right(k + 1);
  std::vector<int> new_r(k + 1), new_d(k + 1);
  for (int i = n; i >= 1; --i) {
    std::fill(row_right.begin(), row_right.end(), 0);
    for (int j = N; j >= 1; --j) {
      if (m.at(i, j) != value) continue;
      const int id = t.idx(i, j);
      t.ans[id] = 1 + std::max(row_right[k], col_down[k][j]);
      for (int layer = 0; layer <= k; ++layer) {
        const int turn_r = layer > 0 ? col_down[layer - 1][j] : 0;
        const int turn_d = layer > 0 ? row_right[layer - 1] : 0;
        new_r[layer] = 1 + std::max(row_right[layer], turn_r);
        new_d[layer] = 1 + std::max(col_down[layer][j], turn_d);
      }
      for (int layer = 0; layer <= k; ++layer) {
        t.hr[layer][id] = new_r[layer];
        t.hd[layer][id] = new_d[layer];
        row_right[layer] = std::max(row_right[layer], new_r[layer]);
        col_down[layer][j] = std::max(col_down[layer][j], new_d[layer]);
      }
    }
  }
  return t;
}

Staircase reconstruct_turns(const Matrix& m, int value, const TurnTables& t,
                            int best) {
  const int n = t.n, N = t.N;
  Position cur{};
  for (int i = 1; i <= n && cur.i == 0; ++i) {
    for (int j = 1; j <= N; ++j) {
      if (t.ans[t.idx(i, j)] == best) {
        cur = {i, j};
        break;
      }
    }
  }
  Staircase s{value, {cur}};
  int remaining = best;
  bool moving_right = true;
  int layer = t.k;
  bool first = true;
  while (remaining > 1) {
    bool moved = false;
    // right candidates first, then down; turning consumes a layer
    const int right_layer = first ? t.k : (moving_right ? layer : layer - 1);
    if (right_layer >= 0) {
      for (int j = cur.j + 1; j <= N && !moved; ++j) {
        if (m.at(cur.i, j) == value &&
            t.hr[right_layer][t.idx(cur.i, j)] == remaining - 1) {
          cur = {cur.i, j};
          layer = right_layer;
          moving_right = true;
          moved = true;
        }
      }
    }
    const int down_layer = first ? t.k : (moving_right ? layer - 1 : layer);
    if (!moved && down_layer >= 0) {
      for (int i = cur.i + 1; i <= n && !moved; ++i) {
        if (m.at(i, cur.j) == value &&
            t.hd[down_layer][t.idx(i, cur.j)] == remaining - 1) {
          cur = {i, cur.j};
          layer = down_layer;
          moving_right = false;
          moved = true;
        }
      }
    }
    first = false;
    s.cells.push_back(cur);
    --remaining;
  }
  return s;
}

}  // namespace

LongestResult longest_value_staircase(const Matrix& m, int value,
                                      TurnBudget budget) {
  if (value != 0 && value != 1) {
    throw std::invalid_argument("value must be 0 or 1");
  }
  // Any staircase has at most n + N - 3 turns, so large budgets are the
  // unbounded case.
  const bool unbounded =
      budget.is_unbounded() || budget.k() >= m.rows() + m.cols() - 2;
  if (unbounded) {
    const auto f = unbounded_table(m, value);
    const int best = *std::max_element(f.begin(), f.end());
    if (best == 0) return {0, std::nullopt};
    return {best, reconstruct_unbounded(m, value, f, best)};
  }
  const auto t = turn_tables(m, value, budget.k());
  const int best = *std::max_element(t.ans.begin(), t.ans.end());
  if (best == 0) return {0, std::nullopt};
  return {best, reconstruct_turns(m, value, t, best)};
}

int longest_value_staircase_length(const Matrix& m, int value,
                                   TurnBudget budget) {
  if (value != 0 && value != 1) {
    throw std::invalid_argument("value must be 0 or 1");
  }
  const bool unbounded =
      budget.is_unbounded() || budget.k() >= m.rows() + m.cols() - 2;
  if (unbounded) {
    const auto f = unbounded_table(m, value);
    return *std::max_element(f.begin(), f.end());
  }
  const auto t = turn_tables(m, value, budget.k());
  return *std::max_element(t.ans.begin(), t.ans.end());
}

StProfile st_profile(const Matrix& m) {
  StProfile p;
  p.st0 = longest_value_staircase_length(m, 0);
  p.st1 = longest_value_staircase_length(m, 1);
  p.st = std::max(p.st0, p.st1);
  p.sigma = p.st0 + p.st1;
  return p;
}

int brute_force_longest(const Matrix& m, int value, TurnBudget budget,
                        int max_cells) {
  if (value != 0 && value != 1) {
    throw std::invalid_argument("value must be 0 or 1");
  }
  if (m.rows() * m.cols() > max_cells) {
    throw BudgetExceeded("instance too large for brute-force enumeration (" +
                         std::to_string(m.rows() * m.cols()) + " > " +
                         std::to_string(max_cells) + " cells)");
  }
  const int n = m.rows(), N = m.cols();
  int best = 0;

  // dir: 0 none yet, 1 right, 2 down
  auto dfs = [&](auto&& self, int i, int j, int dir, int turns_left,
                 int len) -> void {
    best = std::max(best, len);
    for (int j2 = j + 1; j2 <= N; ++j2) {
      if (m.at(i, j2) != value) continue;
      const int cost = dir == 2 ? 1 : 0;
      if (cost <= turns_left) self(self, i, j2, 1, turns_left - cost, len + 1);
    }
    for (int i2 = i + 1; i2 <= n; ++i2) {
      if (m.at(i2, j) != value) continue;
      const int cost = dir == 1 ? 1 : 0;
      if (cost <= turns_left) self(self, i2, j, 2, turns_left - cost, len + 1);
    }
  };

  const int turns_left = budget.is_unbounded() ? n + N : budget.k();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= N; ++j) {
      if (m.at(i, j) == value) dfs(dfs, i, j, 0, turns_left, 1);
    }
  }
  return best;
}

}  // namespace staircase
