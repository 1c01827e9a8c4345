#include "staircase/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <cstring>
#include <thread>

namespace staircase {

std::string statistic_name(Statistic s, int turn_budget) {
  switch (s) {
    case Statistic::st:
      return "st";
    case Statistic::sigma:
      return "sigma";
    case Statistic::st_turn_budget:
      return "st-turns-" + std::to_string(turn_budget);
  }
  return "?";
}

namespace {

constexpr int kMaxSmallCols = 32;
constexpr int kMaxSmallCells = 62;

// Longest value-staircase over bit-packed rows (bit j = column j), aborting
// with `cap` as soon as the running maximum reaches it. Same recurrence as
// the general table, kept allocation-free for the enumeration loop.
inline int small_longest(const std::uint32_t* rows, int n, int N, int value,
                         int cap) {
  const std::uint32_t full =
      N == 32 ? 0xffffffffu : ((std::uint32_t{1} << N) - 1);
  std::int8_t col_best[kMaxSmallCols];
  std::memset(col_best, 0, sizeof(col_best));
  int best = 0;
  for (int i = n - 1; i >= 0; --i) {
    std::uint32_t bits = value ? rows[i] : (~rows[i] & full);
    int row_suffix = 0;
    while (bits) {
      const int j = 31 - std::countl_zero(bits);
      bits ^= std::uint32_t{1} << j;
      const int f = 1 + std::max(row_suffix, static_cast<int>(col_best[j]));
      if (f > best) {
        best = f;
        if (best >= cap) return cap;
      }
      row_suffix = std::max(row_suffix, f);
      col_best[j] = static_cast<std::int8_t>(f);
    }
  }
  return best;
}

// Turn-budgeted variant; layered suffix maxima per direction.
class SmallTurnEval {
 public:
  explicit SmallTurnEval(int k) : k_(k) {
    col_down_.assign(static_cast<std::size_t>(k + 1) * kMaxSmallCols, 0);
    row_right_.assign(k + 1, 0);
    new_r_.assign(k + 1, 0);
    new_d_.assign(k + 1, 0);
  }

  int longest(const std::uint32_t* rows, int n, int N, int value, int cap) {
    const std::uint32_t full =
        N == 32 ? 0xffffffffu : ((std::uint32_t{1} << N) - 1);
    std::fill(col_down_.begin(), col_down_.end(), 0);
    int best = 0;
    for (int i = n - 1; i >= 0; --i) {
      std::fill(row_right_.begin(), row_right_.end(), 0);
      std::uint32_t bits = value ? rows[i] : (~rows[i] & full);
      while (bits) {
        const int j = 31 - std::countl_zero(bits);
        bits ^= std::uint32_t{1} << j;
        const int here = 1 + std::max(row_right_[k_], col_down(k_, j));
        if (here > best) {
          best = here;
          if (best >= cap) return cap;
        }
        for (int t = 0; t <= k_; ++t) {
          new_r_[t] = 1 + std::max(row_right_[t], t > 0 ? col_down(t - 1, j) : 0);
          new_d_[t] = 1 + std::max(col_down(t, j), t > 0 ? row_right_[t - 1] : 0);
        }
        for (int t = 0; t <= k_; ++t) {
          row_right_[t] = std::max(row_right_[t], new_r_[t]);
          col_down(t, j) = std::max(col_down(t, j), new_d_[t]);
        }
      }
    }
    return best;
  }

 private:
  int& col_down(int t, int j) {
    return col_down_[static_cast<std::size_t>(t) * kMaxSmallCols + j];
  }

  int k_;
  std::vector<int> col_down_, row_right_, new_r_, new_d_;
};

struct Evaluator {
  Statistic stat;
  SmallTurnEval turn_eval;

  Evaluator(Statistic s, int k) : stat(s), turn_eval(s == Statistic::st_turn_budget ? k : 0) {}

  // Exact statistic when it is below cap, otherwise cap.
  int eval(const std::uint32_t* rows, int n, int N, int cap) {
    switch (stat) {
      case Statistic::st: {
        const int l0 = small_longest(rows, n, N, 0, cap);
        if (l0 >= cap) return cap;
        const int l1 = small_longest(rows, n, N, 1, cap);
        if (l1 >= cap) return cap;
        return std::max(l0, l1);
      }
      case Statistic::sigma: {
        const int l0 = small_longest(rows, n, N, 0, cap);
        if (l0 >= cap) return cap;
        const int l1 = small_longest(rows, n, N, 1, cap - l0);
        if (l0 + l1 >= cap) return cap;
        return l0 + l1;
      }
      case Statistic::st_turn_budget: {
        const int l0 = turn_eval.longest(rows, n, N, 0, cap);
        if (l0 >= cap) return cap;
        const int l1 = turn_eval.longest(rows, n, N, 1, cap);
        if (l1 >= cap) return cap;
        return std::max(l0, l1);
      }
    }
    return cap;
  }
};

// Row-major cell string order: cell (1,1) most significant. Codes lay rows
// out with bit (i0*N + j0) = cell (i0+1, j0+1).
std::uint64_t lex_key(std::uint64_t code, int n, int N) {
  std::uint64_t key = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t row = (code >> (i * N)) & ((std::uint64_t{1} << N) - 1);
    for (int j = 0; j < N; ++j) {
      key = (key << 1) | ((row >> j) & 1);
    }
  }
  return key;
}

Matrix decode(std::uint64_t code, int n, int N) {
  Matrix m(n, N);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < N; ++j) {
      if ((code >> (i * N + j)) & 1) m.set(i + 1, j + 1, 1);
    }
  }
  return m;
}

struct WorkerState {
  int best = INT_MAX;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;  // (lexkey, code)
};

}  // namespace

SearchReport exact_extremal(int n, int N, Statistic stat,
                            const SearchOptions& opt) {
  if (n < 1 || n > N) {
    throw std::invalid_argument("requires 1 <= n <= N");
  }
  const int cells = n * N;
  if (cells > opt.max_cells) {
    throw BudgetExceeded("search over " + std::to_string(n) + "x" +
                         std::to_string(N) + " needs " + std::to_string(cells) +
                         " cells, budget is " + std::to_string(opt.max_cells));
  }
  if (N > kMaxSmallCols || cells > kMaxSmallCells) {
    throw BudgetExceeded("enumeration supports at most 32 columns and 62 cells");
  }
  if (stat == Statistic::st_turn_budget && opt.turn_budget < 0) {
    throw std::invalid_argument("turn budget must be >= 0");
  }

  const auto start_time = std::chrono::steady_clock::now();
  const int threads_wanted =
      opt.threads > 0
          ? opt.threads
          : std::max(1u, std::thread::hardware_concurrency());
  // Candidates fix cell (1,1) = 0; the complement supplies the other half of
  // the space and preserves every supported statistic.
  const std::uint64_t outer = std::uint64_t{1} << (N - 1);  // even row-1 patterns
  const std::uint64_t inner = std::uint64_t{1} << (cells - N);
  const std::uint64_t total = outer * inner;
  const int T = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(threads_wanted), outer));

  std::atomic<int> global_best{INT_MAX};
  std::atomic<std::uint64_t> processed{0};
  std::vector<WorkerState> states(T);

  auto work = [&](int w) {
    WorkerState& st = states[w];
    Evaluator ev(stat, opt.turn_budget);
    std::uint32_t rows[kMaxSmallCells];
    const int upper_cap = 2 * (n + N);  // above any reachable statistic
    std::uint64_t since_tick = 0;
    for (std::uint64_t k = static_cast<std::uint64_t>(w); k < outer;
         k += static_cast<std::uint64_t>(T)) {
      rows[0] = static_cast<std::uint32_t>(k << 1);
      for (std::uint64_t h = 0; h < inner; ++h) {
        for (int i = 1; i < n; ++i) {
          rows[i] = static_cast<std::uint32_t>(
              (h >> ((i - 1) * N)) & ((std::uint64_t{1} << N) - 1));
        }
        const int bound = global_best.load(std::memory_order_relaxed);
        const int cap = bound == INT_MAX ? upper_cap : bound + 1;
        const int val = ev.eval(rows, n, N, cap);
        if (val < cap) {
          if (val < st.best) {
            st.best = val;
            st.samples.clear();
            int prev = global_best.load(std::memory_order_relaxed);
            while (val < prev && !global_best.compare_exchange_weak(
                                     prev, val, std::memory_order_relaxed)) {
            }
          }
          if (val == st.best &&
              static_cast<int>(st.samples.size()) <= opt.sample_limit) {
            const std::uint64_t code =
                (h << N) | static_cast<std::uint64_t>(rows[0]);
            const std::uint64_t key = lex_key(code, n, N);
            auto& v = st.samples;
            if (static_cast<int>(v.size()) < opt.sample_limit ||
                (!v.empty() && key < v.back().first)) {
              v.insert(std::lower_bound(v.begin(), v.end(),
                                        std::make_pair(key, code)),
                       {key, code});
              if (static_cast<int>(v.size()) > opt.sample_limit) v.pop_back();
            }
          }
        }
        if (++since_tick == 1u << 16) {
          processed.fetch_add(since_tick, std::memory_order_relaxed);
          since_tick = 0;
          if (w == 0 && opt.progress) {
            opt.progress(processed.load(std::memory_order_relaxed), total,
                         global_best.load(std::memory_order_relaxed));
          }
        }
      }
    }
    processed.fetch_add(since_tick, std::memory_order_relaxed);
  };

  if (T == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(T);
    for (int w = 0; w < T; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  SearchReport report;
  report.n = n;
  report.N = N;
  report.statistic = stat;
  report.turn_budget = stat == Statistic::st_turn_budget ? opt.turn_budget : -1;
  report.thread_count = T;
  report.matrices_enumerated = total;
  report.symmetry_factor = 2;

  int best = INT_MAX;
  for (const auto& st : states) best = std::min(best, st.best);
  report.exact_value = best;

  std::vector<std::pair<std::uint64_t, std::uint64_t>> merged;
  for (const auto& st : states) {
    if (st.best != best) continue;
    merged.insert(merged.end(), st.samples.begin(), st.samples.end());
  }
  std::sort(merged.begin(), merged.end());
  if (static_cast<int>(merged.size()) > opt.sample_limit) {
    merged.resize(opt.sample_limit);
  }
  for (const auto& [key, code] : merged) {
    report.minimizers_sample.push_back(decode(code, n, N));
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    start_time)
          .count();
  return report;
}

std::vector<ConjectureRow> conjecture_scan(int n_max,
                                           const SearchOptions& opt) {
  std::vector<ConjectureRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    const SearchReport rep = exact_extremal(n, n, Statistic::st, opt);
    rows.push_back({n, rep.exact_value, n - 1, rep.exact_value == n - 1});
  }
  return rows;
}

namespace {

bool lex_less(const Matrix& a, const Matrix& b) {
  for (int i = 1; i <= a.rows(); ++i) {
    const std::string ra = a.row_string(i);
    const std::string rb = b.row_string(i);
    if (ra != rb) return ra < rb;
  }
  return false;
}

}  // namespace

Matrix canonical_reduce(const Matrix& m) {
  std::vector<Matrix> orbit;
  orbit.push_back(m);
  orbit.push_back(rotate180(m));
  if (m.rows() == m.cols()) {
    orbit.push_back(transpose(m));
    orbit.push_back(rotate180(transpose(m)));
  }
  const std::size_t spatial = orbit.size();
  for (std::size_t i = 0; i < spatial; ++i) {
    orbit.push_back(complement(orbit[i]));
  }
  const Matrix* best = &orbit[0];
  for (const Matrix& cand : orbit) {
    if (lex_less(cand, *best)) best = &cand;
  }
  return *best;
}

TwoTurnProbe probe_two_turn_bound(int n, std::uint64_t sample_budget,
                                  std::uint64_t seed,
                                  const SearchOptions& opt) {
  TwoTurnProbe probe;
  probe.n = n;
  if (n * n <= opt.max_cells) {
    SearchOptions o = opt;
    o.turn_budget = 2;
    const SearchReport rep = exact_extremal(n, n, Statistic::st_turn_budget, o);
    probe.min_observed = rep.exact_value;
    probe.exact = true;
    probe.matrices_inspected = rep.matrices_enumerated;
    probe.attaining = rep.minimizers_sample;
    return probe;
  }
  probe.exact = false;
  probe.seed = seed;
  probe.prng = kPrngName;
  probe.min_observed = INT_MAX;
  const TurnBudget budget = TurnBudget::at_most(2);
  for (std::uint64_t t = 0; t < sample_budget; ++t) {
    // Per-trial seeds keep the result a prefix property of the budget.
    const std::uint64_t trial_seed = seed ^ (0x9e3779b97f4a7c15ull * (t + 1));
    const Matrix m = random_matrix(n, n, trial_seed, 0.5);
    const int val = std::max(longest_value_staircase_length(m, 0, budget),
                             longest_value_staircase_length(m, 1, budget));
    if (val < probe.min_observed) {
      probe.min_observed = val;
      probe.attaining.clear();
    }
    if (val == probe.min_observed &&
        static_cast<int>(probe.attaining.size()) < opt.sample_limit) {
      probe.attaining.push_back(m);
    }
    ++probe.matrices_inspected;
  }
  return probe;
}

}  // namespace staircase
