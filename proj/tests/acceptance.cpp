// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Criteria cover oracle equivalence, the closed forms for the P/Q/R
// families, the constructive lower-bound witnesses, the counting identity,
// exhaustive extremal searches, determinism and a throughput floor.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "staircase/constructions.hpp"
#include "staircase/dp.hpp"
#include "staircase/json_io.hpp"
#include "staircase/search.hpp"
#include "staircase/witness.hpp"

using namespace staircase;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1. dp == brute force on 1000 seeded random matrices, n,N <= 5, budgets
//    k in {0,1,2,3,unbounded}, both values.
Outcome criterion1() {
  std::mt19937_64 gen(20250810);
  const TurnBudget budgets[] = {TurnBudget::at_most(0), TurnBudget::at_most(1),
                                TurnBudget::at_most(2), TurnBudget::at_most(3),
                                TurnBudget::unbounded()};
  long comparisons = 0, mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 5);
    const int N = 1 + static_cast<int>(gen() % 5);
    const double density = 0.2 + 0.6 * (trial % 7) / 6.0;
    const Matrix m = random_matrix(n, N, gen(), density);
    for (int value : {0, 1}) {
      for (const TurnBudget& b : budgets) {
        ++comparisons;
        if (longest_value_staircase_length(m, value, b) !=
            brute_force_longest(m, value, b)) {
          ++mismatches;
        }
      }
    }
  }
  return {mismatches == 0,
          fmt("%ld comparisons, %ld mismatches", comparisons, mismatches)};
}

// 2. st0(P) = ceil(n/2), st1(P) = N-1 for all 1 <= n <= N <= 60.
Outcome criterion2() {
  long checked = 0, failed = 0;
  for (int n = 1; n <= 60; ++n) {
    for (int N = n; N <= 60; ++N) {
      const StProfile p = st_profile(build_P(n, N));
      ++checked;
      if (p.st0 != ceil_div(n, 2) || p.st1 != N - 1) ++failed;
    }
  }
  return {failed == 0, fmt("%ld shapes, %ld failures", checked, failed)};
}

// 3. (a) exhaustive minimum of st0+st1 equals ceil(n/2)+N-1 for nN <= 20;
//    (b) the two-staircase witness certifies the lower bound on 10^4 random
//    matrices up to 40x60.
Outcome criterion3() {
  long failed = 0;
  int pairs = 0;
  for (int n = 1; n <= 20; ++n) {
    for (int N = n; n * N <= 20; ++N) {
      ++pairs;
      if (exact_extremal(n, N, Statistic::sigma).exact_value !=
          formula_sigma_P(n, N)) {
        ++failed;
      }
    }
  }
  std::mt19937_64 gen(3);
  long witness_failed = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 40);
    const int N = n + static_cast<int>(gen() % (60 - n + 1));
    const Matrix m = random_matrix(n, N, gen(), 0.5);
    const SigmaWitness w = sigma_witness(m);
    const bool ok =
        validate_staircase(m, w.majority).valid &&
        (w.minority.empty() || validate_staircase(m, w.minority).valid) &&
        w.majority.length() + w.minority.length() >= ceil_div(n, 2) + N - 1;
    if (!ok) ++witness_failed;
  }
  return {failed == 0 && witness_failed == 0,
          fmt("%d exhaustive pairs (%ld failures), 10000 witnesses (%ld "
              "failures)",
              pairs, failed, witness_failed)};
}

// 4. st(Q) matches its closed form on every valid shape with nN <= 4000;
//    exhaustive st(2,4) = 2 and st(2,5) = 3.
Outcome criterion4() {
  long pairs = 0, failed = 0;
  for (int n = 1; n * std::max(n, (5 * n) / 2 - 1) <= 4000; ++n) {
    for (int N = std::max(n, (5 * n) / 2 - 1); n * N <= 4000; ++N) {
      ++pairs;
      if (st_profile(build_Q(n, N)).st != formula_st_Q(n, N)) ++failed;
    }
  }
  const bool e1 = exact_extremal(2, 4, Statistic::st).exact_value == 2;
  const bool e2 = exact_extremal(2, 5, Statistic::st).exact_value == 3;
  return {failed == 0 && e1 && e2,
          fmt("%ld shapes (%ld failures), st(2,4)=2 %s, st(2,5)=3 %s", pairs,
              failed, e1 ? "ok" : "FAIL", e2 ? "ok" : "FAIL")};
}

// 5. st(R) matches its closed form on every valid shape with nN <= 4000, and
//    the exhaustive minimum stays at or below that bound wherever the search
//    budget allows.
Outcome criterion5() {
  long pairs = 0, failed = 0;
  for (int n = 1; n * (n + 1) <= 4000; ++n) {
    for (int N = n + 1; N < (5 * n) / 2 - 1 && n * N <= 4000; ++N) {
      ++pairs;
      if (st_profile(build_R(n, N)).st != formula_st_R(n, N)) ++failed;
    }
  }
  long bound_failed = 0;
  int enumerable = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int N = n + 1; N < (5 * n) / 2 - 1 && n * N <= 30; ++N) {
      ++enumerable;
      if (exact_extremal(n, N, Statistic::st).exact_value >
          formula_st_R(n, N)) {
        ++bound_failed;
      }
    }
  }
  return {failed == 0 && bound_failed == 0,
          fmt("%ld shapes (%ld failures), %d exhaustive pairs (%ld above the "
              "bound)",
              pairs, failed, enumerable, bound_failed)};
}

struct WitnessCorpusResult {
  long runs = 0;
  long witness_failures = 0;
  long identity_checks = 0;
  long identity_failures = 0;
  std::vector<std::string> failing_examples;
};

void run_witness_case(const Matrix& m, WitnessCorpusResult& r) {
  const int n = m.rows();
  const auto [witness, trace] = theorem2_witness(m);
  ++r.runs;
  const bool ok = validate_staircase(m, witness).valid && turns(witness) <= 3 &&
                  witness.length() >= theorem2_bound(n);
  if (!ok) {
    ++r.witness_failures;
    if (r.failing_examples.size() < 4) {
      std::string rows;
      for (int i = 1; i <= n; ++i) {
        if (i > 1) rows += '|';
        rows += m.row_string(i);
      }
      r.failing_examples.push_back(fmt("%s (length %d < %d)", rows.c_str(),
                                       witness.length(), theorem2_bound(n)));
    }
  }
  if (trace.s4.has_value()) {
    ++r.identity_checks;
    if (!check_observation10(m, trace)) ++r.identity_failures;
  }
  if (trace.s4p.has_value()) {
    ++r.identity_checks;
    if (!check_observation10_primed(m, trace)) ++r.identity_failures;
  }
}

// 6 + 7 share one corpus: every square matrix with n <= 4 plus 10^5 seeded
// random matrices for each n in {5, 6, 8, 16, 32, 64}.
WitnessCorpusResult run_witness_corpus() {
  WitnessCorpusResult r;
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n));
         ++code) {
      Matrix m(n, n);
      for (int b = 0; b < n * n; ++b) {
        if ((code >> b) & 1) m.set(b / n + 1, b % n + 1, 1);
      }
      run_witness_case(m, r);
    }
  }
  for (int n : {5, 6, 8, 16, 32, 64}) {
    std::mt19937_64 gen(900 + n);
    for (int trial = 0; trial < 100000; ++trial) {
      run_witness_case(random_matrix(n, n, gen(), 0.5), r);
    }
  }
  return r;
}

// 8. Exhaustive st(n) = n-1 for n in {2,3,4}; the 5x5 search completes and
//    reports 4.
Outcome criterion8(double* small_seconds, double* n5_seconds) {
  auto t0 = std::chrono::steady_clock::now();
  const auto rows = conjecture_scan(4);
  *small_seconds = seconds_since(t0);
  bool ok = rows.size() == 3;
  for (const ConjectureRow& r : rows) ok = ok && r.holds;

  t0 = std::chrono::steady_clock::now();
  const SearchReport r5 = exact_extremal(5, 5, Statistic::st);
  *n5_seconds = seconds_since(t0);
  const bool ok5 = r5.exact_value == 4;
  return {ok && ok5 && *small_seconds < 10.0 && *n5_seconds < 600.0,
          fmt("st(2)=%d st(3)=%d st(4)=%d in %.1fs; st(5)=%d over %llu "
              "candidates in %.1fs",
              rows[0].exact_st, rows[1].exact_st, rows[2].exact_st,
              *small_seconds, r5.exact_value,
              static_cast<unsigned long long>(r5.matrices_enumerated),
              *n5_seconds)};
}

// 9. Byte-identical exact value and minimizer sample for 1, 2 and 8 threads.
Outcome criterion9() {
  std::string reference;
  for (int threads : {1, 2, 8}) {
    SearchOptions o;
    o.threads = threads;
    const SearchReport rep = exact_extremal(4, 4, Statistic::st, o);
    Json j{{"exact_value", rep.exact_value}, {"minimizers", Json::array()}};
    for (const Matrix& m : rep.minimizers_sample) {
      j["minimizers"].push_back(json_matrix(m));
    }
    const std::string bytes = j.dump();
    if (reference.empty()) {
      reference = bytes;
    } else if (bytes != reference) {
      return {false, fmt("thread count %d changed the result", threads)};
    }
  }
  return {true, "threads 1, 2, 8 byte-identical"};
}

// 10. Search-loop throughput of at least 10^6 evaluations per second on 4x4.
Outcome criterion10() {
  SearchOptions o;
  o.threads = 1;
  o.sample_limit = 0;
  std::uint64_t evals = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int rep = 0; rep < 30; ++rep) {
    evals += exact_extremal(4, 4, Statistic::st, o).matrices_enumerated;
  }
  const double el = seconds_since(t0);
  const double rate = static_cast<double>(evals) / el;
  return {rate >= 1e6, fmt("%.1fM evaluations/s single-threaded", rate / 1e6)};
}

}  // namespace

int main() {
  int failures = 0;
  const auto report = [&](int id, const char* name, const Outcome& o,
                          double secs) {
    if (!o.pass) ++failures;
    std::printf("criterion %2d (%s): %s (%s) [%.1fs]\n", id, name,
                o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
  };

  const auto timed = [&](int id, const char* name, auto fn, double limit) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = fn();
    const double secs = seconds_since(t0);
    if (limit > 0 && secs >= limit) {
      o.pass = false;
      o.detail += fmt("; over the %.0fs limit", limit);
    }
    report(id, name, o, secs);
  };

  timed(1, "dp equals brute-force oracle", criterion1, 10.0);
  timed(2, "P profile closed form", criterion2, 5.0);
  timed(3, "sigma minimum and witness", criterion3, 120.0);
  timed(4, "Q closed form and exhaustive wide shapes", criterion4, 60.0);
  timed(5, "R closed form and middle-range bound", criterion5, 60.0);

  {
    const auto t0 = std::chrono::steady_clock::now();
    const WitnessCorpusResult wc = run_witness_corpus();
    const double secs = seconds_since(t0);
    Outcome o6;
    o6.pass = wc.witness_failures == 0 && secs < 300.0;
    o6.detail = fmt("%ld runs, %ld failures", wc.runs, wc.witness_failures);
    for (const std::string& ex : wc.failing_examples) {
      o6.detail += "; " + ex;
    }
    report(6, "three-turn witness length bound", o6, secs);

    Outcome o7;
    o7.pass = wc.identity_failures == 0;
    o7.detail = fmt("%ld identity checks, %ld failures", wc.identity_checks,
                    wc.identity_failures);
    report(7, "counting identity on the same corpus", o7, secs);
  }

  {
    double small_secs = 0, n5_secs = 0;
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome o8 = criterion8(&small_secs, &n5_secs);
    report(8, "square minimum equals n-1 up to n=5", o8, seconds_since(t0));
  }

  timed(9, "deterministic across thread counts", criterion9, 0);
  timed(10, "search throughput floor", criterion10, 0);

  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
