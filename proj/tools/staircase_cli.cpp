// Command-line front end: compute | construct | search | verify | sweep.
// Standard output carries only the machine-readable result; progress and
// diagnostics go to standard error. Exit codes: 0 success / all rows pass,
// 1 verification failure, 2 usage or input error, 3 budget exceeded.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "staircase/constructions.hpp"
#include "staircase/dp.hpp"
#include "staircase/json_io.hpp"
#include "staircase/search.hpp"
#include "staircase/witness.hpp"

using namespace staircase;

namespace {

struct GlobalOpts {
  std::string format = "plain";
  std::uint64_t seed = 1;
  int threads = 0;
  int budget_cells = 30;
};

Matrix read_matrix_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw FormatError("bad json input");
    return matrix_from_json(j);
  }
  return parse_matrix(text);
}

struct Range {
  int lo = 1;
  int hi = 0;  // empty when hi < lo
};

Range parse_range(const std::string& s) {
  Range r;
  const std::size_t dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(s);
    } else {
      r.lo = std::stoi(s.substr(0, dots));
      r.hi = std::stoi(s.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + s + "', expected A or A..B");
  }
  return r;
}

// Rows rendered as CSV (plain/csv formats) or one JSON object per line.
class TableWriter {
 public:
  TableWriter(bool as_json, std::vector<std::string> columns)
      : as_json_(as_json), columns_(std::move(columns)) {
    if (!as_json_) {
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << columns_[i];
      }
      std::cout << '\n';
    }
  }

  void emit(const Json& obj) {
    if (as_json_) {
      std::cout << obj.dump() << '\n';
      return;
    }
    bool first = true;
    for (const auto& col : columns_) {
      if (!first) std::cout << ',';
      first = false;
      if (!obj.contains(col)) {
        std::cout << "na";
        continue;
      }
      const Json& v = obj.at(col);
      if (v.is_string()) {
        std::cout << v.get<std::string>();
      } else if (v.is_boolean()) {
        std::cout << (v.get<bool>() ? 1 : 0);
      } else if (v.is_null()) {
        std::cout << "na";
      } else {
        std::cout << v.dump();
      }
    }
    std::cout << '\n';
  }

 private:
  bool as_json_;
  std::vector<std::string> columns_;
};

struct Meter {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  std::chrono::steady_clock::time_point last = start;
  std::uint64_t last_done = 0;

  void operator()(std::uint64_t done, std::uint64_t total, int best) {
    const auto now = std::chrono::steady_clock::now();
    const double since = std::chrono::duration<double>(now - last).count();
    if (since < 0.5) return;
    const double rate = static_cast<double>(done - last_done) / since / 1e6;
    std::fprintf(stderr, "progress: %llu/%llu (%.1f%%) best=%d rate=%.1fM/s\n",
                 static_cast<unsigned long long>(done),
                 static_cast<unsigned long long>(total),
                 100.0 * static_cast<double>(done) / static_cast<double>(total),
                 best, rate);
    last = now;
    last_done = done;
  }
};

SearchOptions make_search_options(const GlobalOpts& g, bool with_progress) {
  SearchOptions o;
  o.max_cells = g.budget_cells;
  o.threads = g.threads;
  if (with_progress) o.progress = Meter{};
  return o;
}

void print_kv(const char* key, const std::string& value) {
  std::cout << key << '=' << value << '\n';
}

// ---------------------------------------------------------------- compute

int cmd_compute(const GlobalOpts& g, const std::string& path, int value,
                int max_turns, bool witness) {
  const Matrix m = read_matrix_input(path);
  const TurnBudget budget =
      max_turns < 0 ? TurnBudget::unbounded() : TurnBudget::at_most(max_turns);

  if (value < 0) {
    const StProfile p = st_profile(m);
    std::optional<Staircase> w;
    if (witness) {
      const int best_value = p.st1 > p.st0 ? 1 : 0;
      w = longest_value_staircase(m, best_value).witness;
    }
    if (g.format == "json") {
      Json j{{"n", m.rows()}, {"N", m.cols()}};
      j.update(json_profile(p));
      if (witness) j["witness"] = w ? json_staircase(*w) : Json(nullptr);
      std::cout << j.dump() << '\n';
    } else if (g.format == "csv") {
      std::cout << "n,N,st0,st1,st,sigma\n"
                << m.rows() << ',' << m.cols() << ',' << p.st0 << ',' << p.st1
                << ',' << p.st << ',' << p.sigma << '\n';
    } else {
      print_kv("n", std::to_string(m.rows()));
      print_kv("N", std::to_string(m.cols()));
      print_kv("st0", std::to_string(p.st0));
      print_kv("st1", std::to_string(p.st1));
      print_kv("st", std::to_string(p.st));
      print_kv("sigma", std::to_string(p.sigma));
      if (witness) {
        print_kv("witness", w ? json_staircase(*w).dump() : "null");
      }
    }
    return 0;
  }

  if (value != 0 && value != 1) {
    throw std::invalid_argument("--value must be 0 or 1");
  }
  const LongestResult r = longest_value_staircase(m, value, budget);
  if (g.format == "json") {
    Json j{{"value", value},
           {"max_turns", max_turns < 0 ? Json(nullptr) : Json(max_turns)},
           {"length", r.length}};
    if (witness) {
      j["witness"] = r.witness ? json_staircase(*r.witness) : Json(nullptr);
    }
    std::cout << j.dump() << '\n';
  } else if (g.format == "csv") {
    std::cout << "value,max_turns,length\n"
              << value << ','
              << (max_turns < 0 ? std::string("na") : std::to_string(max_turns))
              << ',' << r.length << '\n';
  } else {
    print_kv("length", std::to_string(r.length));
    if (witness) {
      print_kv("witness",
               r.witness ? json_staircase(*r.witness).dump() : "null");
    }
  }
  return 0;
}

// -------------------------------------------------------------- construct

int cmd_construct(const GlobalOpts& g, const std::string& family, int n,
                  int N) {
  Matrix m = [&] {
    if (family == "P") return build_P(n, N);
    if (family == "Q") return build_Q(n, N);
    if (family == "R") return build_R(n, N);
    throw std::invalid_argument("unknown family '" + family +
                                "', expected P, Q or R");
  }();
  const MatrixFormat f =
      g.format == "json" ? MatrixFormat::json : MatrixFormat::plain;
  std::cout << serialize_matrix(m, f);
  if (f == MatrixFormat::json) std::cout << '\n';
  return 0;
}

// ----------------------------------------------------------------- search

int cmd_search(const GlobalOpts& g, const std::string& stat_name, int n, int N,
               int max_turns) {
  Statistic stat;
  SearchOptions o = make_search_options(g, true);
  if (stat_name == "st" && max_turns >= 0) {
    stat = Statistic::st_turn_budget;
    o.turn_budget = max_turns;
  } else if (stat_name == "st") {
    stat = Statistic::st;
  } else if (stat_name == "sigma") {
    stat = Statistic::sigma;
  } else {
    throw std::invalid_argument("unknown statistic '" + stat_name +
                                "', expected st or sigma");
  }
  const SearchReport rep = exact_extremal(n, N, stat, o);
  std::fprintf(
      stderr, "search: %llu candidates in %.2fs (%.1fM matrices/s, %d threads)\n",
      static_cast<unsigned long long>(rep.matrices_enumerated),
      rep.wall_seconds,
      static_cast<double>(rep.matrices_enumerated) /
          (rep.wall_seconds > 0 ? rep.wall_seconds : 1e-9) / 1e6,
      rep.thread_count);
  if (g.format == "json") {
    std::cout << json_report(rep).dump() << '\n';
  } else {
    print_kv("statistic", statistic_name(rep.statistic, rep.turn_budget));
    print_kv("n", std::to_string(rep.n));
    print_kv("N", std::to_string(rep.N));
    print_kv("exact_value", std::to_string(rep.exact_value));
    print_kv("matrices_enumerated", std::to_string(rep.matrices_enumerated));
    print_kv("symmetry_factor", std::to_string(rep.symmetry_factor));
    print_kv("thread_count", std::to_string(rep.thread_count));
    for (const Matrix& m : rep.minimizers_sample) {
      std::string joined;
      for (int i = 1; i <= m.rows(); ++i) {
        if (i > 1) joined += '|';
        joined += m.row_string(i);
      }
      print_kv("minimizer", joined);
    }
  }
  return 0;
}

// ----------------------------------------------------------------- verify

int verify_obs2(const GlobalOpts& g, int max_n) {
  TableWriter t(g.format == "json",
                {"n", "N", "st0", "st0_expected", "st1", "st1_expected",
                 "pass"});
  bool all = true;
  for (int n = 1; n <= max_n; ++n) {
    for (int N = n; N <= max_n; ++N) {
      const StProfile p = st_profile(build_P(n, N));
      const int e0 = ceil_div(n, 2);
      const int e1 = N - 1;
      const bool pass = p.st0 == e0 && p.st1 == e1;
      all &= pass;
      t.emit(Json{{"n", n},
                  {"N", N},
                  {"st0", p.st0},
                  {"st0_expected", e0},
                  {"st1", p.st1},
                  {"st1_expected", e1},
                  {"pass", pass}});
    }
  }
  return all ? 0 : 1;
}

int verify_thm3(const GlobalOpts& g, int max_cells, int trials, int max_n,
                int max_N) {
  TableWriter t(g.format == "json",
                {"kind", "n", "N", "trial", "value", "expected", "pass"});
  bool all = true;
  for (int n = 1; n <= max_cells; ++n) {
    for (int N = n; n * N <= max_cells; ++N) {
      const SearchReport rep =
          exact_extremal(n, N, Statistic::sigma, make_search_options(g, false));
      const int expected = formula_sigma_P(n, N);
      const bool pass = rep.exact_value == expected;
      all &= pass;
      t.emit(Json{{"kind", "exhaustive"},
                  {"n", n},
                  {"N", N},
                  {"trial", nullptr},
                  {"value", rep.exact_value},
                  {"expected", expected},
                  {"pass", pass}});
    }
  }
  std::mt19937_64 gen(g.seed);
  for (int trial = 0; trial < trials; ++trial) {
    const int n = 1 + static_cast<int>(gen() % max_n);
    const int N = n + static_cast<int>(gen() % (max_N - n + 1));
    const Matrix m = random_matrix(n, N, gen(), 0.5);
    const SigmaWitness w = sigma_witness(m);
    const int bound = ceil_div(n, 2) + N - 1;
    const int sum = w.majority.length() + w.minority.length();
    const bool pass = sum >= bound && validate_staircase(m, w.majority).valid &&
                      (w.minority.empty() ||
                       validate_staircase(m, w.minority).valid);
    all &= pass;
    t.emit(Json{{"kind", "witness"},
                {"n", n},
                {"N", N},
                {"trial", trial},
                {"value", sum},
                {"expected", bound},
                {"pass", pass}});
  }
  return all ? 0 : 1;
}

int verify_formula_family(const GlobalOpts& g, const std::string& which,
                          int max_cells, Range n_range) {
  TableWriter t(g.format == "json", {"n", "N", "dp", "formula", "pass"});
  bool all = true;
  for (int n = std::max(1, n_range.lo); n <= n_range.hi && n <= max_cells;
       ++n) {
    for (int N = n; n * N <= max_cells; ++N) {
      const bool valid =
          which == "claim4" ? q_params_valid(n, N) : r_params_valid(n, N);
      if (!valid) continue;
      const Matrix m = which == "claim4" ? build_Q(n, N) : build_R(n, N);
      const int formula =
          which == "claim4" ? formula_st_Q(n, N) : formula_st_R(n, N);
      const int dp = st_profile(m).st;
      const bool pass = dp == formula;
      all &= pass;
      t.emit(Json{{"n", n},
                  {"N", N},
                  {"dp", dp},
                  {"formula", formula},
                  {"pass", pass}});
    }
  }
  return all ? 0 : 1;
}

int verify_thm5(const GlobalOpts& g) {
  TableWriter t(g.format == "json", {"n", "N", "exact", "formula", "pass"});
  bool all = true;
  for (int n = 1; n * n <= g.budget_cells; ++n) {
    for (int N = n; n * N <= g.budget_cells; ++N) {
      if (!q_params_valid(n, N)) continue;
      const SearchReport rep =
          exact_extremal(n, N, Statistic::st, make_search_options(g, false));
      const int formula = formula_st_Q(n, N);
      const bool pass = rep.exact_value == formula;
      all &= pass;
      t.emit(Json{{"n", n},
                  {"N", N},
                  {"exact", rep.exact_value},
                  {"formula", formula},
                  {"pass", pass}});
    }
  }
  return all ? 0 : 1;
}

int verify_cor8(const GlobalOpts& g) {
  TableWriter t(g.format == "json", {"n", "N", "exact", "bound", "pass"});
  bool all = true;
  for (int n = 1; n * n <= g.budget_cells; ++n) {
    for (int N = n; n * N <= g.budget_cells; ++N) {
      if (!r_params_valid(n, N)) continue;
      const SearchReport rep =
          exact_extremal(n, N, Statistic::st, make_search_options(g, false));
      const int bound = formula_st_R(n, N);
      const bool pass = rep.exact_value <= bound;
      all &= pass;
      t.emit(Json{{"n", n},
                  {"N", N},
                  {"exact", rep.exact_value},
                  {"bound", bound},
                  {"pass", pass}});
    }
  }
  return all ? 0 : 1;
}

// Shared driver for thm2 and obs10. Exhaustive when trials == 0.
int verify_thm2_like(const GlobalOpts& g, Range n_range, int trials,
                     bool identity_mode) {
  const std::vector<std::string> cols =
      identity_mode
          ? std::vector<std::string>{"n", "trial", "case", "unprimed",
                                     "primed", "pass"}
          : std::vector<std::string>{"n",     "trial", "case", "length",
                                     "bound", "turns", "valid", "pass"};
  const bool as_json = g.format == "json";
  TableWriter t(as_json, cols);
  bool all = true;

  const auto run_one = [&](const Matrix& m, int n, const Json& trial_id) {
    const auto [witness, trace] = theorem2_witness(m);
    if (identity_mode) {
      if (!trace.s4.has_value() && !trace.s4p.has_value()) return;
      Json unprimed(nullptr), primed(nullptr);
      bool pass = true;
      if (trace.s4.has_value()) {
        const bool ok = check_observation10(m, trace);
        unprimed = ok;
        pass &= ok;
      }
      if (trace.s4p.has_value()) {
        const bool ok = check_observation10_primed(m, trace);
        primed = ok;
        pass &= ok;
      }
      all &= pass;
      Json row{{"n", n},
               {"trial", trial_id},
               {"case", witness_case_name(trace.case_taken)},
               {"unprimed", unprimed},
               {"primed", primed},
               {"pass", pass}};
      if (as_json) row["trace"] = json_trace(trace);
      t.emit(row);
      return;
    }
    const int bound = theorem2_bound(n);
    const int tn = turns(witness);
    const bool valid = validate_staircase(m, witness).valid;
    const bool pass = valid && tn <= 3 && witness.length() >= bound;
    all &= pass;
    Json row{{"n", n},
             {"trial", trial_id},
             {"case", witness_case_name(trace.case_taken)},
             {"length", witness.length()},
             {"bound", bound},
             {"turns", tn},
             {"valid", valid},
             {"pass", pass}};
    if (as_json) row["trace"] = json_trace(trace);
    t.emit(row);
  };

  for (int n = std::max(1, n_range.lo); n <= n_range.hi; ++n) {
    if (trials == 0) {
      if (n * n > 25) {
        throw BudgetExceeded("exhaustive verification needs n*n <= 25");
      }
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n));
           ++code) {
        Matrix m(n, n);
        for (int b = 0; b < n * n; ++b) {
          if ((code >> b) & 1) m.set(b / n + 1, b % n + 1, 1);
        }
        run_one(m, n, Json(code));
      }
    } else {
      std::mt19937_64 gen(g.seed + static_cast<std::uint64_t>(n) * 0x9e3779b9);
      for (int trial = 0; trial < trials; ++trial) {
        run_one(random_matrix(n, n, gen(), 0.5), n, Json(trial));
      }
    }
  }
  return all ? 0 : 1;
}

int verify_conjecture(const GlobalOpts& g, int max_n) {
  TableWriter t(g.format == "json", {"n", "exact_st", "expected", "pass"});
  bool all = true;
  for (const ConjectureRow& r :
       conjecture_scan(max_n, make_search_options(g, false))) {
    all &= r.holds;
    t.emit(Json{{"n", r.n},
                {"exact_st", r.exact_st},
                {"expected", r.expected},
                {"pass", r.holds}});
  }
  return all ? 0 : 1;
}

// ------------------------------------------------------------------ sweep

int cmd_sweep(const GlobalOpts& g, const std::string& subject, Range nr,
              Range Nr) {
  const bool as_json = g.format == "json";
  const auto orient = [](int& a, int& b) {
    if (a > b) std::swap(a, b);
  };
  if (subject == "st-upper") {
    TableWriter t(as_json, {"n", "N", "value", "kind", "boundary"});
    for (int n = nr.lo; n <= nr.hi; ++n) {
      for (int N = Nr.lo; N <= Nr.hi; ++N) {
        int a = n, b = N;
        orient(a, b);
        const StUpperBound ub = st_upper_bound(a, b);
        const char* kind = ub.kind == BoundKind::proved_exact
                               ? "proved-exact"
                           : ub.kind == BoundKind::upper_bound_only
                               ? "upper-bound-only"
                               : "conjectured";
        t.emit(Json{{"n", n},
                    {"N", N},
                    {"value", ub.value},
                    {"kind", kind},
                    {"boundary", b == (5 * a) / 2 - 1}});
      }
    }
    return 0;
  }
  if (subject == "st-lower" || subject == "sigma-formula") {
    TableWriter t(as_json, {"n", "N", "value"});
    for (int n = nr.lo; n <= nr.hi; ++n) {
      for (int N = Nr.lo; N <= Nr.hi; ++N) {
        int a = n, b = N;
        orient(a, b);
        const int value = subject == "st-lower"
                              ? st_lower_bound_from_sigma(a, b)
                              : formula_sigma_P(a, b);
        t.emit(Json{{"n", n}, {"N", N}, {"value", value}});
      }
    }
    return 0;
  }
  if (subject == "P" || subject == "Q" || subject == "R") {
    TableWriter t(as_json, {"n", "N", "valid", "formula", "dp"});
    for (int n = nr.lo; n <= nr.hi; ++n) {
      for (int N = Nr.lo; N <= Nr.hi; ++N) {
        bool valid = false;
        int formula = 0, dp = 0;
        if (subject == "P") {
          valid = p_params_valid(n, N);
          if (valid) {
            formula = formula_sigma_P(n, N);
            dp = st_profile(build_P(n, N)).sigma;
          }
        } else if (subject == "Q") {
          valid = q_params_valid(n, N);
          if (valid) {
            formula = formula_st_Q(n, N);
            dp = st_profile(build_Q(n, N)).st;
          }
        } else {
          valid = r_params_valid(n, N);
          if (valid) {
            formula = formula_st_R(n, N);
            dp = st_profile(build_R(n, N)).st;
          }
        }
        Json row{{"n", n}, {"N", N}, {"valid", valid}};
        row["formula"] = valid ? Json(formula) : Json(nullptr);
        row["dp"] = valid ? Json(dp) : Json(nullptr);
        t.emit(row);
      }
    }
    return 0;
  }
  throw std::invalid_argument(
      "unknown sweep subject '" + subject +
      "', expected st-upper, st-lower, sigma-formula, P, Q or R");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"longest homogeneous staircases in 0/1 matrices"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized runs")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)")
      ->capture_default_str();
  app.add_option("--budget-cells", g.budget_cells,
                 "largest n*N for exhaustive search")
      ->capture_default_str();

  auto* compute =
      app.add_subcommand("compute", "staircase statistics of a matrix");
  compute->fallthrough();
  std::string compute_file;
  int compute_value = -1;
  int compute_turns = -1;
  bool compute_witness = false;
  compute->add_option("file", compute_file, "matrix file, or - for stdin")
      ->required();
  compute->add_option("--value", compute_value,
                      "restrict to 0- or 1-staircases");
  compute
      ->add_option("--max-turns", compute_turns,
                   "cap on turning points (needs --value)")
      ->needs(compute->get_option("--value"));
  compute->add_flag("--witness", compute_witness, "also print a witness");

  auto* construct = app.add_subcommand("construct", "emit a P/Q/R matrix");
  construct->fallthrough();
  std::string family;
  int cn = 0, cN = 0;
  construct->add_option("family", family, "P, Q or R")->required();
  construct->add_option("n", cn, "rows")->required();
  construct->add_option("N", cN, "columns")->required();

  auto* search =
      app.add_subcommand("search", "exact extremal value by exhaustion");
  search->fallthrough();
  std::string stat_name;
  int sn = 0, sN = 0;
  int search_turns = -1;
  search->add_option("statistic", stat_name, "st or sigma")->required();
  search->add_option("n", sn, "rows")->required();
  search->add_option("N", sN, "columns")->required();
  search->add_option("--max-turns", search_turns,
                     "turn budget for the st statistic");

  auto* verify =
      app.add_subcommand("verify", "check a statement over a range");
  verify->fallthrough();
  std::string target;
  std::string verify_n = "6";
  int verify_max_n = 60;
  int verify_max_N = 60;
  int verify_max_cells = 4000;
  int verify_trials = -1;
  verify
      ->add_option("target", target,
                   "obs2|thm3|claim4|thm5|claim7|cor8|thm2|obs10|conjecture")
      ->required();
  verify->add_option("--n", verify_n, "n or range A..B");
  verify->add_option("--max-n", verify_max_n, "largest n");
  verify->add_option("--max-N", verify_max_N, "largest N");
  verify->add_option("--max-cells", verify_max_cells, "largest n*N");
  verify->add_option("--trials", verify_trials,
                     "random trials (0 = exhaustive where supported)");

  auto* sweep = app.add_subcommand("sweep", "tabulate formulas over a grid");
  sweep->fallthrough();
  std::string subject;
  std::string sweep_n = "1..8";
  std::string sweep_N = "1..8";
  sweep
      ->add_option("subject", subject, "st-upper|st-lower|sigma-formula|P|Q|R")
      ->required();
  sweep->add_option("--n", sweep_n, "row range A..B");
  sweep->add_option("--N", sweep_N, "column range A..B");

  try {
    app.parse(argc, argv);

    if (*compute) {
      return cmd_compute(g, compute_file, compute_value, compute_turns,
                         compute_witness);
    }
    if (*construct) return cmd_construct(g, family, cn, cN);
    if (*search) return cmd_search(g, stat_name, sn, sN, search_turns);
    if (*verify) {
      if (target == "obs2") return verify_obs2(g, verify_max_n);
      if (target == "thm3") {
        const int cells =
            verify->count("--max-cells") ? verify_max_cells : 20;
        const int max_n = verify->count("--max-n") ? verify_max_n : 40;
        return verify_thm3(g, cells, verify_trials < 0 ? 1000 : verify_trials,
                           max_n, std::max(max_n, verify_max_N));
      }
      if (target == "claim4") {
        return verify_formula_family(g, "claim4", verify_max_cells,
                                     {1, verify_max_cells});
      }
      if (target == "claim7") {
        Range r{1, verify_max_cells};
        if (verify->count("--n") > 0) r = parse_range(verify_n);
        return verify_formula_family(g, "claim7", verify_max_cells, r);
      }
      if (target == "thm5") return verify_thm5(g);
      if (target == "cor8") return verify_cor8(g);
      if (target == "thm2" || target == "obs10") {
        return verify_thm2_like(g, parse_range(verify_n),
                                verify_trials < 0 ? 1000 : verify_trials,
                                target == "obs10");
      }
      if (target == "conjecture") {
        return verify_conjecture(g,
                                 verify->count("--max-n") ? verify_max_n : 4);
      }
      throw std::invalid_argument("unknown verify target '" + target + "'");
    }
    if (*sweep) {
      return cmd_sweep(g, subject, parse_range(sweep_n), parse_range(sweep_N));
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
