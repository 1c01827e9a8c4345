#include "staircase/witness.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "staircase/constructions.hpp"

namespace staircase {

Staircase corner_staircase(const Matrix& m, Position p, Corner shape) {
  if (p.i < 1 || p.i > m.rows() || p.j < 1 || p.j > m.cols()) {
    throw std::invalid_argument("center position out of bounds");
  }
  const int v = m.at(p);
  Staircase s{v, {}};
  if (shape == Corner::row_first) {
    for (int j = 1; j <= p.j; ++j) {
      if (m.at(p.i, j) == v) s.cells.push_back({p.i, j});
    }
    for (int i = p.i + 1; i <= m.rows(); ++i) {
      if (m.at(i, p.j) == v) s.cells.push_back({i, p.j});
    }
  } else {
    for (int i = 1; i <= p.i; ++i) {
      if (m.at(i, p.j) == v) s.cells.push_back({i, p.j});
    }
    for (int j = p.j + 1; j <= m.cols(); ++j) {
      if (m.at(p.i, j) == v) s.cells.push_back({p.i, j});
    }
  }
  return s;
}

namespace {

SigmaWitness sigma_witness_oriented(const Matrix& m) {
  const int n = m.rows(), N = m.cols();
  int ones = 0;
  for (int i = 1; i <= n; ++i) ones += m.at(i, 1);
  const int v = 2 * ones >= n ? 1 : 0;  // ties go to 1
  Position anchor{};
  for (int i = n; i >= 1; --i) {
    if (m.at(i, 1) == v) {
      anchor = {i, 1};
      break;
    }
  }
  SigmaWitness w;
  w.anchor = anchor;
  w.majority_value = v;
  w.majority = corner_staircase(m, anchor, Corner::column_first);
  w.minority = Staircase{1 - v, {}};
  for (int j = 1; j <= N; ++j) {
    if (m.at(anchor.i, j) == 1 - v) w.minority.cells.push_back({anchor.i, j});
  }
  return w;
}

}  // namespace

SigmaWitness sigma_witness(const Matrix& m) {
  if (m.rows() <= m.cols()) return sigma_witness_oriented(m);
  SigmaWitness w = sigma_witness_oriented(transpose(m));
  w.transposed = true;
  const auto flip = [](Staircase& s) {
    for (Position& p : s.cells) std::swap(p.i, p.j);
  };
  flip(w.majority);
  flip(w.minority);
  std::swap(w.anchor.i, w.anchor.j);
  return w;
}

int theorem2_bound(int n) { return ceil_div(10 * n - 7, 12); }

namespace {

// One orientation of the anchor construction on a square matrix X, with
// reference value v = X(1, n):
//   a1 = (1, n); a2 = rightmost non-v cell of row 1; a3 = topmost non-v cell
//   of column n; a4 = their row/column intersection.
// When row 1 or column n is constant the whole line is a length-n witness.
struct System {
  int v = 1;
  bool trivial = false;
  bool trivial_is_row = false;
  Staircase trivial_witness;
  Position a1, a2, a3, a4;
  bool a4_minority = false;    // X(a4) != v
  Staircase s1, s2, s3, s4;    // corner staircases at the four anchors
  int x1 = 0, y0 = 0, z0 = 0, w1 = 0;
  int s1_h = 0, s1_v = 0;
};

System build_system(const Matrix& x) {
  const int n = x.rows();
  System sys;
  sys.v = x.at(1, n);
  const int w = 1 - sys.v;
  sys.a1 = {1, n};

  sys.a2 = {0, 0};
  for (int j = n; j >= 1; --j) {
    if (x.at(1, j) == w) {
      sys.a2 = {1, j};
      break;
    }
  }
  if (sys.a2.i == 0) {
    sys.trivial = true;
    sys.trivial_is_row = true;
    sys.trivial_witness.value = sys.v;
    for (int j = 1; j <= n; ++j) sys.trivial_witness.cells.push_back({1, j});
    return sys;
  }

  sys.a3 = {0, 0};
  for (int i = 1; i <= n; ++i) {
    if (x.at(i, n) == w) {
      sys.a3 = {i, n};
      break;
    }
  }
  if (sys.a3.i == 0) {
    sys.trivial = true;
    sys.trivial_is_row = false;
    sys.trivial_witness.value = sys.v;
    for (int i = 1; i <= n; ++i) sys.trivial_witness.cells.push_back({i, n});
    return sys;
  }

  sys.a4 = {sys.a3.i, sys.a2.j};
  sys.a4_minority = x.at(sys.a4) == w;
  sys.s1 = corner_staircase(x, sys.a1, Corner::row_first);
  for (int j = 1; j <= n; ++j) sys.s1_h += x.at(1, j) == sys.v;
  for (int i = 1; i <= n; ++i) sys.s1_v += x.at(i, n) == sys.v;
  if (sys.a4_minority) return sys;

  sys.s2 = corner_staircase(x, sys.a2, Corner::row_first);
  sys.s3 = corner_staircase(x, sys.a3, Corner::row_first);
  sys.s4 = corner_staircase(x, sys.a4, Corner::row_first);
  for (int j = 1; j < sys.a2.j; ++j) sys.x1 += x.at(1, j) == sys.v;
  for (int i = 2; i < sys.a3.i; ++i) sys.y0 += x.at(i, sys.a2.j) == w;
  for (int j = sys.a2.j + 1; j < n; ++j) sys.z0 += x.at(sys.a3.i, j) == w;
  for (int i = sys.a3.i + 1; i <= n; ++i) sys.w1 += x.at(i, n) == sys.v;
  return sys;
}

// Minority staircase of the a4-minority branch: non-v cells of row 1, the
// segment of a2's column down to a4, then along a3's row and down column n.
// At most 3 turns; together with the corner staircase at a1 it covers row 1,
// column n and a4, so the lengths sum to at least 2n.
Staircase minority_chain(const Matrix& x, const System& sys) {
  const int n = x.rows();
  const int w = 1 - sys.v;
  Staircase s{w, {}};
  for (int j = 1; j <= sys.a2.j; ++j) {
    if (x.at(1, j) == w) s.cells.push_back({1, j});
  }
  for (int i = 2; i < sys.a3.i; ++i) {
    if (x.at(i, sys.a2.j) == w) s.cells.push_back({i, sys.a2.j});
  }
  s.cells.push_back(sys.a4);
  for (int j = sys.a2.j + 1; j < n; ++j) {
    if (x.at(sys.a3.i, j) == w) s.cells.push_back({sys.a3.i, j});
  }
  for (int i = sys.a3.i; i <= n; ++i) {
    if (x.at(i, n) == w) s.cells.push_back({i, n});
  }
  return s;
}

Position unrotate(Position p, int n) { return {n + 1 - p.i, n + 1 - p.j}; }

// Maps a staircase of rotate180(X) back into X; reversing the rotated cell
// list restores the right/down step order.
Staircase unrotate(const Staircase& s, int n) {
  Staircase out{s.value, {}};
  out.cells.reserve(s.cells.size());
  for (auto it = s.cells.rbegin(); it != s.cells.rend(); ++it) {
    out.cells.push_back(unrotate(*it, n));
  }
  return out;
}

Staircase transpose_staircase(const Staircase& s) {
  Staircase out{s.value, s.cells};
  for (Position& p : out.cells) std::swap(p.i, p.j);
  return out;
}

struct RunOut {
  Staircase witness;  // relative to the run's input matrix
  WitnessTrace trace;
};

RunOut run(const Matrix& input, int depth) {
  const int n = input.rows();
  const bool comp = input.at(1, n) == 0;
  const Matrix x = comp ? complement(input) : input;

  WitnessTrace trace;
  trace.complemented = comp;

  const auto finish = [&](Staircase w, WitnessCase c) {
    trace.case_taken = c;
    if (comp) w.value = 1 - w.value;
    return RunOut{std::move(w), std::move(trace)};
  };

  const System u = build_system(x);
  trace.a1 = u.a1;
  if (u.trivial) {
    return finish(u.trivial_witness,
                  u.trivial_is_row ? WitnessCase::trivial_row
                                   : WitnessCase::trivial_column);
  }
  trace.a2 = u.a2;
  trace.a3 = u.a3;
  trace.a4 = u.a4;
  trace.s1 = u.s1;
  trace.s1_h = u.s1_h;
  trace.s1_v = u.s1_v;
  if (u.a4_minority) {
    Staircase chain = minority_chain(x, u);
    trace.obs9_minority = chain;
    Staircase best = u.s1.length() >= chain.length() ? u.s1 : chain;
    return finish(std::move(best), WitnessCase::obs9);
  }
  trace.s2 = u.s2;
  trace.s3 = u.s3;
  trace.s4 = u.s4;
  trace.x1 = u.x1;
  trace.y0 = u.y0;
  trace.z0 = u.z0;
  trace.w1 = u.w1;

  // Mirrored system: the same construction on the 180 degree rotation, whose
  // reference value is the bottom-left cell of x.
  const Matrix xr = rotate180(x);
  const System p = build_system(xr);
  trace.a = p.v;
  trace.abar = 1 - p.v;
  trace.a1p = unrotate(p.a1, n);
  trace.sap_h = p.s1_h;
  trace.sap_v = p.s1_v;
  if (p.trivial) {
    return finish(unrotate(p.trivial_witness, n),
                  p.trivial_is_row ? WitnessCase::trivial_row
                                   : WitnessCase::trivial_column);
  }
  trace.a2p = unrotate(p.a2, n);
  trace.a3p = unrotate(p.a3, n);
  trace.a4p = unrotate(p.a4, n);
  trace.s1p = unrotate(p.s1, n);
  if (p.a4_minority) {
    Staircase chain = unrotate(minority_chain(xr, p), n);
    Staircase mirrored_s1 = unrotate(p.s1, n);
    trace.obs9_minority = chain;
    Staircase best =
        mirrored_s1.length() >= chain.length() ? mirrored_s1 : chain;
    return finish(std::move(best), WitnessCase::obs9);
  }
  trace.s2p = unrotate(p.s2, n);
  trace.s3p = unrotate(p.s3, n);
  trace.s4p = unrotate(p.s4, n);
  trace.xap = p.x1;
  trace.yabarp = p.y0;
  trace.zabarp = p.z0;
  trace.wap = p.w1;

  const int s1 = u.s1.length();
  const int s1p = p.s1.length();
  if (s1 + s1p >= 2 * n - 2) {
    Staircase best = s1 >= s1p ? u.s1 : unrotate(p.s1, n);
    return finish(std::move(best), WitnessCase::case1);
  }

  // Both one-turn staircases together are short, so either the horizontal
  // hands or the vertical hands sum below n. Transposing swaps the two sums,
  // hence the recursion terminates after at most one transpose.
  if (u.s1_h + p.s1_h >= n) {
    assert(depth == 0);
    RunOut rr = run(transpose(x), depth + 1);
    rr.trace.transposed = true;
    rr.trace.complemented = comp != rr.trace.complemented;
    Staircase w = transpose_staircase(rr.witness);
    if (comp) w.value = 1 - w.value;
    return RunOut{std::move(w), std::move(rr.trace)};
  }

  // Fewer than n columns start with 1 or end with a, so some column starts
  // with 0 and ends with abar.
  const int a = p.v;
  const int abar = 1 - a;
  int c = 0;
  for (int j = 1; j <= n; ++j) {
    if (x.at(1, j) == 0 && x.at(n, j) == abar) {
      c = j;
      break;
    }
  }
  assert(c != 0);
  const Position a5{1, c};
  const Position a6{n, c};
  trace.a5 = a5;
  trace.a6 = a6;

  Staircase s5, s6;
  WitnessCase subcase;
  if (abar == 0) {
    // Zeros along row 1 up to column c, down column c, and along row n from
    // column c; plus the ones of column c.
    subcase = WitnessCase::case2_sub1;
    s5.value = 0;
    for (int j = 1; j <= c; ++j) {
      if (x.at(1, j) == 0) s5.cells.push_back({1, j});
    }
    for (int i = 2; i < n; ++i) {
      if (x.at(i, c) == 0) s5.cells.push_back({i, c});
    }
    for (int j = c; j <= n; ++j) {
      if (x.at(n, j) == 0) s5.cells.push_back({n, j});
    }
    s6.value = 1;
    for (int i = 1; i <= n; ++i) {
      if (x.at(i, c) == 1) s6.cells.push_back({i, c});
    }
  } else {
    subcase = WitnessCase::case2_sub2;
    s5 = corner_staircase(x, a5, Corner::row_first);
    s6 = corner_staircase(x, a6, Corner::column_first);
  }
  trace.s5 = s5;
  trace.s6 = s6;

  const std::array<const Staircase*, 10> candidates = {
      &u.s1, &u.s2,       &u.s3,       &u.s4,       &*trace.s1p,
      &*trace.s2p, &*trace.s3p, &*trace.s4p, &s5,         &s6};
  const Staircase* best = candidates[0];
  for (const Staircase* cand : candidates) {
    if (cand->length() > best->length()) best = cand;
  }
  return finish(*best, subcase);
}

Matrix normalized_matrix(const Matrix& m, const WitnessTrace& t) {
  Matrix x = t.transposed ? transpose(m) : m;
  return t.complemented ? complement(x) : x;
}

bool identity_holds(const Matrix& x, int v, Position a2, Position a3, int s1,
                    int s2, int s3, int s4) {
  const int n = x.rows();
  const int w = 1 - v;
  int x1 = 0, y0 = 0, z0 = 0, w1 = 0;
  for (int j = 1; j < a2.j; ++j) x1 += x.at(1, j) == v;
  for (int i = 2; i < a3.i; ++i) y0 += x.at(i, a2.j) == w;
  for (int j = a2.j + 1; j < n; ++j) z0 += x.at(a3.i, j) == w;
  for (int i = a3.i + 1; i <= n; ++i) w1 += x.at(i, n) == v;
  return 2 * s1 + s2 + s3 + s4 == 4 * n - 3 + x1 + y0 + z0 + w1;
}

}  // namespace

Theorem2Result theorem2_witness(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("requires a square matrix, got " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
  }
  RunOut r = run(m, 0);
  return {std::move(r.witness), std::move(r.trace)};
}

bool check_observation10(const Matrix& m, const WitnessTrace& t) {
  if (!t.s1 || !t.s2 || !t.s3 || !t.s4 || !t.a2 || !t.a3) {
    throw std::invalid_argument(
        "trace did not reach the four-staircase branch");
  }
  const Matrix x = normalized_matrix(m, t);
  return identity_holds(x, 1, *t.a2, *t.a3, t.s1->length(), t.s2->length(),
                        t.s3->length(), t.s4->length());
}

bool check_observation10_primed(const Matrix& m, const WitnessTrace& t) {
  if (!t.s1p || !t.s2p || !t.s3p || !t.s4p || !t.a2p || !t.a3p) {
    throw std::invalid_argument(
        "trace did not reach the mirrored four-staircase branch");
  }
  const Matrix x = normalized_matrix(m, t);
  const Matrix xr = rotate180(x);
  const int n = x.rows();
  const Position a2r{n + 1 - t.a2p->i, n + 1 - t.a2p->j};
  const Position a3r{n + 1 - t.a3p->i, n + 1 - t.a3p->j};
  return identity_holds(xr, t.a, a2r, a3r, t.s1p->length(), t.s2p->length(),
                        t.s3p->length(), t.s4p->length());
}

}  // namespace staircase
