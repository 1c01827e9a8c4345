#include "staircase/json_io.hpp"

namespace staircase {

const char* witness_case_name(WitnessCase c) {
  switch (c) {
    case WitnessCase::trivial_row:
      return "trivial-row";
    case WitnessCase::trivial_column:
      return "trivial-column";
    case WitnessCase::obs9:
      return "obs9";
    case WitnessCase::case1:
      return "case1";
    case WitnessCase::case2_sub1:
      return "case2-sub1";
    case WitnessCase::case2_sub2:
      return "case2-sub2";
  }
  return "?";
}

Json json_matrix(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.rows(); ++i) rows.push_back(m.row_string(i));
  return Json{{"n", m.rows()}, {"N", m.cols()}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int N = j.at("N").get<int>();
    std::vector<std::string> rows = j.at("rows").get<std::vector<std::string>>();
    if (static_cast<int>(rows.size()) != n) {
      throw FormatError("row count does not match n");
    }
    Matrix m = Matrix::from_rows(rows);
    if (m.cols() != N) throw FormatError("row length does not match N");
    return m;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("bad matrix json: ") + e.what());
  }
}

std::string serialize_matrix(const Matrix& m, MatrixFormat format) {
  if (format == MatrixFormat::plain) return serialize_matrix_plain(m);
  return json_matrix(m).dump();
}

Json json_position(Position p) { return Json::array({p.i, p.j}); }

Json json_staircase(const Staircase& s) {
  Json cells = Json::array();
  for (const Position& p : s.cells) cells.push_back(json_position(p));
  return Json{{"value", s.value},
              {"cells", std::move(cells)},
              {"turns", turns(s)}};
}

Json json_profile(const StProfile& p) {
  return Json{{"st0", p.st0}, {"st1", p.st1}, {"st", p.st}, {"sigma", p.sigma}};
}

Json json_sigma_witness(const SigmaWitness& w) {
  return Json{{"anchor", json_position(w.anchor)},
              {"majority_value", w.majority_value},
              {"transposed", w.transposed},
              {"majority", json_staircase(w.majority)},
              {"minority", json_staircase(w.minority)}};
}

namespace {

Json opt_position(const std::optional<Position>& p) {
  return p ? json_position(*p) : Json(nullptr);
}

Json opt_staircase(const std::optional<Staircase>& s) {
  return s ? json_staircase(*s) : Json(nullptr);
}

}  // namespace

Json json_trace(const WitnessTrace& t) {
  Json j;
  j["normalization"] = Json{{"complemented", t.complemented},
                            {"transposed", t.transposed}};
  j["case"] = witness_case_name(t.case_taken);
  j["a"] = t.a;
  j["abar"] = t.abar;
  Json anchors;
  anchors["a1"] = opt_position(t.a1);
  anchors["a2"] = opt_position(t.a2);
  anchors["a3"] = opt_position(t.a3);
  anchors["a4"] = opt_position(t.a4);
  anchors["a5"] = opt_position(t.a5);
  anchors["a6"] = opt_position(t.a6);
  anchors["a1p"] = opt_position(t.a1p);
  anchors["a2p"] = opt_position(t.a2p);
  anchors["a3p"] = opt_position(t.a3p);
  anchors["a4p"] = opt_position(t.a4p);
  j["anchors"] = std::move(anchors);
  Json st;
  st["S1"] = opt_staircase(t.s1);
  st["S2"] = opt_staircase(t.s2);
  st["S3"] = opt_staircase(t.s3);
  st["S4"] = opt_staircase(t.s4);
  st["S5"] = opt_staircase(t.s5);
  st["S6"] = opt_staircase(t.s6);
  st["S1p"] = opt_staircase(t.s1p);
  st["S2p"] = opt_staircase(t.s2p);
  st["S3p"] = opt_staircase(t.s3p);
  st["S4p"] = opt_staircase(t.s4p);
  st["obs9_minority"] = opt_staircase(t.obs9_minority);
  j["staircases"] = std::move(st);
  j["counts"] = Json{{"x1", t.x1},   {"y0", t.y0},         {"z0", t.z0},
                     {"w1", t.w1},   {"xap", t.xap},       {"yabarp", t.yabarp},
                     {"zabarp", t.zabarp}, {"wap", t.wap}};
  j["hands"] = Json{{"s1_h", t.s1_h},
                    {"s1_v", t.s1_v},
                    {"sap_h", t.sap_h},
                    {"sap_v", t.sap_v}};
  return j;
}

Json json_report(const SearchReport& r) {
  Json samples = Json::array();
  for (const Matrix& m : r.minimizers_sample) samples.push_back(json_matrix(m));
  return Json{{"n", r.n},
              {"N", r.N},
              {"statistic", statistic_name(r.statistic, r.turn_budget)},
              {"exact_value", r.exact_value},
              {"minimizers_sample", std::move(samples)},
              {"matrices_enumerated", r.matrices_enumerated},
              {"symmetry_factor", r.symmetry_factor},
              {"thread_count", r.thread_count}};
}

Json json_probe(const TwoTurnProbe& p) {
  Json attaining = Json::array();
  for (const Matrix& m : p.attaining) attaining.push_back(json_matrix(m));
  Json j{{"n", p.n},
         {"min_observed", p.min_observed},
         {"exact", p.exact},
         {"matrices_inspected", p.matrices_inspected},
         {"attaining", std::move(attaining)}};
  if (!p.exact) {
    j["seed"] = p.seed;
    j["prng"] = p.prng;
  }
  return j;
}

}  // namespace staircase
