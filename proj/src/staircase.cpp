#include "staircase/staircase.hpp"

namespace staircase {

namespace {

enum class Dir { right, down };

std::string pos_str(Position p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

}  // namespace

int turns(const Staircase& s) {
  int count = 0;
  for (std::size_t k = 1; k + 1 < s.cells.size(); ++k) {
    const Dir in = s.cells[k].i == s.cells[k - 1].i ? Dir::right : Dir::down;
    const Dir out = s.cells[k + 1].i == s.cells[k].i ? Dir::right : Dir::down;
    if (in != out) ++count;
  }
  return count;
}

Validation validate_staircase(const Matrix& m, const Staircase& s) {
  if (s.value != 0 && s.value != 1) {
    return {false, "value must be 0 or 1"};
  }
  if (s.cells.empty()) {
    return {false, "staircase has no cells"};
  }
  for (const Position& p : s.cells) {
    if (p.i < 1 || p.i > m.rows() || p.j < 1 || p.j > m.cols()) {
      return {false, "position " + pos_str(p) + " out of bounds"};
    }
    if (m.at(p) != s.value) {
      return {false, "cell " + pos_str(p) + " holds " +
                         std::to_string(m.at(p)) + ", expected " +
                         std::to_string(s.value)};
    }
  }
  for (std::size_t k = 1; k < s.cells.size(); ++k) {
    const Position p = s.cells[k - 1];
    const Position q = s.cells[k];
    const bool right = q.i == p.i && q.j > p.j;
    const bool down = q.j == p.j && q.i > p.i;
    if (!right && !down) {
      return {false,
              "invalid step " + pos_str(p) + " -> " + pos_str(q) +
                  ": must move right in the row or down in the column"};
    }
  }
  return {true, ""};
}

}  // namespace staircase
