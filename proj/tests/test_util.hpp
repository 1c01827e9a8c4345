#pragma once

#include <string>
#include <vector>

#include "staircase/matrix.hpp"
#include "staircase/staircase.hpp"

namespace staircase::test {

inline Matrix mk(const std::vector<std::string>& rows) {
  return Matrix::from_rows(rows);
}

inline Staircase stair(int value, std::vector<Position> cells) {
  return Staircase{value, std::move(cells)};
}

}  // namespace staircase::test
