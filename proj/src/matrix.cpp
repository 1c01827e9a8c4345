#include "staircase/matrix.hpp"

#include <random>

namespace staircase {

Matrix::Matrix(int n, int N) : n_(n), N_(N) {
  if (n < 1 || N < 1) {
    throw std::invalid_argument("matrix dimensions must be at least 1x1");
  }
  words_per_row_ = (N + 63) / 64;
  words_.assign(static_cast<std::size_t>(n) * words_per_row_, 0);
}

Matrix Matrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw FormatError("empty input");
  const std::size_t width = rows[0].size();
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(width == 0 ? 0 : width));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw FormatError("ragged input: line " + std::to_string(r + 1) +
                        " has length " + std::to_string(rows[r].size()) +
                        ", expected " + std::to_string(width));
    }
    for (std::size_t c = 0; c < width; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') {
        throw FormatError(std::string("unexpected character '") + ch +
                          "' at line " + std::to_string(r + 1));
      }
      if (ch == '1') m.set(static_cast<int>(r + 1), static_cast<int>(c + 1), 1);
    }
  }
  return m;
}

void Matrix::set(int i, int j, int v) {
  assert(i >= 1 && i <= n_ && j >= 1 && j <= N_);
  const std::uint64_t bit = std::uint64_t{1} << bit_index(j);
  if (v) {
    words_[word_index(i, j)] |= bit;
  } else {
    words_[word_index(i, j)] &= ~bit;
  }
}

std::string Matrix::row_string(int i) const {
  std::string out(static_cast<std::size_t>(N_), '0');
  for (int j = 1; j <= N_; ++j) {
    if (at(i, j)) out[static_cast<std::size_t>(j - 1)] = '1';
  }
  return out;
}

Matrix parse_matrix(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty()) throw FormatError("empty input");
  for (const auto& line : lines) {
    if (line.empty()) throw FormatError("empty line in input");
  }
  return Matrix::from_rows(lines);
}

std::string serialize_matrix_plain(const Matrix& m) {
  std::string out;
  out.reserve(static_cast<std::size_t>(m.rows()) * (m.cols() + 1));
  for (int i = 1; i <= m.rows(); ++i) {
    out += m.row_string(i);
    out += '\n';
  }
  return out;
}

Matrix complement(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= m.cols(); ++j) {
      out.set(i, j, 1 - m.at(i, j));
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= m.cols(); ++j) {
      out.set(j, i, m.at(i, j));
    }
  }
  return out;
}

Matrix rotate180(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= m.cols(); ++j) {
      out.set(m.rows() + 1 - i, m.cols() + 1 - j, m.at(i, j));
    }
  }
  return out;
}

Matrix random_matrix(int n, int N, std::uint64_t seed, double density) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  Matrix m(n, N);
  std::mt19937_64 gen(seed);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= N; ++j) {
      // Top 53 bits mapped to [0, 1); avoids distribution objects whose
      // output differs between standard library implementations.
      const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      if (u < density) m.set(i, j, 1);
    }
  }
  return m;
}

}  // namespace staircase
