#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace staircase {

/// Cell address. Rows count from 1 top-down, columns from 1 left-right.
struct Position {
  int i = 0;
  int j = 0;
  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation would exceed its configured work limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rectangular 0/1 matrix with bit-packed rows. Bits past cols() in the last
// word of each row stay zero, so equality is plain member comparison.
// Immutable in normal use: operations return new matrices.
class Matrix {
 public:
  Matrix(int n, int N);
  static Matrix from_rows(const std::vector<std::string>& rows);

  int rows() const { return n_; }
  int cols() const { return N_; }

  int at(int i, int j) const {
    assert(i >= 1 && i <= n_ && j >= 1 && j <= N_);
    return static_cast<int>((words_[word_index(i, j)] >> bit_index(j)) & 1u);
  }
  int at(Position p) const { return at(p.i, p.j); }

  void set(int i, int j, int v);
  void set(Position p, int v) { set(p.i, p.j, v); }

  std::string row_string(int i) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t word_index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * words_per_row_ +
           static_cast<std::size_t>(j - 1) / 64;
  }
  static int bit_index(int j) { return (j - 1) % 64; }

  int n_ = 0;
  int N_ = 0;
  int words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Parses lines of '0'/'1' characters. A trailing newline is accepted;
/// ragged lines, other characters or empty input raise FormatError.
Matrix parse_matrix(std::string_view text);

/// Inverse of parse_matrix: one line per row, each LF-terminated.
std::string serialize_matrix_plain(const Matrix& m);

Matrix complement(const Matrix& m);
Matrix transpose(const Matrix& m);
Matrix rotate180(const Matrix& m);

/// Generator used by random_matrix; reports that contain random data name it.
inline constexpr const char* kPrngName = "mt19937_64";

/// Each cell is 1 independently with probability `density`, reproducible
/// from the seed across platforms.
Matrix random_matrix(int n, int N, std::uint64_t seed, double density);

}  // namespace staircase
