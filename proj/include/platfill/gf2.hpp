#pragma once

#include <cstdint>
#include <vector>

namespace platfill::gf2 {

/// Dense matrix over GF(2); entry (r,c) in {0,1}.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void flip(std::size_t r, std::size_t c) { a_[r * cols_ + c] ^= 1; }
  void set(std::size_t r, std::size_t c, std::uint8_t v) { a_[r * cols_ + c] = v & 1; }

  bool column_is_zero(std::size_t c) const;
  bool is_zero() const;
  std::vector<std::uint8_t> column(std::size_t c) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint8_t> a_;
};

std::size_t rank(Matrix m);

/// True iff v lies in the column space of m.
bool in_column_space(const Matrix& m, const std::vector<std::uint8_t>& v);

}  // namespace platfill::gf2
