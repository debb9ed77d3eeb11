#include "platfill/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace platfill::gf2 {

bool Matrix::column_is_zero(std::size_t c) const {
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, c)) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (auto v : a_)
    if (v) return false;
  return true;
}

std::vector<std::uint8_t> Matrix::column(std::size_t c) const {
  std::vector<std::uint8_t> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("gf2 matrix shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (a(i, k))
        for (std::size_t j = 0; j < b.cols_; ++j) out.a_[i * out.cols_ + j] ^= b(k, j);
  return out;
}

std::size_t rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && !m(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        auto t = m(pivot, j);
        m.set(pivot, j, m(r, j));
        m.set(r, j, t);
      }
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c))
        for (std::size_t j = c; j < m.cols(); ++j)
          if (m(r, j)) m.flip(i, j);
    ++r;
  }
  return r;
}

bool in_column_space(const Matrix& m, const std::vector<std::uint8_t>& v) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector length != matrix rows");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m(r, c));
    aug.set(r, m.cols(), v[r]);
  }
  return rank(aug) == rank(m);
}

}  // namespace platfill::gf2
