#pragma once

#include "arith/bigint.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace arith {

/// Dense row-major integer matrix, just enough for exact elimination.
template <typename Int>
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  std::vector<Int> multiply(const std::vector<Int>& x) const {
    std::vector<Int> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> data_;
};

/// Row echelon form from Bareiss elimination. Every division performed is exact.
template <typename Int>
struct EchelonForm {
  IntMatrix<Int> matrix;
  std::vector<std::size_t> pivot_columns;  // pivot_columns[i] is the pivot of row i

  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

template <typename Int>
EchelonForm<Int> bareiss_echelon(IntMatrix<Int> m) {
  std::vector<std::size_t> pivots;
  Int previous(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pick = row;
    while (pick < m.rows() && m(pick, col) == 0) ++pick;
    if (pick == m.rows()) continue;
    m.swap_rows(row, pick);
    const Int pivot = m(row, col);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j)
        m(i, j) = (m(i, j) * pivot - m(i, col) * m(row, j)) / previous;
      m(i, col) = 0;
    }
    // Entries to the left of col in rows below are already zero; entries in
    // skipped columns were scaled along with the rest, keeping the minors exact.
    previous = pivot;
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

/// Divides out the content and makes the first nonzero entry positive.
template <typename Int>
void make_primitive(std::vector<Int>& v) {
  Int g(0);
  for (const auto& x : v) g = arith::gcd(g, x);
  if (g == 0) return;
  for (auto& x : v) x /= g;
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

/// Integer basis of the right kernel of m, one primitive vector per free column.
///
/// Back substitution stays in the integers: whenever a pivot does not divide the
/// running numerator, the partial solution is scaled by the missing factor first.
template <typename Int>
std::vector<std::vector<Int>> integer_kernel(const IntMatrix<Int>& m) {
  const auto echelon = bareiss_echelon(m);
  const auto& u = echelon.matrix;
  const std::size_t n = m.cols();

  std::vector<char> is_pivot(n, 0);
  for (auto c : echelon.pivot_columns) is_pivot[c] = 1;

  std::vector<std::vector<Int>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Int> x(n);
    x[free] = 1;
    for (std::size_t i = echelon.rank(); i-- > 0;) {
      const std::size_t c = echelon.pivot_columns[i];
      Int numerator(0);
      for (std::size_t j = c + 1; j < n; ++j) numerator -= u(i, j) * x[j];
      const Int& pivot = u(i, c);
      Int g = arith::gcd(numerator, pivot);
      if (g == 0) g = 1;
      Int scale = pivot / g;
      if (scale < 0) scale = -scale;
      if (scale != 1)
        for (auto& value : x) value *= scale;
      x[c] = (numerator * scale) / pivot;
    }
    make_primitive(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace arith
