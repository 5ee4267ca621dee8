#include "kohn/exact_linalg.hpp"

#include <stdexcept>

namespace kohn {

namespace {

// Reduced row echelon form in place; returns the pivot column of each row
// that holds one (in order).
std::vector<std::size_t> rref(RatMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[row], a[pivot]);
    const Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j < ncols; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational factor = a[i][col];
      for (std::size_t j = col; j < ncols; ++j) a[i][j] -= factor * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(RatMatrix a, std::size_t ncols) {
  for (const auto& r : a)
    if (r.size() != ncols) throw std::invalid_argument("ragged matrix");
  const std::vector<std::size_t> pivots = rref(a, ncols);

  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RatMatrix a) {
  const std::size_t n = a.size();
  for (const auto& r : a)
    if (r.size() != n) throw std::invalid_argument("determinant needs a square matrix");
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[col], a[pivot]);
      det = -det;
    }
    det *= a[col][col];
    const Rational inv = 1 / a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      const Rational factor = a[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[col][j];
    }
  }
  return det;
}

std::optional<std::vector<Rational>> solve_linear(RatMatrix a, std::vector<Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
  if (a.empty()) return std::vector<Rational>{};
  const std::size_t ncols = a[0].size();
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);

  RatMatrix aug = std::move(a);
  const std::vector<std::size_t> pivots = rref(aug, ncols + 1);

  // Inconsistent iff some pivot landed in the rhs column.
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;

  std::vector<Rational> x(ncols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][ncols];
  return x;
}

}  // namespace kohn
