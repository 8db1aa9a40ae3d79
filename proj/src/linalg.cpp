#include "affsel/linalg.hpp"

#include <stdexcept>

namespace affsel {

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: dimension mismatch");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("add: dimension mismatch");
  }
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("sub: dimension mismatch");
  }
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scale(const Rational& t, const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = t * v[i];
  return out;
}

std::optional<RatMat> solve_square(RatMat a, RatMat b) {
  const std::size_t k = a.size();
  if (b.size() != k) {
    throw std::invalid_argument("solve_square: row count mismatch");
  }
  const std::size_t r = k == 0 ? 0 : b[0].size();
  // Gauss-Jordan with first-nonzero pivoting; exact, so any nonzero pivot is fine.
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && a[piv][col] == 0) ++piv;
    if (piv == k) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (std::size_t j = 0; j < k; ++j) a[col][j] *= inv;
    for (std::size_t j = 0; j < r; ++j) b[col][j] *= inv;
    for (std::size_t row = 0; row < k; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t j = 0; j < k; ++j) a[row][j] -= factor * a[col][j];
      for (std::size_t j = 0; j < r; ++j) b[row][j] -= factor * b[col][j];
    }
  }
  return b;
}

std::size_t matrix_rank(RatMat a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const Rational inv = Rational(1) / a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
    for (std::size_t row = 0; row < rows; ++row) {
      if (row == rank || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t j = col; j < cols; ++j) a[row][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t affine_rank(const std::vector<RatVec>& points) {
  if (points.size() <= 1) return 0;
  RatMat diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    diffs.push_back(sub(points[i], points[0]));
  }
  return matrix_rank(std::move(diffs));
}

}  // namespace affsel
