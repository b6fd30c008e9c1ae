#pragma once

// Minimal dense exact linear algebra over a field type (Scalar, RatFunc, ...).
// Gaussian elimination with exact pivoting; no tolerances anywhere.
//
// Ring elements may carry context (variable lists), so zeros are always
// derived from existing entries rather than default-constructed.

#include <stdexcept>
#include <vector>

namespace pgcheck {

template <class T>
using Mat = std::vector<std::vector<T>>;

template <class T>
Mat<T> mat_filled(size_t rows, size_t cols, const T& value) {
  return Mat<T>(rows, std::vector<T>(cols, value));
}

template <class T>
Mat<T> mat_identity(size_t n, const T& zero, const T& one) {
  Mat<T> m = mat_filled(n, n, zero);
  for (size_t k = 0; k < n; ++k) m[k][k] = one;
  return m;
}

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size())
    throw std::invalid_argument("mat_mul: shape mismatch");
  Mat<T> r;
  r.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    std::vector<T> row;
    row.reserve(b[0].size());
    for (size_t j = 0; j < b[0].size(); ++j) {
      T acc = a[i][0] * b[0][j];
      for (size_t k = 1; k < b.size(); ++k) acc = acc + a[i][k] * b[k][j];
      row.push_back(acc);
    }
    r.push_back(std::move(row));
  }
  return r;
}

template <class T>
std::vector<T> mat_vec(const Mat<T>& a, const std::vector<T>& v) {
  if (a.empty() || a[0].size() != v.size()) throw std::invalid_argument("mat_vec: shape");
  std::vector<T> r;
  r.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    T acc = a[i][0] * v[0];
    for (size_t j = 1; j < v.size(); ++j) acc = acc + a[i][j] * v[j];
    r.push_back(acc);
  }
  return r;
}

template <class T>
Mat<T> mat_transpose(const Mat<T>& a) {
  if (a.empty()) return a;
  Mat<T> r = mat_filled(a[0].size(), a.size(), a[0][0]);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

template <class T>
bool mat_equal(const Mat<T>& a, const Mat<T>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  }
  return true;
}

template <class T>
T mat_det(Mat<T> m) {
  size_t n = m.size();
  if (n == 0) throw std::invalid_argument("mat_det: empty");
  T zero = m[0][0] - m[0][0];
  bool neg = false;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && is_zero(m[piv][col])) ++piv;
    if (piv == n) return zero;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      neg = !neg;
    }
    for (size_t r = col + 1; r < n; ++r) {
      if (is_zero(m[r][col])) continue;
      T f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
    }
  }
  T det = m[0][0];
  for (size_t k = 1; k < n; ++k) det = det * m[k][k];
  return neg ? -det : det;
}

template <class T>
bool mat_invertible(const Mat<T>& m) {
  return !is_zero(mat_det(m));
}

template <class T>
Mat<T> mat_inverse(Mat<T> m, const T& zero, const T& one) {
  size_t n = m.size();
  Mat<T> inv = mat_identity(n, zero, one);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && is_zero(m[piv][col])) ++piv;
    if (piv == n) throw std::domain_error("mat_inverse: singular matrix");
    if (piv != col) {
      std::swap(m[piv], m[col]);
      std::swap(inv[piv], inv[col]);
    }
    T d = m[col][col];
    for (size_t c = 0; c < n; ++c) {
      m[col][c] = m[col][c] / d;
      inv[col][c] = inv[col][c] / d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(m[r][col])) continue;
      T f = m[r][col];
      for (size_t c = 0; c < n; ++c) {
        m[r][c] = m[r][c] - f * m[col][c];
        inv[r][c] = inv[r][c] - f * inv[col][c];
      }
    }
  }
  return inv;
}

template <class T>
std::vector<T> mat_solve(Mat<T> a, const std::vector<T>& b, const T& zero, const T& one) {
  Mat<T> inv = mat_inverse(std::move(a), zero, one);
  return mat_vec(inv, b);
}

template <class T>
size_t mat_rank(Mat<T> m) {
  size_t rank = 0;
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && is_zero(m[piv][col])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    for (size_t r = row + 1; r < rows; ++r) {
      if (is_zero(m[r][col])) continue;
      T f = m[r][col] / m[row][col];
      for (size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - f * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace pgcheck
