#pragma once

// Dense matrices over a field and exact rank.

#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace plethysm {

template <class S>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<S> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const S& zero) : rows(r), cols(c), data(r * c, zero) {}

  S& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.data == y.data;
  }
};

template <class S>
Matrix<S> matmul(const Matrix<S>& x, const Matrix<S>& y, const S& zero) {
  if (x.cols != y.rows) fail(ErrorKind::InvalidArgument, "matrix shapes do not match");
  Matrix<S> z(x.rows, y.cols, zero);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      const S& a = x(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols; ++j) z(i, j) += a * y(k, j);
    }
  }
  return z;
}

template <class S>
Matrix<S> transpose(const Matrix<S>& x) {
  Matrix<S> t;
  t.rows = x.cols;
  t.cols = x.rows;
  t.data.reserve(x.data.size());
  for (std::size_t j = 0; j < x.cols; ++j) {
    for (std::size_t i = 0; i < x.rows; ++i) t.data.push_back(x(i, j));
  }
  return t;
}

namespace detail {

inline std::int64_t rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  std::int64_t rank = 0;
  const std::size_t n = a.size(), m = n ? a[0].size() : 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    std::int64_t inv = powmod(a[row][col], static_cast<std::uint64_t>(p - 2), p);
    for (std::size_t j = col; j < m; ++j) a[row][j] = mulmod(a[row][j], inv, p);
    for (std::size_t i = row + 1; i < n; ++i) {
      std::int64_t f = a[i][col];
      if (!f) continue;
      for (std::size_t j = col; j < m; ++j) {
        if (a[row][j]) a[i][j] = (a[i][j] - mulmod(f, a[row][j], p) + p) % p;
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Rank by exact Gaussian elimination.
inline std::int64_t rank(const Matrix<Elem>& x) {
  if (x.rows == 0 || x.cols == 0) return 0;
  Field f = x.data[0].field();
  if (f.is_finite() && f.degree() == 1) {
    std::vector<std::vector<std::int64_t>> a(x.rows, std::vector<std::int64_t>(x.cols));
    for (std::size_t i = 0; i < x.rows; ++i) {
      for (std::size_t j = 0; j < x.cols; ++j) a[i][j] = x(i, j).code();
    }
    return detail::rank_mod_p(std::move(a), f.characteristic());
  }
  Matrix<Elem> a = x;
  std::int64_t rk = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t piv = row;
    while (piv < a.rows && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows) continue;
    for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(piv, j), a(row, j));
    Elem inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols; ++j) a(row, j) = a(row, j) * inv;
    for (std::size_t i = row + 1; i < a.rows; ++i) {
      Elem fct = a(i, col);
      if (fct.is_zero()) continue;
      for (std::size_t j = col; j < a.cols; ++j) {
        if (!a(row, j).is_zero()) a(i, j) = a(i, j) - fct * a(row, j);
      }
    }
    ++row;
    ++rk;
  }
  return rk;
}

}  // namespace plethysm
