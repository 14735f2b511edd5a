#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

#include "numeric.hpp"

namespace cubix {

/* Small fixed-size matrix over an exact scalar type. */
template <typename T, std::size_t R, std::size_t C>
struct Mat {
  std::array<std::array<T, C>, R> m{};

  T& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return m[r][c]; }

  static Mat identity()
    requires(R == C)
  {
    Mat I;
    for (std::size_t i = 0; i < R; ++i) I(i, i) = T(1);
    return I;
  }

  friend bool operator==(const Mat& a, const Mat& b) { return a.m == b.m; }

  friend Mat operator+(const Mat& a, const Mat& b)
  {
    Mat out;
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
  }

  friend Mat operator-(const Mat& a, const Mat& b)
  {
    Mat out;
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
  }

  Mat<T, C, R> transpose() const
  {
    Mat<T, C, R> out;
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) out(j, i) = m[i][j];
    return out;
  }

  T trace() const
    requires(R == C)
  {
    T t{};
    for (std::size_t i = 0; i < R; ++i) t += m[i][i];
    return t;
  }

  bool is_zero() const
  {
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j)
        if (!(m[i][j] == T(0))) return false;
    return true;
  }
};

template <typename T, std::size_t R, std::size_t K, std::size_t C>
Mat<T, R, C> operator*(const Mat<T, R, K>& a, const Mat<T, K, C>& b)
{
  Mat<T, R, C> out;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      T acc{};
      for (std::size_t k = 0; k < K; ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

template <typename T>
using Mat2 = Mat<T, 2, 2>;
template <typename T>
using Mat3 = Mat<T, 3, 3>;

template <typename T>
T det(const Mat2<T>& a)
{
  return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

template <typename T>
T det(const Mat3<T>& a)
{
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
       - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
       + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

/* Transposed cofactor matrix; adjugate(A) * A = det(A) * I. */
template <typename T>
Mat3<T> adjugate(const Mat3<T>& a)
{
  Mat3<T> out;
  out(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  out(0, 1) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
  out(0, 2) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
  out(1, 0) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
  out(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
  out(1, 2) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
  out(2, 0) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  out(2, 1) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
  out(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  return out;
}

template <typename T>
Mat3<T> inverse(const Mat3<T>& a)
{
  T d = det(a);
  if (d == T(0)) throw std::domain_error("singular matrix has no inverse");
  Mat3<T> adj = adjugate(a);
  Mat3<T> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = adj(i, j) / d;
  return out;
}

}  // namespace cubix
