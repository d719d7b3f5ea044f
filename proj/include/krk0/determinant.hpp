#pragma once

#include <utility>

#include "krk0/errors.hpp"
#include "krk0/integer.hpp"
#include "krk0/polynomial.hpp"

namespace krk0 {

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
/// Every intermediate entry is a minor of the input, so all divisions are
/// exact over the integers.
template <typename Scalar>
Scalar bareiss_determinant(Matrix<Scalar> a) {
  if (a.rows() != a.cols()) throw InvalidRange("determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  Scalar sign(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return n == 0 ? sign : Scalar(sign * a(n - 1, n - 1));
}

/// Sylvester matrix of f and g: deg g shifted rows of f's coefficients
/// followed by deg f shifted rows of g's, coefficients in descending order.
template <typename Scalar>
Matrix<Scalar> sylvester_matrix(const Polynomial<Scalar>& f, const Polynomial<Scalar>& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroInput("ZeroInput: resultant of the zero polynomial");
  const auto m = static_cast<Eigen::Index>(*f.degree());
  const auto n = static_cast<Eigen::Index>(*g.degree());
  Matrix<Scalar> s = Matrix<Scalar>::Zero(m + n, m + n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index j = 0; j <= m; ++j) s(r, r + j) = f.coeff(static_cast<std::size_t>(m - j));
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index j = 0; j <= n; ++j) s(n + r, r + j) = g.coeff(static_cast<std::size_t>(n - j));
  return s;
}

/// Res(f, g) = det(sylvester_matrix(f, g)); throws ZeroInput on a zero argument.
template <typename Scalar>
Scalar resultant(const Polynomial<Scalar>& f, const Polynomial<Scalar>& g) {
  return bareiss_determinant(sylvester_matrix(f, g));
}

/// |Res(m, g)| for monic m via |Res(m, g mod m)|: with m monic the
/// resultant is the product of g over the roots of m, which only sees g mod m.
/// Keeps the Sylvester matrix at most 2 deg(m) wide.
inline Integer resultant_magnitude_mod(const IntPoly& monic, const IntPoly& g) {
  if (!monic.is_monic()) throw InvalidRange("resultant_magnitude_mod needs a monic first argument");
  const IntPoly r = reduce_mod(g, monic);
  if (r.is_zero()) return *monic.degree() == 0 ? Integer(1) : Integer(0);
  return abs(resultant(monic, r));
}

}  // namespace krk0
