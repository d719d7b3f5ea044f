#pragma once

#include <algorithm>
#include <utility>

#include "krk0/integer.hpp"

namespace krk0 {

/// U * M * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank
/// positive and all further diagonal entries zero.
template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> U;
  Matrix<Scalar> D;
  Matrix<Scalar> V;
  Eigen::Index rank = 0;
};

namespace detail {

// Nearest-integer quotient: a - q*b has absolute value at most |b|/2.
template <typename Scalar>
Scalar centered_quotient(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  Scalar r = a - q * b;
  if (r != 0) {
    Scalar twice = r * 2;
    Scalar mag = b < 0 ? Scalar(-b) : b;
    Scalar tmag = twice < 0 ? Scalar(-twice) : twice;
    if (tmag > mag) q += ((r < 0) == (b < 0)) ? 1 : -1;
  }
  return q;
}

template <typename Scalar>
Scalar scalar_gcd(Scalar a, Scalar b) {
  while (b != 0) {
    Scalar r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a < 0 ? Scalar(-a) : a;
}

template <typename Scalar>
Scalar magnitude(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

template <typename Scalar, bool Track>
class SmithEliminator {
 public:
  explicit SmithEliminator(Matrix<Scalar> m) : a_(std::move(m)) {
    if constexpr (Track) {
      u_ = Matrix<Scalar>::Identity(a_.rows(), a_.rows());
      v_ = Matrix<Scalar>::Identity(a_.cols(), a_.cols());
    }
  }

  void run() {
    const Eigen::Index limit = std::min(a_.rows(), a_.cols());
    for (Eigen::Index s = 0; s < limit; ++s) {
      if (!move_smallest_to(s)) break;
      eliminate(s);
      if (a_(s, s) < 0) negate_row(s);
      rank_ = s + 1;
    }
  }

  SmithForm<Scalar> result() && { return {std::move(u_), std::move(a_), std::move(v_), rank_}; }
  Matrix<Scalar>& diagonal() { return a_; }
  Eigen::Index rank() const { return rank_; }

 private:
  // Smallest nonzero magnitude in the trailing block, first in row-major
  // order on ties. Returns false if the block is zero.
  bool move_smallest_to(Eigen::Index s) {
    Eigen::Index bi = -1, bj = -1;
    Scalar best;
    for (Eigen::Index i = s; i < a_.rows(); ++i) {
      for (Eigen::Index j = s; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        Scalar m = magnitude(a_(i, j));
        if (bi < 0 || m < best) {
          best = std::move(m);
          bi = i;
          bj = j;
          if (best == 1) break;
        }
      }
      if (bi >= 0 && best == 1) break;
    }
    if (bi < 0) return false;
    swap_rows(s, bi);
    swap_cols(s, bj);
    return true;
  }

  void eliminate(Eigen::Index s) {
    for (;;) {
      bool leftover = false;
      for (Eigen::Index i = s + 1; i < a_.rows(); ++i) {
        if (a_(i, s) == 0) continue;
        Scalar q = centered_quotient(a_(i, s), a_(s, s));
        if (q != 0) add_row(i, s, -q);
        leftover = leftover || a_(i, s) != 0;
      }
      for (Eigen::Index j = s + 1; j < a_.cols(); ++j) {
        if (a_(s, j) == 0) continue;
        Scalar q = centered_quotient(a_(s, j), a_(s, s));
        if (q != 0) add_col(j, s, -q);
        leftover = leftover || a_(s, j) != 0;
      }
      if (leftover) {
        pivot_on_smallest_in_cross(s);
        continue;
      }
      // Row and column s are clear. The untracked variant repairs the
      // divisibility chain on the final diagonal instead.
      if constexpr (!Track) return;
      Eigen::Index bad = -1;
      for (Eigen::Index i = s + 1; i < a_.rows() && bad < 0; ++i)
        for (Eigen::Index j = s + 1; j < a_.cols(); ++j)
          if (a_(i, j) != 0 && a_(i, j) % a_(s, s) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) return;
      add_row(s, bad, Scalar(1));
    }
  }

  void pivot_on_smallest_in_cross(Eigen::Index s) {
    Eigen::Index bi = s, bj = s;
    Scalar best = magnitude(a_(s, s));
    for (Eigen::Index i = s + 1; i < a_.rows(); ++i)
      if (a_(i, s) != 0 && magnitude(a_(i, s)) < best) {
        best = magnitude(a_(i, s));
        bi = i;
        bj = s;
      }
    for (Eigen::Index j = s + 1; j < a_.cols(); ++j)
      if (a_(s, j) != 0 && magnitude(a_(s, j)) < best) {
        best = magnitude(a_(s, j));
        bi = s;
        bj = j;
      }
    swap_rows(s, bi);
    swap_cols(s, bj);
  }

  // row_dst += c * row_src
  void add_row(Eigen::Index dst, Eigen::Index src, const Scalar& c) {
    for (Eigen::Index j = 0; j < a_.cols(); ++j)
      if (a_(src, j) != 0) a_(dst, j) += c * a_(src, j);
    if constexpr (Track) {
      for (Eigen::Index j = 0; j < u_.cols(); ++j)
        if (u_(src, j) != 0) u_(dst, j) += c * u_(src, j);
    }
  }

  // col_dst += c * col_src
  void add_col(Eigen::Index dst, Eigen::Index src, const Scalar& c) {
    for (Eigen::Index i = 0; i < a_.rows(); ++i)
      if (a_(i, src) != 0) a_(i, dst) += c * a_(i, src);
    if constexpr (Track) {
      for (Eigen::Index i = 0; i < v_.rows(); ++i)
        if (v_(i, src) != 0) v_(i, dst) += c * v_(i, src);
    }
  }

  void swap_rows(Eigen::Index i, Eigen::Index k) {
    if (i == k) return;
    a_.row(i).swap(a_.row(k));
    if constexpr (Track) u_.row(i).swap(u_.row(k));
  }

  void swap_cols(Eigen::Index j, Eigen::Index k) {
    if (j == k) return;
    a_.col(j).swap(a_.col(k));
    if constexpr (Track) v_.col(j).swap(v_.col(k));
  }

  void negate_row(Eigen::Index i) {
    for (Eigen::Index j = 0; j < a_.cols(); ++j) a_(i, j) = -a_(i, j);
    if constexpr (Track)
      for (Eigen::Index j = 0; j < u_.cols(); ++j) u_(i, j) = -u_(i, j);
  }

  Matrix<Scalar> a_;
  Matrix<Scalar> u_;
  Matrix<Scalar> v_;
  Eigen::Index rank_ = 0;
};

}  // namespace detail

/// Smith normal form with both transforms accumulated. The pivot at each
/// stage is the entry of smallest nonzero magnitude in the trailing block.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& m) {
  detail::SmithEliminator<Scalar, true> elim(m);
  elim.run();
  return std::move(elim).result();
}

/// Nonzero diagonal of the Smith form (d_1 | ... | d_rank), computed by the
/// same elimination without accumulating U and V.
template <typename Scalar>
std::vector<Scalar> smith_diagonal(const Matrix<Scalar>& m) {
  detail::SmithEliminator<Scalar, false> elim(m);
  elim.run();
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(elim.rank()));
  for (Eigen::Index i = 0; i < elim.rank(); ++i) out.push_back(elim.diagonal()(i, i));
  // Without the per-stage divisibility repair the diagonal is only
  // equivalent to the Smith form; gcd/lcm exchanges restore the chain.
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[j] % out[i] == 0) continue;
      Scalar g = detail::scalar_gcd(out[i], out[j]);
      out[j] = out[i] / g * out[j];
      out[i] = g;
    }
  return out;
}

}  // namespace krk0
