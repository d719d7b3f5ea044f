#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "krk0/errors.hpp"
#include "krk0/integer.hpp"

namespace krk0 {

/// Dense univariate polynomial over an integral domain, coefficient i being
/// the coefficient of t^i. The zero polynomial has no coefficients; every
/// other value has a nonzero top coefficient.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Scalar> ascending) : coeffs_(ascending) { normalize(); }
  explicit Polynomial(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { normalize(); }

  static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }

  /// c * t^k
  static Polynomial monomial(std::size_t k, Scalar c = Scalar(1)) {
    std::vector<Scalar> v(k + 1, Scalar(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  /// t^n - 1
  static Polynomial power_minus_one(std::size_t n) {
    std::vector<Scalar> v(n + 1, Scalar(0));
    v[0] = Scalar(-1);
    v[n] += Scalar(1);
    return Polynomial(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Number of stored coefficients (degree + 1, or 0).
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of t^i, zero beyond the degree.
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }

  const Scalar& leading() const { return coeffs_.back(); }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  bool is_monic_up_to_sign() const {
    return !coeffs_.empty() && (coeffs_.back() == 1 || coeffs_.back() == -1);
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator*=(const Scalar& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial p, const Scalar& c) { return p *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial p) { return p *= c; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Scalar> out(p.coeffs_.size() + q.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPoly = Polynomial<Integer>;

/// p(x) by Horner's rule.
template <typename Scalar>
Scalar evaluate(const Polynomial<Scalar>& p, const Scalar& x) {
  Scalar acc(0);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Quotient and remainder of num by den, dividing leading coefficients
/// exactly. Throws NotDivisible if some leading-coefficient division leaves
/// a remainder, which cannot happen when den is monic up to sign.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divide_with_remainder(const Polynomial<Scalar>& num,
                                                                        const Polynomial<Scalar>& den) {
  if (den.is_zero()) throw ZeroInput("division by the zero polynomial");
  const std::size_t dn = *den.degree();
  std::vector<Scalar> rem = num.coefficients();
  if (rem.size() <= dn) return {Polynomial<Scalar>{}, num};
  std::vector<Scalar> quot(rem.size() - dn, Scalar(0));
  const auto& d = den.coefficients();
  const Scalar& lead = d.back();
  const bool unit_lead = lead == 1;
  for (std::size_t top = rem.size(); top-- > dn;) {
    if (rem[top] == 0) continue;
    Scalar q;
    if (unit_lead) {
      q = rem[top];
    } else {
      q = rem[top] / lead;
      if (q * lead != rem[top]) throw NotDivisible("leading coefficient does not divide");
    }
    const std::size_t shift = top - dn;
    for (std::size_t j = 0; j <= dn; ++j) {
      if (d[j] != 0) rem[shift + j] -= q * d[j];
    }
    quot[shift] = std::move(q);
  }
  rem.resize(dn);
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

/// q with q * den == num exactly; NotDivisible otherwise.
template <typename Scalar>
Polynomial<Scalar> divide_exact(const Polynomial<Scalar>& num, const Polynomial<Scalar>& den) {
  auto [q, r] = divide_with_remainder(num, den);
  if (!r.is_zero()) throw NotDivisible("nonzero remainder in exact division");
  return q;
}

/// Remainder of p modulo a monic polynomial.
template <typename Scalar>
Polynomial<Scalar> reduce_mod(const Polynomial<Scalar>& p, const Polynomial<Scalar>& monic) {
  return divide_with_remainder(p, monic).second;
}

/// Element of Z[t, 1/t]: t^shift * poly, with poly(0) != 0 unless zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(IntPoly poly, long shift = 0);

  const IntPoly& poly() const noexcept { return poly_; }
  long shift() const noexcept { return shift_; }
  bool is_zero() const noexcept { return poly_.is_zero(); }

  /// Coefficient of t^e for any integer e.
  Integer coeff(long e) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  IntPoly poly_;
  long shift_ = 0;
};

}  // namespace krk0
