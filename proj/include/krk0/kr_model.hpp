#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "krk0/polynomial.hpp"

namespace krk0 {

/// t^alpha2 - G(x, y^alpha1, z^alpha3) = 0 with alpha1, alpha2, alpha3
/// pairwise coprime.
struct NormalForm {
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// a x + x^m y + z^alpha2 + t^alpha3 = 0.
struct FirstKind {
  /// The nonzero complex scalar a, carried as an opaque label.
  std::string a = "1";
  std::uint64_t m = 2;
  friend bool operator==(const FirstKind&, const FirstKind&) = default;
};

/// a x + (x^b + z^alpha2)^l y + t^alpha3 = 0.
struct SecondKind {
  std::string a = "1";
  std::uint64_t l = 2;
  std::uint64_t b = 2;
  friend bool operator==(const SecondKind&, const SecondKind&) = default;
};

using KRKind = std::variant<NormalForm, FirstKind, SecondKind>;

/// Integer data of a Koras-Russell threefold. rho (number of irreducible
/// factors of G(x, y^alpha1, 0)) and r (its x-degree) are supplied by the
/// caller; nothing here inspects G itself.
struct KRDescriptor {
  std::uint64_t alpha1 = 1;
  std::uint64_t alpha2 = 2;
  std::uint64_t alpha3 = 3;
  std::uint64_t rho = 2;
  std::uint64_t r = 2;
  KRKind kind = NormalForm{};
  friend bool operator==(const KRDescriptor&, const KRDescriptor&) = default;
};

/// Returns d unchanged or throws ConstraintViolation naming the first
/// violated constraint.
const KRDescriptor& validate(const KRDescriptor& d);

/// (r - 1)(alpha2 - 1)(alpha3 - 1); WrongKind unless d is in normal form.
std::uint64_t epsilon(const KRDescriptor& d);

/// epsilon(d) != 0.
bool is_nontrivial(const KRDescriptor& d);

/// (1 - t^(a2 a3))(1 - t) / ((1 - t^a2)(1 - t^a3)), monic of degree
/// (a2 - 1)(a3 - 1). Throws NotCoprime or ConstraintViolation.
IntPoly bell_f(std::uint64_t alpha2, std::uint64_t alpha3);

/// Sorted indices a*b with a | alpha2, b | alpha3 and a, b >= 2, so that
/// bell_f is the product of the corresponding cyclotomic polynomials.
std::vector<std::uint64_t> bell_factorization(std::uint64_t alpha2, std::uint64_t alpha3);

/// Weights of a diagonal linear C^x-action on affine space.
class WeightVector {
 public:
  explicit WeightVector(std::vector<std::int64_t> weights);
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  std::int64_t operator[](std::size_t i) const { return weights_[i]; }

 private:
  std::vector<std::int64_t> weights_;
};

/// All weights nonzero with negative product.
bool is_hyperbolic(const WeightVector& w);

}  // namespace krk0
