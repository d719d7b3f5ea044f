#include "krk0/kr_model.hpp"

#include <algorithm>

#include "krk0/errors.hpp"
#include "krk0/number_theory.hpp"

namespace krk0 {

namespace {

// An opaque scalar label names zero iff it has no nonzero digit and no
// symbol other than sign, point, exponent and imaginary unit.
bool spells_zero(const std::string& a) {
  if (a.empty()) return true;
  for (char c : a) {
    if (c >= '1' && c <= '9') return false;
    if (std::string_view("0.+-eEiIj ").find(c) == std::string_view::npos) return false;
  }
  return true;
}

void require(bool ok, const char* constraint) {
  if (!ok) throw ConstraintViolation(constraint);
}

void check_pair(std::uint64_t alpha2, std::uint64_t alpha3) {
  require(alpha2 >= 2 && alpha3 >= 2, "α₂,α₃ ≥ 2");
  if (gcd_u64(alpha2, alpha3) != 1) throw NotCoprime();
}

}  // namespace

const KRDescriptor& validate(const KRDescriptor& d) {
  require(d.rho >= 2, "ρ ≥ 2");
  require(d.r >= 1, "r ≥ 1");
  std::visit(
      [&](const auto& kind) {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, NormalForm>) {
          require(d.alpha1 >= 1 && d.alpha2 >= 1 && d.alpha3 >= 1, "α₁,α₂,α₃ ≥ 1");
          require(gcd_u64(d.alpha1, d.alpha2) == 1, "(α₁,α₂)=1");
          require(gcd_u64(d.alpha1, d.alpha3) == 1, "(α₁,α₃)=1");
          require(gcd_u64(d.alpha2, d.alpha3) == 1, "(α₂,α₃)=1");
        } else if constexpr (std::is_same_v<K, FirstKind>) {
          require(!spells_zero(kind.a), "a ≠ 0");
          require(kind.m >= 2, "m ≥ 2");
          require(d.alpha2 >= 2 && d.alpha3 >= 2, "α₂,α₃ ≥ 2");
          require(gcd_u64(d.alpha2, d.alpha3) == 1, "(α₂,α₃)=1");
        } else {
          require(!spells_zero(kind.a), "a ≠ 0");
          require(kind.l >= 2, "l ≥ 2");
          require(kind.b >= 2, "b ≥ 2");
          require(d.alpha2 >= 2 && d.alpha3 >= 2, "α₂,α₃ ≥ 2");
          require(gcd_u64(d.alpha2, kind.b * d.alpha3) == 1, "(α₂,bα₃)=1");
        }
      },
      d.kind);
  return d;
}

std::uint64_t epsilon(const KRDescriptor& d) {
  if (!std::holds_alternative<NormalForm>(d.kind))
    throw WrongKind("WrongKind: epsilon is defined for the normal form");
  if (d.r == 0 || d.alpha2 == 0 || d.alpha3 == 0) return 0;
  return (d.r - 1) * (d.alpha2 - 1) * (d.alpha3 - 1);
}

bool is_nontrivial(const KRDescriptor& d) { return epsilon(d) != 0; }

IntPoly bell_f(std::uint64_t alpha2, std::uint64_t alpha3) {
  check_pair(alpha2, alpha3);
  // Each factor 1 - t^k is replaced by t^k - 1; the four sign flips cancel.
  const IntPoly numerator = IntPoly::power_minus_one(alpha2 * alpha3) * IntPoly::power_minus_one(1);
  const IntPoly denominator = IntPoly::power_minus_one(alpha2) * IntPoly::power_minus_one(alpha3);
  return divide_exact(numerator, denominator);
}

std::vector<std::uint64_t> bell_factorization(std::uint64_t alpha2, std::uint64_t alpha3) {
  check_pair(alpha2, alpha3);
  std::vector<std::uint64_t> out;
  for (auto a : divisors(alpha2))
    for (auto b : divisors(alpha3))
      if (a >= 2 && b >= 2) out.push_back(a * b);
  std::sort(out.begin(), out.end());
  return out;
}

WeightVector::WeightVector(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidRange("weight vector must be nonempty");
}

bool is_hyperbolic(const WeightVector& w) {
  std::size_t negatives = 0;
  for (auto a : w.weights()) {
    if (a == 0) return false;
    if (a < 0) ++negatives;
  }
  return negatives % 2 == 1;
}

}  // namespace krk0
