#include "krk0/ktheory.hpp"

#include "krk0/determinant.hpp"
#include "krk0/errors.hpp"
#include "krk0/number_theory.hpp"

namespace krk0 {

namespace {

constexpr std::uint64_t kMaxExponent = 1'000'000;

void check_inputs(std::uint64_t alpha2, std::uint64_t alpha3, std::uint64_t rho) {
  if (alpha2 < 2 || alpha3 < 2) throw ConstraintViolation("α₂,α₃ ≥ 2");
  if (gcd_u64(alpha2, alpha3) != 1) throw NotCoprime();
  if (rho < 2) throw ConstraintViolation("ρ ≥ 2");
}

std::uint64_t checked_prime_power(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) throw NotPrime("NotPrime: " + std::to_string(p) + " is not prime");
  if (n < 1) throw ConstraintViolation("n ≥ 1");
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (q > kMaxExponent / p) throw ConstraintViolation("p^n ≤ 1000000");
    q *= p;
  }
  return q;
}

EquivariantK0 trivial_k0(const KRDescriptor& d, std::optional<std::uint64_t> mu_order) {
  EquivariantK0 k;
  k.mu_order = mu_order;
  k.alpha2 = d.alpha2;
  k.alpha3 = d.alpha3;
  k.rho = d.rho;
  return k;
}

}  // namespace

std::optional<FinAbGroup> EquivariantK0::underlying_group() const {
  if (is_torus()) return std::nullopt;
  const FinAbGroup f = f_part_total();
  return FinAbGroup(static_cast<std::size_t>(*mu_order) + f.free_rank(), f.torsion());
}

EquivariantK0 k0_torus(std::uint64_t alpha2, std::uint64_t alpha3, std::uint64_t rho) {
  check_inputs(alpha2, alpha3, rho);
  EquivariantK0 k;
  k.alpha2 = alpha2;
  k.alpha3 = alpha3;
  k.rho = rho;
  k.f = bell_f(alpha2, alpha3);
  // f(0) = 1, so t is already a unit mod f and Z[t, 1/t]/(f) = Z[t]/(f).
  k.f_part_presentation = build_presentation({k.f});
  k.f_part_structure = quotient_structure(*k.f_part_presentation);
  k.f_part_multiplicity = rho - 1;
  return k;
}

EquivariantK0 k0_torus(const KRDescriptor& d) {
  validate(d);
  if (!is_nontrivial(d)) return trivial_k0(d, std::nullopt);
  return k0_torus(d.alpha2, d.alpha3, d.rho);
}

EquivariantK0 k0_mu(std::uint64_t alpha2, std::uint64_t alpha3, std::uint64_t rho, std::uint64_t n) {
  check_inputs(alpha2, alpha3, rho);
  if (n < 1) throw ConstraintViolation("n ≥ 1");
  if (n > kMaxExponent) throw ConstraintViolation("n ≤ 1000000");
  EquivariantK0 k;
  k.mu_order = n;
  k.alpha2 = alpha2;
  k.alpha3 = alpha3;
  k.rho = rho;
  k.f = bell_f(alpha2, alpha3);
  k.f_part_presentation = build_presentation({k.f, IntPoly::power_minus_one(n)});
  k.f_part_structure = quotient_structure(*k.f_part_presentation);
  k.f_part_multiplicity = rho - 1;
  return k;
}

EquivariantK0 k0_mu(const KRDescriptor& d, std::uint64_t n) {
  validate(d);
  if (n < 1) throw ConstraintViolation("n ≥ 1");
  if (!is_nontrivial(d)) return trivial_k0(d, n);
  return k0_mu(d.alpha2, d.alpha3, d.rho, n);
}

bool FGroupResult::order_matches_resultant() const {
  const auto order = group_order(group);
  return order ? *order == resultant_order : resultant_order == 0;
}

FGroupResult f_group(std::uint64_t alpha2, std::uint64_t alpha3, std::uint64_t rho, std::uint64_t p,
                     std::uint64_t n, bool threefold_nontrivial) {
  check_inputs(alpha2, alpha3, rho);
  FGroupResult out;
  out.p = p;
  out.n = n;
  out.exponent = checked_prime_power(p, n);
  out.threefold_nontrivial = threefold_nontrivial;
  out.predicted_nontrivial = threefold_nontrivial && ((alpha2 * alpha3) % p == 0);
  const IntPoly f = bell_f(alpha2, alpha3);
  const IntPoly cycle = IntPoly::power_minus_one(out.exponent);
  out.presentation = build_presentation({f, cycle});
  if (threefold_nontrivial) {
    out.group = quotient_structure(out.presentation);
    const bool f_is_modulus = out.presentation.modulus_index == 0;
    out.resultant_order = resultant_magnitude_mod(f_is_modulus ? f : cycle, f_is_modulus ? cycle : f);
  } else {
    // A trivial threefold has no f-part at all.
    out.resultant_order = 1;
  }
  return out;
}

FGroupResult f_group(const KRDescriptor& d, std::uint64_t p, std::uint64_t n) {
  validate(d);
  return f_group(d.alpha2, d.alpha3, d.rho, p, n, is_nontrivial(d));
}

CompletionCheck completion_check(std::uint64_t alpha2, std::uint64_t alpha3) {
  if (alpha2 < 2 || alpha3 < 2) throw ConstraintViolation("α₂,α₃ ≥ 2");
  if (gcd_u64(alpha2, alpha3) != 1) throw NotCoprime();
  const IntPoly f = bell_f(alpha2, alpha3);
  return {evaluate(f, Integer(1)), is_unit_ideal({f, IntPoly::power_minus_one(1)})};
}

bool completion_trivial(std::uint64_t alpha2, std::uint64_t alpha3) {
  return completion_check(alpha2, alpha3).trivial();
}

std::uint64_t rational_restriction_kernel(std::uint64_t alpha2, std::uint64_t alpha3, std::uint64_t rho,
                                          std::uint64_t p, std::uint64_t n) {
  const FGroupResult F = f_group(alpha2, alpha3, rho, p, n);
  // Restriction Q[t]/(f) -> Q[t]/(f, t^N - 1) is onto, so the kernel has
  // dimension deg f minus the rational rank of the target.
  const std::uint64_t deg_f = (alpha2 - 1) * (alpha3 - 1);
  return (rho - 1) * (deg_f - F.group.free_rank());
}

std::uint64_t rational_restriction_kernel(const KRDescriptor& d, std::uint64_t p, std::uint64_t n) {
  validate(d);
  if (!is_nontrivial(d)) throw TrivialThreefold("TrivialThreefold: epsilon = 0");
  return rational_restriction_kernel(d.alpha2, d.alpha3, d.rho, p, n);
}

bool KernelReport::all_positive() const {
  for (const auto& e : entries)
    if (e.dimension == 0) return false;
  return true;
}

KernelReport restriction_kernel_report(std::uint64_t alpha2, std::uint64_t alpha3, std::uint64_t rho,
                                       std::uint64_t max_prime, std::uint64_t max_n) {
  KernelReport report;
  for (std::uint64_t p = 2; p <= max_prime; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t n = 1; n <= max_n; ++n)
      report.entries.push_back({p, n, rational_restriction_kernel(alpha2, alpha3, rho, p, n)});
  }
  return report;
}

}  // namespace krk0
