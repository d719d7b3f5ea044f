#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "krk0/abelian_group.hpp"
#include "krk0/kr_model.hpp"
#include "krk0/quotient.hpp"

namespace krk0 {

/// K_0 of a Koras-Russell threefold equivariant for C^x or for mu_n, split
/// as the representation-ring summand plus rho - 1 copies of the f-part.
///
/// For C^x the f-part is Z[t, 1/t]/(f), free of Z-rank deg f. For mu_n it is
/// Z[t]/(f, t^n - 1), obtained from the torus answer by base change along
/// R(C^x) -> R(mu_n) = Z[t]/(t^n - 1).
struct EquivariantK0 {
  /// n for mu_n; nullopt for the torus.
  std::optional<std::uint64_t> mu_order;
  std::uint64_t alpha2 = 0;
  std::uint64_t alpha3 = 0;
  std::uint64_t rho = 0;
  /// The ideal generator f(t); zero for a trivial threefold.
  IntPoly f;
  /// (f, t^n - 1) for mu_n, (f) for the torus; absent for a trivial threefold.
  std::optional<QuotientPresentation> f_part_presentation;
  /// One copy of the f-part.
  FinAbGroup f_part_structure;
  /// rho - 1, or 0 when the threefold is trivial.
  std::uint64_t f_part_multiplicity = 0;

  bool is_torus() const noexcept { return !mu_order.has_value(); }

  /// Z-rank of the representation-ring summand; nullopt (infinite) for the torus.
  std::optional<std::uint64_t> free_summand_rank() const { return mu_order; }

  /// (f-part)^(rho - 1).
  FinAbGroup f_part_total() const { return power(f_part_structure, f_part_multiplicity); }

  /// Z^n + (f-part)^(rho - 1) as an abelian group; nullopt for the torus,
  /// whose representation ring is not finitely generated over Z.
  std::optional<FinAbGroup> underlying_group() const;
};

/// Bell's presentation for C^x; assumes a nontrivial threefold.
EquivariantK0 k0_torus(std::uint64_t alpha2, std::uint64_t alpha3, std::uint64_t rho);
/// As above; a trivial descriptor (epsilon = 0) yields R(C^x) alone.
EquivariantK0 k0_torus(const KRDescriptor& d);

/// Base change to mu_n; assumes a nontrivial threefold.
EquivariantK0 k0_mu(std::uint64_t alpha2, std::uint64_t alpha3, std::uint64_t rho, std::uint64_t n);
EquivariantK0 k0_mu(const KRDescriptor& d, std::uint64_t n);

/// One summand of the f-part for mu_(p^n) together with the checks that
/// classify it.
struct FGroupResult {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::uint64_t exponent = 0;  // p^n
  bool threefold_nontrivial = true;
  QuotientPresentation presentation;
  FinAbGroup group;
  /// |Res(f, t^(p^n) - 1)|, the independent order check.
  Integer resultant_order;
  /// Predicted: nontrivial iff the threefold is nontrivial and p | alpha2 alpha3.
  bool predicted_nontrivial = false;

  bool nontrivial() const noexcept { return !group.is_trivial(); }
  bool finite() const noexcept { return group.is_finite(); }
  bool order_matches_resultant() const;
  /// Finite, and trivial exactly when predicted.
  bool classification_holds() const noexcept { return finite() && nontrivial() == predicted_nontrivial; }
};

/// Throws NotPrime, or ConstraintViolation for n = 0, rho < 2, bad alphas,
/// or p^n beyond 10^6.
FGroupResult f_group(std::uint64_t alpha2, std::uint64_t alpha3, std::uint64_t rho, std::uint64_t p,
                     std::uint64_t n, bool threefold_nontrivial = true);
FGroupResult f_group(const KRDescriptor& d, std::uint64_t p, std::uint64_t n);

/// The two routes to f(1) = +-1.
struct CompletionCheck {
  Integer f_at_one;
  bool unit_ideal = false;
  bool trivial() const { return abs(f_at_one) == 1 && unit_ideal; }
};

CompletionCheck completion_check(std::uint64_t alpha2, std::uint64_t alpha3);

/// True iff f is invertible after completing at (1 - t), i.e. f(1) = +-1
/// and (f, t - 1) is the unit ideal.
bool completion_trivial(std::uint64_t alpha2, std::uint64_t alpha3);

/// dim over Q of the kernel of K_0^{C^x}(X)_Q -> K_0^{mu_(p^n)}(X)_Q, which
/// is (rho - 1)(deg f - rank F_(p^n)). Assumes a nontrivial threefold.
std::uint64_t rational_restriction_kernel(std::uint64_t alpha2, std::uint64_t alpha3, std::uint64_t rho,
                                          std::uint64_t p, std::uint64_t n);
/// Throws TrivialThreefold when epsilon(d) = 0.
std::uint64_t rational_restriction_kernel(const KRDescriptor& d, std::uint64_t p, std::uint64_t n);

struct KernelEntry {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::uint64_t dimension = 0;
};

/// Kernel dimensions for every prime p <= max_prime and 1 <= n <= max_n.
struct KernelReport {
  std::vector<KernelEntry> entries;
  /// The restriction to the product over the checked subgroups fails to be
  /// injective when every entry is positive.
  bool all_positive() const;
};

KernelReport restriction_kernel_report(std::uint64_t alpha2, std::uint64_t alpha3, std::uint64_t rho,
                                       std::uint64_t max_prime, std::uint64_t max_n);

}  // namespace krk0
