#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "krk0/abelian_group.hpp"
#include "krk0/polynomial.hpp"

namespace krk0 {

/// Z[t]/(g_1, ..., g_k) as a Z-module, given a generator that is monic up to
/// sign. The monic generator of least degree becomes the modulus; every
/// other generator is reduced modulo it.
struct QuotientPresentation {
  /// Input generators after sign normalization (positive leading coefficient).
  std::vector<IntPoly> generators;
  std::size_t modulus_index = 0;
  IntPoly modulus;
  /// Remaining generators reduced mod the modulus, in input order.
  std::vector<IntPoly> extra;

  /// Z-rank of Z[t]/(modulus), i.e. deg(modulus).
  std::size_t rank() const { return *modulus.degree(); }

  /// Rows t^j * g mod modulus for each extra g and 0 <= j < rank(), written
  /// in the basis 1, t, ..., t^(rank-1).
  IntMatrix relation_matrix() const;
};

/// Throws InvalidRange on an empty list and NoMonicGenerator if no generator
/// has leading coefficient +-1. Ties on degree go to the earliest generator.
QuotientPresentation build_presentation(const std::vector<IntPoly>& gens);

FinAbGroup quotient_structure(const std::vector<IntPoly>& gens);
FinAbGroup quotient_structure(const QuotientPresentation& presentation);

/// Z[t]/(Phi_m, Phi_n) for 1 <= m < n.
FinAbGroup cyclotomic_pair(std::uint64_t m, std::uint64_t n);

bool is_unit_ideal(const std::vector<IntPoly>& gens);

/// Everything the quotient command reports.
struct QuotientReport {
  QuotientPresentation presentation;
  FinAbGroup group;
  /// |Res(modulus, other)| when there are exactly two generators.
  std::optional<Integer> resultant_check;
};

QuotientReport analyze_quotient(const std::vector<IntPoly>& gens);

}  // namespace krk0
