#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "krk0/kr_model.hpp"

namespace krk0 {

using IndexSet = std::vector<std::size_t>;

/// Coordinates fixed by mu_n: those whose weight is divisible by n.
IndexSet mu_fixed_indices(const WeightVector& w, std::uint64_t n);

/// Coordinates fixed by C^x: the zero weights.
IndexSet torus_fixed_indices(const WeightVector& w);

/// n is coprime to |a| for every nonzero weight a (vacuous if all are zero).
bool coprime_predicate(const WeightVector& w, std::uint64_t n);

struct FixedPointCounterexample {
  std::uint64_t n = 0;
  IndexSet mu_fixed;
  IndexSet torus_fixed;
};

struct FixedPointReport {
  std::vector<std::int64_t> weights;
  std::uint64_t bound = 0;
  /// Number of n in [2, bound] satisfying the coprimality predicate.
  std::uint64_t checked = 0;
  std::optional<FixedPointCounterexample> counterexample;
  bool passed() const noexcept { return !counterexample; }
};

/// For each 2 <= n <= bound with coprime_predicate(w, n), checks that the
/// mu_n- and C^x-fixed coordinate sets agree. n = 1 is excluded: mu_1 fixes
/// everything.
FixedPointReport verify_fixed_point_prop(const WeightVector& w, std::uint64_t bound);

}  // namespace krk0
