#pragma once

#include <cstdint>

#include "krk0/polynomial.hpp"

namespace krk0 {

/// The monic n-th cyclotomic polynomial, obtained by dividing t^n - 1 by
/// the product of Phi_d over the proper divisors d of n. Results are
/// memoized process-wide; the cache is guarded and safe to share.
///
/// The sign convention is monic throughout: Phi_1 = t - 1 and
/// t^n - 1 = prod_{d | n} Phi_d. Ideals and quotients downstream do not see
/// the unit -1, so 1 - t^n and t^n - 1 are interchangeable as generators.
const IntPoly& cyclotomic(std::uint64_t n);

}  // namespace krk0
