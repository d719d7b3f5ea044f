#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace krk0 {

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// Positive divisors of n in increasing order; n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Distinct prime factors of n in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// (q, i) with n == q^i and i >= 1, or nullopt when n is not a prime power
/// (in particular for n == 1).
std::optional<PrimePower> as_prime_power(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t ipow(std::uint64_t base, unsigned exponent);

}  // namespace krk0
