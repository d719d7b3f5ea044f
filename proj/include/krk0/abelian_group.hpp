#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "krk0/integer.hpp"
#include "krk0/smith.hpp"

namespace krk0 {

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k with
/// 2 <= d_1 | d_2 | ... | d_k. Two groups are isomorphic iff they compare equal.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  /// Throws InvalidRange unless the factors form a valid invariant-factor chain.
  FinAbGroup(std::size_t free_rank, std::vector<Integer> torsion);

  static FinAbGroup trivial() { return {}; }
  static FinAbGroup cyclic(const Integer& n);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }

  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }

  /// "0", "Z", "Z/3", "Z^2 + Z/2 + Z/4", ...
  std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Order of the group, or nullopt when it is infinite.
std::optional<Integer> group_order(const FinAbGroup& g);

/// Z^cols modulo the row span of the relation matrix.
FinAbGroup group_from_relations(const IntMatrix& relations);

/// Direct sum of k copies.
FinAbGroup power(const FinAbGroup& g, std::size_t k);

}  // namespace krk0
