#include "krk0/abelian_group.hpp"

#include <map>

#include "krk0/errors.hpp"

namespace krk0 {

FinAbGroup::FinAbGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw InvalidRange("invariant factors must be >= 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw InvalidRange("invariant factors must form a divisibility chain");
  }
}

FinAbGroup FinAbGroup::cyclic(const Integer& n) {
  const Integer m = abs(n);
  if (m == 0) return FinAbGroup(1, {});
  if (m == 1) return {};
  return FinAbGroup(0, {m});
}

std::string FinAbGroup::to_string() const {
  std::string out;
  if (free_rank_ > 0) out = free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
  for (const auto& d : torsion_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.str();
  }
  return out.empty() ? "0" : out;
}

std::optional<Integer> group_order(const FinAbGroup& g) {
  if (!g.is_finite()) return std::nullopt;
  Integer order = 1;
  for (const auto& d : g.torsion()) order *= d;
  return order;
}

FinAbGroup group_from_relations(const IntMatrix& relations) {
  const auto diagonal = smith_diagonal(relations);
  std::vector<Integer> torsion;
  for (const auto& d : diagonal)
    if (d > 1) torsion.push_back(d);
  return FinAbGroup(static_cast<std::size_t>(relations.cols()) - diagonal.size(), std::move(torsion));
}

FinAbGroup power(const FinAbGroup& g, std::size_t k) {
  if (k == 0 || g.is_trivial()) return {};
  // Each invariant factor repeats k times; the sorted list stays a chain.
  std::vector<Integer> torsion;
  torsion.reserve(g.torsion().size() * k);
  for (const auto& d : g.torsion())
    for (std::size_t i = 0; i < k; ++i) torsion.push_back(d);
  return FinAbGroup(g.free_rank() * k, std::move(torsion));
}

}  // namespace krk0
