#include "krk0/quotient.hpp"

#include "krk0/cyclotomic.hpp"
#include "krk0/determinant.hpp"
#include "krk0/errors.hpp"

namespace krk0 {

namespace {

// t * r mod m, for deg r < deg m and m monic.
IntPoly times_t_mod(const IntPoly& r, const IntPoly& m) {
  const std::size_t d = *m.degree();
  std::vector<Integer> c(d + 1, Integer(0));
  for (std::size_t i = 0; i < r.size(); ++i) c[i + 1] = r.coeff(i);
  const Integer top = c[d];
  if (top != 0) {
    for (std::size_t i = 0; i <= d; ++i) c[i] -= top * m.coeff(i);
  }
  return IntPoly(std::move(c));
}

}  // namespace

IntMatrix QuotientPresentation::relation_matrix() const {
  const std::size_t d = rank();
  IntMatrix rel = IntMatrix::Zero(static_cast<Eigen::Index>(extra.size() * d), static_cast<Eigen::Index>(d));
  Eigen::Index row = 0;
  for (const auto& g : extra) {
    IntPoly shifted = g;
    for (std::size_t j = 0; j < d; ++j, ++row) {
      for (std::size_t k = 0; k < shifted.size(); ++k) rel(row, static_cast<Eigen::Index>(k)) = shifted.coeff(k);
      if (j + 1 < d) shifted = times_t_mod(shifted, modulus);
    }
  }
  return rel;
}

QuotientPresentation build_presentation(const std::vector<IntPoly>& gens) {
  if (gens.empty()) throw InvalidRange("at least one generator is required");
  QuotientPresentation p;
  p.generators.reserve(gens.size());
  std::optional<std::size_t> chosen;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    IntPoly g = (!gens[i].is_zero() && gens[i].leading() < 0) ? IntPoly(-gens[i]) : gens[i];
    if (g.is_monic() && (!chosen || *g.degree() < *p.generators[*chosen].degree())) chosen = i;
    p.generators.push_back(std::move(g));
  }
  if (!chosen) throw NoMonicGenerator();
  p.modulus_index = *chosen;
  p.modulus = p.generators[*chosen];
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i == *chosen) continue;
    p.extra.push_back(reduce_mod(p.generators[i], p.modulus));
  }
  return p;
}

FinAbGroup quotient_structure(const QuotientPresentation& presentation) {
  return group_from_relations(presentation.relation_matrix());
}

FinAbGroup quotient_structure(const std::vector<IntPoly>& gens) {
  return quotient_structure(build_presentation(gens));
}

FinAbGroup cyclotomic_pair(std::uint64_t m, std::uint64_t n) {
  if (m < 1 || m >= n) throw InvalidRange("InvalidRange: need 1 <= m < n");
  return quotient_structure({cyclotomic(m), cyclotomic(n)});
}

bool is_unit_ideal(const std::vector<IntPoly>& gens) { return quotient_structure(gens).is_trivial(); }

QuotientReport analyze_quotient(const std::vector<IntPoly>& gens) {
  QuotientReport report{build_presentation(gens), {}, std::nullopt};
  report.group = quotient_structure(report.presentation);
  const auto& p = report.presentation;
  if (p.generators.size() == 2) {
    const IntPoly& other = p.generators[1 - p.modulus_index];
    report.resultant_check = other.is_zero() ? Integer(0) : abs(resultant(p.modulus, other));
  }
  return report;
}

}  // namespace krk0
