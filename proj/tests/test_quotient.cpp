#include <random>

#include <gtest/gtest.h>

#include "krk0/cyclotomic.hpp"
#include "krk0/errors.hpp"
#include "krk0/number_theory.hpp"
#include "krk0/quotient.hpp"
#include "oracles.hpp"

using namespace krk0;

namespace {

IntPoly P(std::initializer_list<int> ascending) {
  std::vector<Integer> c;
  for (int x : ascending) c.emplace_back(x);
  return IntPoly(std::move(c));
}

std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

bool is_power_of(Integer x, const Integer& q) {
  while (x % q == 0) x /= q;
  return x == 1;
}

}  // namespace

TEST(Presentation, PicksLeastDegreeMonic) {
  const auto pres = build_presentation({P({1, 0, 0, 0, 1}), P({1, 1}), P({3, 2})});
  EXPECT_EQ(pres.modulus_index, 1u);
  EXPECT_EQ(pres.modulus, P({1, 1}));
  EXPECT_EQ(pres.rank(), 1u);
  ASSERT_EQ(pres.extra.size(), 2u);
  EXPECT_EQ(pres.extra[0], P({2}));
  EXPECT_EQ(pres.extra[1], P({1}));
}

TEST(Presentation, SignNormalizationAndTies) {
  // 1 - t^2 has leading coefficient -1 and becomes t^2 - 1; the tie with
  // Phi_6 goes to whichever comes first.
  const auto a = build_presentation({cyclotomic(6), P({1, 0, -1})});
  EXPECT_EQ(a.modulus_index, 0u);
  EXPECT_EQ(a.modulus, cyclotomic(6));
  EXPECT_EQ(a.generators[1], P({-1, 0, 1}));
  const auto b = build_presentation({P({1, 0, -1}), cyclotomic(6)});
  EXPECT_EQ(b.modulus_index, 0u);
  EXPECT_EQ(b.modulus, P({-1, 0, 1}));
  EXPECT_EQ(quotient_structure(a), quotient_structure(b));
}

TEST(Presentation, Errors) {
  EXPECT_THROW(build_presentation({}), InvalidRange);
  EXPECT_THROW(build_presentation({P({1, 2})}), NoMonicGenerator);
  EXPECT_THROW(build_presentation({P({1, 2}), P({0, 0, 3})}), NoMonicGenerator);
  EXPECT_THROW(build_presentation({IntPoly{}}), NoMonicGenerator);
}

TEST(Presentation, RelationMatrixRows) {
  const auto pres = build_presentation({cyclotomic(3), cyclotomic(6)});
  // t^2 - t + 1 mod t^2 + t + 1 = -2t, and t * (-2t) = -2t^2 = 2 + 2t.
  const IntMatrix m = pres.relation_matrix();
  ASSERT_EQ(m.rows(), 2);
  ASSERT_EQ(m.cols(), 2);
  EXPECT_EQ(m(0, 0), 0);
  EXPECT_EQ(m(0, 1), -2);
  EXPECT_EQ(m(1, 0), 2);
  EXPECT_EQ(m(1, 1), 2);
}

TEST(Quotient, Examples) {
  EXPECT_EQ(quotient_structure({P({1, 1}), cyclotomic(6)}), FinAbGroup::cyclic(3));
  EXPECT_EQ(quotient_structure({cyclotomic(1), cyclotomic(2)}), FinAbGroup::cyclic(2));
  EXPECT_EQ(quotient_structure({cyclotomic(5)}), FinAbGroup(4, {}));
  EXPECT_EQ(quotient_structure({P({1})}), FinAbGroup::trivial());
  EXPECT_EQ(quotient_structure({P({-1})}), FinAbGroup::trivial());
  // A constant relation c kills everything except Z/c in each coordinate.
  EXPECT_EQ(quotient_structure({P({1, 0, 1}), P({4})}), FinAbGroup(0, ints({4, 4})));
}

TEST(Quotient, CyclotomicPairs) {
  EXPECT_EQ(cyclotomic_pair(2, 3), FinAbGroup::trivial());
  EXPECT_EQ(cyclotomic_pair(2, 6), FinAbGroup::cyclic(3));
  EXPECT_EQ(cyclotomic_pair(1, 4), FinAbGroup::cyclic(2));
  // Literal Z/q fails once phi(m) > 1.
  EXPECT_EQ(cyclotomic_pair(3, 6), FinAbGroup(0, ints({2, 2})));
  EXPECT_EQ(cyclotomic_pair(4, 12), FinAbGroup(0, ints({3, 3})));
  EXPECT_THROW(cyclotomic_pair(3, 3), InvalidRange);
  EXPECT_THROW(cyclotomic_pair(0, 3), InvalidRange);
}

TEST(Quotient, UnitIdeal) {
  EXPECT_TRUE(is_unit_ideal({cyclotomic(2), cyclotomic(3)}));
  EXPECT_FALSE(is_unit_ideal({cyclotomic(2), cyclotomic(6)}));
  EXPECT_TRUE(is_unit_ideal({P({1})}));
  EXPECT_FALSE(is_unit_ideal({P({-1, 1})}));
}

TEST(Quotient, PairsNotPrimePowerAreTrivial) {
  for (std::uint64_t n = 2; n <= 40; ++n)
    for (std::uint64_t m = 1; m < n; ++m) {
      if (n % m == 0 && as_prime_power(n / m)) continue;
      EXPECT_TRUE(cyclotomic_pair(m, n).is_trivial()) << m << "," << n;
    }
}

TEST(Quotient, PrimePowerPairs) {
  for (std::uint64_t n = 2; n <= 40; ++n)
    for (std::uint64_t m = 1; m < n; ++m) {
      if (n % m != 0) continue;
      const auto pp = as_prime_power(n / m);
      if (!pp) continue;
      const FinAbGroup g = cyclotomic_pair(m, n);
      EXPECT_FALSE(g.is_trivial());
      for (const auto& d : g.torsion()) EXPECT_TRUE(is_power_of(d, Integer(pp->prime))) << m << "," << n;
      EXPECT_EQ(group_order(g), abs(oracle::resultant(cyclotomic(m), cyclotomic(n)))) << m << "," << n;
      if (oracle::totient(m) == 1) EXPECT_EQ(g, FinAbGroup::cyclic(pp->prime));
    }
}

TEST(Quotient, OrderIsResultantForMonicPairs) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    IntPoly f = oracle::random_poly(rng, 6, 6, true);
    IntPoly g = oracle::random_poly(rng, 6, 6, false);
    if (!f.degree() || *f.degree() == 0) continue;
    const Integer res = oracle::resultant(f, g);
    const FinAbGroup q = quotient_structure({f, g});
    if (res == 0) {
      EXPECT_FALSE(q.is_finite());
    } else {
      EXPECT_EQ(group_order(q), abs(res));
    }
    const auto report = analyze_quotient({f, g});
    if (report.presentation.modulus_index == 0) EXPECT_EQ(report.resultant_check, abs(res));
    EXPECT_EQ(report.group, q);
  }
}

TEST(Quotient, GeneratorOrderAndSignDoNotMatter) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    const IntPoly f = oracle::random_poly(rng, 5, 5, true);
    const IntPoly g = oracle::random_poly(rng, 5, 5, false);
    const IntPoly h = oracle::random_poly(rng, 5, 5, true);
    const FinAbGroup base = quotient_structure({f, g, h});
    EXPECT_EQ(quotient_structure({h, g, f}), base);
    EXPECT_EQ(quotient_structure({-f, g, -h}), base);
    // Adding a multiple of one generator to another leaves the ideal alone.
    EXPECT_EQ(quotient_structure({f, g + f * h, h}), base);
  }
}
