#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "krk0/errors.hpp"
#include "krk0/fixed_points.hpp"

using namespace krk0;

namespace {

bool subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

WeightVector random_weights(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(1, 6);
  std::uniform_int_distribution<std::int64_t> w(-50, 50);
  std::vector<std::int64_t> out(len(rng));
  for (auto& x : out) x = w(rng);
  return WeightVector(std::move(out));
}

}  // namespace

TEST(FixedPoints, Examples) {
  const WeightVector w({6, -6, 3, 2});
  EXPECT_EQ(mu_fixed_indices(w, 3), (IndexSet{0, 1, 2}));
  EXPECT_EQ(mu_fixed_indices(w, 5), IndexSet{});
  EXPECT_EQ(mu_fixed_indices(w, 1), (IndexSet{0, 1, 2, 3}));
  EXPECT_EQ(torus_fixed_indices(w), IndexSet{});
  EXPECT_FALSE(coprime_predicate(w, 3));
  EXPECT_TRUE(coprime_predicate(w, 5));
  EXPECT_THROW(mu_fixed_indices(w, 0), InvalidRange);

  const WeightVector z({0, 2});
  EXPECT_EQ(torus_fixed_indices(z), IndexSet{0});
  EXPECT_EQ(mu_fixed_indices(z, 2), (IndexSet{0, 1}));
}

TEST(FixedPoints, Verifier) {
  const auto a = verify_fixed_point_prop(WeightVector({6, -6, 3, 2}), 100);
  EXPECT_TRUE(a.passed());
  const auto b = verify_fixed_point_prop(WeightVector({0, 2}), 10);
  EXPECT_TRUE(b.passed());
  EXPECT_EQ(b.checked, 4u);  // n = 3, 5, 7, 9
  const auto c = verify_fixed_point_prop(WeightVector({1}), 50);
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.checked, 49u);
  // All weights zero: the predicate is vacuous and both sets are everything.
  const auto d = verify_fixed_point_prop(WeightVector({0, 0}), 20);
  EXPECT_TRUE(d.passed());
  EXPECT_EQ(d.checked, 19u);
}

TEST(FixedPoints, RandomProperties) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const WeightVector w = random_weights(rng);
    const IndexSet torus = torus_fixed_indices(w);
    EXPECT_TRUE(verify_fixed_point_prop(w, 200).passed());
    for (std::uint64_t n = 2; n <= 60; ++n) {
      const IndexSet mu = mu_fixed_indices(w, n);
      EXPECT_TRUE(subset(torus, mu));
      if (coprime_predicate(w, n)) EXPECT_EQ(mu, torus);
      for (std::uint64_t k = 2; n * k <= 60; ++k) EXPECT_TRUE(subset(mu_fixed_indices(w, n * k), mu));
    }
  }
}
