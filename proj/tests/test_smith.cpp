#include <random>

#include <gtest/gtest.h>

#include "krk0/abelian_group.hpp"
#include "krk0/determinant.hpp"
#include "krk0/errors.hpp"
#include "krk0/smith.hpp"
#include "oracles.hpp"

using namespace krk0;

namespace {

IntMatrix M(Eigen::Index rows, Eigen::Index cols, std::initializer_list<int> entries) {
  IntMatrix m(rows, cols);
  auto it = entries.begin();
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Integer(*it++);
  return m;
}

std::vector<Integer> diag(const SmithForm<Integer>& s) {
  std::vector<Integer> out;
  for (Eigen::Index i = 0; i < s.rank; ++i) out.push_back(s.D(i, i));
  return out;
}

std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

// Checks every structural promise of smith_normal_form.
void expect_valid(const IntMatrix& m, const SmithForm<Integer>& s) {
  ASSERT_EQ(s.U.rows(), m.rows());
  ASSERT_EQ(s.V.cols(), m.cols());
  EXPECT_EQ(IntMatrix(s.U * m * s.V), s.D);
  EXPECT_EQ(abs(bareiss_determinant<Integer>(s.U)), 1);
  EXPECT_EQ(abs(bareiss_determinant<Integer>(s.V)), 1);
  for (Eigen::Index i = 0; i < s.D.rows(); ++i)
    for (Eigen::Index j = 0; j < s.D.cols(); ++j) {
      if (i != j || i >= s.rank) EXPECT_EQ(s.D(i, j), 0);
      else EXPECT_GT(s.D(i, j), 0);
    }
  for (Eigen::Index i = 0; i + 1 < s.rank; ++i) EXPECT_EQ(s.D(i + 1, i + 1) % s.D(i, i), 0);
}

}  // namespace

TEST(Smith, Examples) {
  auto s = smith_normal_form<Integer>(M(2, 2, {2, 0, 0, 3}));
  EXPECT_EQ(diag(s), ints({1, 6}));
  expect_valid(M(2, 2, {2, 0, 0, 3}), s);

  s = smith_normal_form<Integer>(M(2, 2, {0, 0, 0, 0}));
  EXPECT_EQ(s.rank, 0);
  EXPECT_EQ(s.D, M(2, 2, {0, 0, 0, 0}));

  s = smith_normal_form<Integer>(M(2, 2, {2, 4, 6, 8}));
  EXPECT_EQ(diag(s), ints({2, 4}));

  s = smith_normal_form<Integer>(M(3, 2, {1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(diag(s), ints({1, 2}));
  expect_valid(M(3, 2, {1, 2, 3, 4, 5, 6}), s);
}

TEST(Smith, EmptyShapes) {
  const IntMatrix none(0, 3);
  const auto s = smith_normal_form<Integer>(none);
  EXPECT_EQ(s.rank, 0);
  EXPECT_EQ(s.V.rows(), 3);
  EXPECT_TRUE(smith_diagonal<Integer>(none).empty());
}

TEST(Smith, MatchesDeterminantalDivisors) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const auto r = static_cast<Eigen::Index>(1 + rng() % 4), c = static_cast<Eigen::Index>(1 + rng() % 4);
    const IntMatrix m = oracle::random_matrix(rng, r, c, i % 3 == 0 ? 3 : 1000);
    const auto s = smith_normal_form<Integer>(m);
    expect_valid(m, s);
    const auto expected = oracle::determinantal_invariants(m);
    EXPECT_EQ(diag(s), expected) << m;
    EXPECT_EQ(smith_diagonal<Integer>(m), expected) << m;
  }
}

TEST(Smith, ProductIsAbsoluteDeterminant) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<Eigen::Index>(1 + rng() % 8);
    const IntMatrix m = oracle::random_matrix(rng, n, n, 1000000);
    const Integer det = oracle::rational_determinant(m);
    const auto d = smith_diagonal<Integer>(m);
    if (det == 0) {
      EXPECT_LT(static_cast<Eigen::Index>(d.size()), n);
      continue;
    }
    Integer product = 1;
    for (const auto& x : d) product *= x;
    EXPECT_EQ(product, abs(det));
  }
}

TEST(Smith, InvariantUnderUnimodularChange) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto r = static_cast<Eigen::Index>(1 + rng() % 6), c = static_cast<Eigen::Index>(1 + rng() % 6);
    const IntMatrix m = oracle::random_matrix(rng, r, c, 50);
    const IntMatrix twisted = oracle::random_unimodular(rng, r) * m * oracle::random_unimodular(rng, c);
    const auto s = smith_normal_form<Integer>(twisted);
    expect_valid(twisted, s);
    EXPECT_EQ(s.D, smith_normal_form<Integer>(m).D);
  }
}

TEST(Smith, ZeroRowsAndPermutationsDoNotMatter) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    const auto r = static_cast<Eigen::Index>(1 + rng() % 5), c = static_cast<Eigen::Index>(1 + rng() % 5);
    const IntMatrix m = oracle::random_matrix(rng, r, c, 100);
    IntMatrix padded = IntMatrix::Zero(r + 2, c);
    padded.bottomRows(r) = m;
    EXPECT_EQ(group_from_relations(padded), group_from_relations(m));
    IntMatrix reversed = m.colwise().reverse();
    EXPECT_EQ(group_from_relations(reversed), group_from_relations(m));
    IntMatrix negated = -m;
    EXPECT_EQ(group_from_relations(negated), group_from_relations(m));
  }
}

TEST(AbelianGroup, FromRelations) {
  EXPECT_EQ(group_from_relations(IntMatrix(0, 1)), FinAbGroup(1, {}));
  EXPECT_EQ(group_from_relations(IntMatrix(0, 0)), FinAbGroup::trivial());
  EXPECT_EQ(group_from_relations(M(1, 2, {0, 3})), FinAbGroup(1, ints({3})));
  EXPECT_EQ(group_from_relations(M(2, 2, {2, 0, 0, 3})), FinAbGroup::cyclic(6));
  EXPECT_EQ(group_from_relations(M(2, 2, {0, -2, 2, 2})), FinAbGroup(0, ints({2, 2})));
  EXPECT_EQ(group_from_relations(M(1, 1, {1})), FinAbGroup::trivial());
}

TEST(AbelianGroup, ChainValidation) {
  EXPECT_THROW(FinAbGroup(0, ints({2, 3})), InvalidRange);
  EXPECT_THROW(FinAbGroup(0, ints({1, 2})), InvalidRange);
  EXPECT_THROW(FinAbGroup(0, ints({0})), InvalidRange);
  EXPECT_NO_THROW(FinAbGroup(1, ints({2, 4, 4})));
  EXPECT_EQ(FinAbGroup::cyclic(0), FinAbGroup(1, {}));
  EXPECT_EQ(FinAbGroup::cyclic(1), FinAbGroup::trivial());
  EXPECT_EQ(FinAbGroup::cyclic(-5), FinAbGroup(0, ints({5})));
}

TEST(AbelianGroup, OrderAndText) {
  EXPECT_EQ(group_order(FinAbGroup::trivial()), Integer(1));
  EXPECT_EQ(group_order(FinAbGroup(0, ints({2, 4}))), Integer(8));
  EXPECT_FALSE(group_order(FinAbGroup(1, {})).has_value());
  EXPECT_EQ(FinAbGroup::trivial().to_string(), "0");
  EXPECT_EQ(FinAbGroup(1, {}).to_string(), "Z");
  EXPECT_EQ(FinAbGroup(2, ints({2})).to_string(), "Z^2 + Z/2");
  EXPECT_EQ(FinAbGroup(0, ints({3})).to_string(), "Z/3");
}

TEST(AbelianGroup, Power) {
  EXPECT_EQ(power(FinAbGroup::cyclic(3), 2), FinAbGroup(0, ints({3, 3})));
  EXPECT_EQ(power(FinAbGroup::cyclic(3), 0), FinAbGroup::trivial());
  EXPECT_EQ(power(FinAbGroup(1, ints({2})), 3), FinAbGroup(3, ints({2, 2, 2})));
  // Z/2 + Z/3 = Z/6, so the chain must be recomputed.
  EXPECT_EQ(power(FinAbGroup(0, ints({6})), 2), FinAbGroup(0, ints({6, 6})));
}
