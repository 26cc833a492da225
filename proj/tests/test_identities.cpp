#include "fibsum/identities.hpp"
#include "support/properties.hpp"

#include <gtest/gtest.h>

using fibsum::Sign;
using fibsum::WideInt;

TEST(SumFactorization, Examples) {
  auto f = fibsum::sum_factorization(36, 12, Sign::plus);
  EXPECT_EQ(f.epsilon, Sign::plus);
  EXPECT_EQ(f.N, 24);
  EXPECT_EQ(f.M, 12);
  EXPECT_EQ(f.branch, fibsum::FactorBranch::same_class_mod4);
  EXPECT_EQ(WideInt(46368) * 322, 14930496);

  f = fibsum::sum_factorization(9, 3, Sign::plus);
  EXPECT_EQ(f.epsilon, Sign::minus);
  EXPECT_EQ(f.N, 3);
  EXPECT_EQ(f.M, 6);
  EXPECT_EQ(f.branch, fibsum::FactorBranch::shifted_class_mod4);

  for (std::int64_t n : {0, 1, 2, 7, 20}) {
    f = fibsum::sum_factorization(n, n, Sign::minus);
    EXPECT_EQ(f.N, 0);
    EXPECT_EQ(f.M, n);
  }
}

TEST(SumFactorization, MinusBranchesSwap) {
  // 15 = 9 + 2 (mod 4): F_15 - F_9 = F_12 L_3 = 144 * 4.
  auto f = fibsum::sum_factorization(15, 9, Sign::minus);
  EXPECT_EQ(f.epsilon, Sign::plus);
  EXPECT_EQ(f.N, 12);
  EXPECT_EQ(f.M, 3);
  // 13 = 5 (mod 4): F_13 - F_5 = F_4 L_9.
  f = fibsum::sum_factorization(13, 5, Sign::minus);
  EXPECT_EQ(f.epsilon, Sign::minus);
  EXPECT_EQ(f.N, 4);
  EXPECT_EQ(f.M, 9);
}

TEST(SumFactorization, Errors) {
  EXPECT_THROW(fibsum::sum_factorization(16, 7, Sign::plus), fibsum::ParityMismatch);
  EXPECT_THROW(fibsum::sum_factorization(3, 5, Sign::plus), std::invalid_argument);
  EXPECT_THROW(fibsum::sum_factorization(3, -1, Sign::plus), std::invalid_argument);
}

TEST(NormalizePair, ReflectsAndOrders) {
  // F_{-4} + F_2 = -3 + 1 = -(F_4 - F_2)
  auto np = fibsum::normalize_pair(-4, 2, Sign::plus);
  EXPECT_EQ(np.high, 4);
  EXPECT_EQ(np.low, 2);
  EXPECT_EQ(np.inner, Sign::minus);
  EXPECT_EQ(np.outer, Sign::minus);

  // Exhaustive consistency on a small signed box.
  for (std::int64_t n = -30; n <= 30; ++n) {
    for (std::int64_t m = -30; m <= 30; ++m) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        np = fibsum::normalize_pair(n, m, s);
        ASSERT_GE(np.high, np.low);
        ASSERT_GE(np.low, 0);
        const WideInt lhs = fibsum::fib(n) + as_int(s) * fibsum::fib(m);
        const WideInt rhs = as_int(np.outer) * (fibsum::fib(np.high) + as_int(np.inner) * fibsum::fib(np.low));
        ASSERT_EQ(lhs, rhs) << n << ' ' << as_char(s) << ' ' << m;
      }
    }
  }
}

TEST(GcdPredict, Examples) {
  auto g = fibsum::gcd_predict(fibsum::GcdKind::fib_fib, 12, 8);
  ASSERT_TRUE(g.determinate());
  EXPECT_EQ(std::get<WideInt>(g.value), 3);

  g = fibsum::gcd_predict(fibsum::GcdKind::fib_lucas, 12, 6);
  ASSERT_TRUE(g.determinate());
  EXPECT_EQ(std::get<WideInt>(g.value), 18);

  g = fibsum::gcd_predict(fibsum::GcdKind::lucas_lucas, 6, 9);
  EXPECT_FALSE(g.determinate());
  EXPECT_TRUE(g.admits(2));
  EXPECT_TRUE(g.admits(1));
  EXPECT_FALSE(g.admits(4));
}

TEST(GcdPredict, FibLucasAmbiguousWhenValuationNotLarger) {
  EXPECT_FALSE(fibsum::gcd_predict(fibsum::GcdKind::fib_lucas, 6, 12).determinate());
  EXPECT_FALSE(fibsum::gcd_predict(fibsum::GcdKind::fib_lucas, 6, 6).determinate());
  EXPECT_TRUE(fibsum::gcd_predict(fibsum::GcdKind::lucas_lucas, 6, 10).determinate());
}

TEST(GcdPredict, RejectsNonpositiveIndices) {
  EXPECT_THROW(fibsum::gcd_predict(fibsum::GcdKind::fib_fib, 0, 3), std::invalid_argument);
  EXPECT_THROW(fibsum::gcd_predict(fibsum::GcdKind::fib_lucas, 3, -3), std::invalid_argument);
}

TEST(DoublingTripling, Examples) {
  EXPECT_TRUE(fibsum::check_doubling(12));
  EXPECT_EQ(fibsum::fib(24), WideInt(144) * 322);
  EXPECT_TRUE(fibsum::check_doubling(0));
  EXPECT_TRUE(fibsum::check_tripling(6));
  EXPECT_EQ(WideInt(18) * 321, 5778);
}

TEST(IdentityProperties, SumFactorizationExhaustive) {
  const auto r = fibsum::props::sum_factorization_exhaustive(400);
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(IdentityProperties, GcdPredictionsRandom) {
  const auto r = fibsum::props::gcd_predictions_random(2000, 2000);
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(IdentityProperties, DoublingTripling) {
  const auto r = fibsum::props::doubling_tripling(300);
  EXPECT_TRUE(r.ok()) << r.failure;
}
