#include <gtest/gtest.h>

#include <limits>
#include <numeric>

#include "spectile/errors.hpp"
#include "spectile/exactnum.hpp"
#include "support/random_sets.hpp"

namespace spectile::exactnum {
namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

std::vector<Integer> multiply(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

CyclotomicNumber zeta(Order n, std::uint64_t k) { return CyclotomicNumber::root_of_unity(n, k); }

TEST(CyclotomicPoly, SmallOrders) {
  EXPECT_EQ(cyclotomic_poly(1).coeffs, ints({-1, 1}));
  EXPECT_EQ(cyclotomic_poly(4).coeffs, ints({1, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(12).coeffs, ints({1, 0, -1, 0, 1}));
}

TEST(CyclotomicPoly, ProductOverDivisorsIsXnMinusOne) {
  for (Order n = 1; n <= 100; ++n) {
    std::vector<Integer> product{1};
    for (auto d : divisors(n)) product = multiply(product, cyclotomic_poly(d).coeffs);
    std::vector<Integer> expected(n + 1);
    expected[0] = -1;
    expected[n] = 1;
    EXPECT_EQ(product, expected) << "N=" << n;
    EXPECT_EQ(cyclotomic_poly(n).degree(), euler_phi(n));
  }
}

TEST(CyclotomicPoly, FirstCoefficientsAboveTwo) {
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& c = cyclotomic_poly(105).coeffs;
  EXPECT_EQ(*std::min_element(c.begin(), c.end()), -2);
}

TEST(RootSum, Examples) {
  std::vector<RootTerm> cube{{1, 0}, {1, make_rational(1, 3)}, {1, make_rational(2, 3)}};
  EXPECT_TRUE(root_sum(cube).is_zero());
  EXPECT_TRUE(root_sum_is_zero(cube));

  std::vector<RootTerm> one{{1, 0}};
  EXPECT_EQ(root_sum(one), CyclotomicNumber::from_rational(1));

  std::vector<RootTerm> eighth{{1, make_rational(1, 8)}, {-1, make_rational(5, 8)}};
  const auto value = root_sum(eighth);
  EXPECT_FALSE(value.is_zero());
  std::vector<RootTerm> doubled{{2, make_rational(1, 8)}};
  EXPECT_EQ(value, root_sum(doubled));
  EXPECT_EQ(value, CyclotomicNumber::from_rational(2, 8) * zeta(8, 1));
  const auto numeric = oracle::sum({{1, make_rational(1, 8)}, {-1, make_rational(5, 8)}});
  const auto c = value.to_complex();
  EXPECT_NEAR(c.real(), static_cast<double>(numeric.re), 1e-12);
  EXPECT_NEAR(c.imag(), static_cast<double>(numeric.im), 1e-12);
  EXPECT_NEAR(c.real(), std::sqrt(2.0), 1e-12);
}

TEST(RootSum, IntegerExponentsReduceToRationals) {
  std::vector<RootTerm> terms{{make_rational(3, 2), 5}, {-1, -2}};
  EXPECT_EQ(root_sum(terms), CyclotomicNumber::from_rational(make_rational(1, 2)));
}

TEST(RootSum, AgreesWithHighPrecisionOracle) {
  int zeros = 0, disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto terms = oracle::random_root_sum(i % 2 == 0);
    std::vector<RootTerm> exact;
    for (const auto& [c, t] : terms) exact.push_back({c, t});
    const bool z = root_sum(exact).is_zero();
    zeros += z;
    if (z != oracle::numeric_zero(terms) || z != root_sum_is_zero(exact)) ++disagreements;
  }
  EXPECT_EQ(disagreements, 0);
  EXPECT_GT(zeros, 300);
}

TEST(CycloInvert, Examples) {
  const auto one = CyclotomicNumber::from_rational(1);
  EXPECT_EQ(cyclo_invert(one), one);
  EXPECT_EQ(cyclo_invert(zeta(8, 1)), zeta(8, 7));
  const auto z = one + zeta(3, 1);
  const auto inv = cyclo_invert(z);
  EXPECT_EQ(inv, -zeta(3, 1));
  EXPECT_EQ(z * inv, one);
  EXPECT_THROW(cyclo_invert(CyclotomicNumber()), ZeroInversion);
  EXPECT_THROW(cyclo_invert(one + zeta(2, 1)), ZeroInversion);
}

CyclotomicNumber random_value(Order n) {
  std::vector<Rational> poly(n);
  for (auto& c : poly) c = make_rational(oracle::uniform(-5, 5), oracle::uniform(1, 4));
  return CyclotomicNumber::from_polynomial(n, poly);
}

TEST(CycloInvert, RandomValuesInvert) {
  int checked = 0;
  while (checked < 1000) {
    const auto z = random_value(static_cast<Order>(oracle::uniform(1, 40)));
    if (z.is_zero()) continue;
    EXPECT_EQ(z * cyclo_invert(z), CyclotomicNumber::from_rational(1, z.order()));
    ++checked;
  }
}

TEST(CyclotomicNumber, LiftDescendRoundTrip) {
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<Order>(oracle::uniform(1, 30));
    const auto k = static_cast<Order>(oracle::uniform(1, 6));
    const auto z = random_value(n);
    const auto lifted = z.lift(n * k);
    EXPECT_EQ(lifted.order(), n * k);
    const auto back = lifted.descend(n);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(back->coeffs(), z.coeffs());
    EXPECT_EQ(lifted, z);
  }
  // zeta_8 is not in Q(zeta_4).
  EXPECT_FALSE(zeta(8, 1).descend(4).has_value());
  EXPECT_TRUE(zeta(8, 2).descend(4).has_value());
}

TEST(CyclotomicNumber, ArithmeticMatchesComplexValues) {
  for (int i = 0; i < 200; ++i) {
    const auto a = random_value(static_cast<Order>(oracle::uniform(1, 24)));
    const auto b = random_value(static_cast<Order>(oracle::uniform(1, 24)));
    const auto sum = (a + b).to_complex(), prod = (a * b).to_complex();
    EXPECT_NEAR(std::abs(sum - (a.to_complex() + b.to_complex())), 0, 1e-6);
    EXPECT_NEAR(std::abs(prod - a.to_complex() * b.to_complex()), 0, 1e-5);
    EXPECT_EQ((a - a).is_zero(), true);
    EXPECT_EQ(a.conj().conj(), a);
  }
}

TEST(RootSumAccumulator, AgreesWithRootSum) {
  for (int i = 0; i < 500; ++i) {
    const auto n = static_cast<Order>(oracle::uniform(1, 72));
    RootSumAccumulator acc(n);
    std::vector<RootTerm> terms;
    const bool vanishing = i % 2 == 0 && n % 3 == 0;
    for (int t = 0; t < 6; ++t) {
      const auto c = oracle::uniform(-2, 2);
      const auto p = static_cast<std::uint64_t>(oracle::uniform(0, static_cast<std::int64_t>(n) - 1));
      acc.add(c, p);
      terms.push_back({c, make_rational(static_cast<std::int64_t>(p), static_cast<std::int64_t>(n))});
      if (vanishing) {
        for (std::uint64_t s : {n / 3, 2 * n / 3}) {
          acc.add(c, p + s);
          terms.push_back({c, make_rational(static_cast<std::int64_t>(p + s), static_cast<std::int64_t>(n))});
        }
      }
    }
    EXPECT_EQ(acc.is_zero(), root_sum(terms).is_zero());
    EXPECT_EQ(acc.value(), root_sum(terms));
  }
}

TEST(RootSumAccumulator, LargeCoefficientsFallBackExactly) {
  RootSumAccumulator acc(7);
  const std::int64_t big = std::int64_t{1} << 61;
  for (std::uint64_t k = 0; k < 7; ++k) acc.add(big, k);
  EXPECT_TRUE(acc.is_zero());
  acc.add(1, 0);
  EXPECT_FALSE(acc.is_zero());
  EXPECT_THROW(acc.add(std::numeric_limits<std::int64_t>::max(), 0), LimitExceeded);
}

TEST(Helpers, DivisorsPhiLcm) {
  EXPECT_EQ(divisors(12), (std::vector<Order>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(euler_phi(36), 12u);
  EXPECT_EQ(lcm(4, 6), 12u);
}

}  // namespace
}  // namespace spectile::exactnum
