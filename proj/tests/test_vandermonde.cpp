#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "spectile/errors.hpp"
#include "spectile/vandermonde.hpp"
#include "support/det_oracle.hpp"

namespace spectile::vandermonde {
namespace {

GVPolynomial x(int i) {
  Monomial m{0, 0, 0};
  m[i] = 1;
  return GVPolynomial::monomial(m);
}
GVPolynomial one() { return GVPolynomial::constant(1); }

GVExponents random_exponents(std::int64_t max) {
  std::int64_t a, b, c;
  do {
    a = oracle::uniform(1, max);
    b = oracle::uniform(1, max);
    c = oracle::uniform(1, max);
  } while (a == b || b == c || a == c);
  return GVExponents::sorted(a, b, c);
}

std::array<Integer, 3> random_nodes() {
  return {Integer(static_cast<long>(oracle::uniform(-3, 3))), Integer(static_cast<long>(oracle::uniform(-3, 3))),
          Integer(static_cast<long>(oracle::uniform(-3, 3)))};
}

TEST(GVExponents, Validation) {
  EXPECT_THROW(GVExponents(0, 1, 2), PreconditionViolated);
  EXPECT_THROW(GVExponents(1, 1, 2), PreconditionViolated);
  EXPECT_THROW(GVExponents(3, 2, 1), PreconditionViolated);
  EXPECT_EQ(GVExponents::parse("2, 4,6"), GVExponents(2, 4, 6));
  EXPECT_EQ(GVExponents(2, 4, 6).g(), 2);
  EXPECT_EQ(GVExponents::sorted(6, 2, 4), GVExponents(2, 4, 6));
  EXPECT_EQ(GVExponents(1, 2, 3).to_string(), "1,2,3");
  EXPECT_THROW(GVExponents::parse("1,2"), ParseError);
  EXPECT_THROW(GVExponents::parse("1,x,3"), ParseError);
}

TEST(GVExponents, ParseSystem) {
  const auto s = parse_system("1,2,3|2,4,6");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[1], GVExponents(2, 4, 6));
  EXPECT_THROW(parse_system(""), PreconditionViolated);
}

TEST(GVDet, OneTwoThreeFactorization) {
  const auto expected = (x(0) - one()) * (x(1) - one()) * (x(2) - one()) * (x(1) - x(0)) * (x(2) - x(0)) *
                        (x(2) - x(1));
  EXPECT_EQ(gv_det(GVExponents(1, 2, 3)), expected);
  EXPECT_EQ(vandermonde3(), (x(1) - x(0)) * (x(2) - x(0)) * (x(2) - x(1)));
}

TEST(GVDet, VanishesOnRepeatedAndUnitRows) {
  for (int i = 0; i < 100; ++i) {
    const auto r = gv_det(random_exponents(15));
    EXPECT_TRUE(r.identify_variables(0, 1).is_zero());
    EXPECT_TRUE(r.identify_variables(1, 2).is_zero());
    EXPECT_TRUE(r.substitute_constant(0, 1).is_zero());
    EXPECT_TRUE(r.substitute_constant(2, 1).is_zero());
  }
}

TEST(GVDet, MatchesMatrixDeterminantAtIntegerNodes) {
  for (int i = 0; i < 300; ++i) {
    const auto e = random_exponents(12);
    const auto nodes = random_nodes();
    EXPECT_EQ(oracle::evaluate_at(gv_det(e), nodes), oracle::gv_det_at(e, nodes)) << e.to_string();
  }
}

TEST(GVDet, Antisymmetric) {
  for (int i = 0; i < 100; ++i) {
    const auto r = gv_det(random_exponents(15));
    EXPECT_EQ(r.swap_variables(0, 1), -r);
    EXPECT_EQ(r.swap_variables(0, 2), -r);
    EXPECT_EQ(r.swap_variables(1, 2), -r);
  }
}

TEST(GVDet, SubstitutionLaw) {
  for (int i = 0; i < 200; ++i) {
    const auto e = random_exponents(8);
    const auto g = static_cast<std::uint32_t>(oracle::uniform(2, 3));
    EXPECT_EQ(gv_det(GVExponents(g * e.j, g * e.k, g * e.l)), gv_det(e).substitute_power(g)) << e.to_string();
  }
}

TEST(SchurAndT, Examples) {
  const auto a = schur_and_t(GVExponents(1, 2, 3));
  EXPECT_EQ(a.s, (x(0) - one()) * (x(1) - one()) * (x(2) - one()));
  EXPECT_EQ(a.t, one());
  EXPECT_EQ(schur_and_t(GVExponents(2, 4, 6)).t, one());
  EXPECT_TRUE(schur_and_t(GVExponents(1, 2, 4)).t.size() > 1);
}

TEST(SchurAndT, DivisionContract) {
  for (int i = 0; i < 500; ++i) {
    const auto e = random_exponents(15);
    const auto r = gv_det(e);
    const auto st = schur_and_t(e);
    ASSERT_EQ(st.s * vandermonde3(), r) << e.to_string();
    const auto g = static_cast<std::uint32_t>(e.g());
    ASSERT_EQ(st.t * gv_det(GVExponents(1, 2, 3)).substitute_power(g), r) << e.to_string();
    // S is symmetric.
    ASSERT_EQ(st.s.swap_variables(0, 1), st.s);
  }
}

TEST(ExactDivide, NotDivisible) {
  EXPECT_THROW(exact_divide(x(0) + one(), x(1)), NotDivisible);
  EXPECT_THROW(exact_divide(x(0) * x(0) + one(), x(0) - one()), NotDivisible);
  EXPECT_THROW(exact_divide(one(), GVPolynomial()), NotDivisible);
  EXPECT_EQ(exact_divide(x(0) * x(0) - one(), x(0) - one()), x(0) + one());
}

TEST(GVPolynomial, TextForm) {
  EXPECT_EQ(GVPolynomial().to_string(), "0");
  EXPECT_EQ((x(0) * x(0) * x(1) * GVPolynomial::constant(3) - x(2) + one()).to_string(), "3*X1^2*X2 - X3 + 1");
}

TEST(IsTrivial, Definition) {
  EXPECT_TRUE(is_trivial({0, 1, 2}));
  EXPECT_TRUE(is_trivial({1, 1, 2}));
  EXPECT_TRUE(is_trivial({1, 2, 1}));
  EXPECT_FALSE(is_trivial({1, 2, 3}));
}

TEST(TorusSolutions, OneTwoThreeAtThree) {
  const std::vector<GVExponents> system{GVExponents(1, 2, 3)};
  const auto s = torus_solutions(system, 3);
  EXPECT_EQ(s.solutions.size(), 27u);
  EXPECT_EQ(s.trivial_count, 27u);
  EXPECT_EQ(s.nontrivial_count, 0u);
}

TEST(TorusSolutions, TrivialTriplesAlwaysSolve) {
  for (int i = 0; i < 20; ++i) {
    std::vector<GVExponents> system{random_exponents(10), random_exponents(10)};
    const auto n = static_cast<std::uint64_t>(oracle::uniform(1, 7));
    const auto s = torus_solutions(system, n);
    std::uint64_t trivial = 0;
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b)
        for (std::uint64_t c = 0; c < n; ++c) trivial += is_trivial({a, b, c});
    EXPECT_EQ(s.trivial_count, trivial);
    EXPECT_EQ(s.solutions.size(), s.trivial_count + s.nontrivial_count);
    EXPECT_TRUE(std::is_sorted(s.solutions.begin(), s.solutions.end()));
  }
}

// The accumulator evaluation, the elimination path and 200-bit floating point
// agree point by point.
TEST(TorusSolutions, ThreeRoutesAgree) {
  for (int i = 0; i < 12; ++i) {
    const auto e = random_exponents(12);
    const auto n = static_cast<std::uint64_t>(oracle::uniform(2, 12));
    const std::vector<GVExponents> system{e};
    const auto s = torus_solutions(system, n);
    std::set<std::array<std::uint64_t, 3>> listed(s.solutions.begin(), s.solutions.end());
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b)
        for (std::uint64_t c = 0; c < n; ++c) {
          const std::array<std::uint64_t, 3> p{a, b, c};
          const bool numeric = oracle::gv_det_zero_numeric(e, n, p);
          ASSERT_EQ(listed.count(p) == 1, numeric) << e.to_string() << " N=" << n;
          if (!is_trivial(p) && (a + b + c) % 3 == 0) ASSERT_EQ(det_vanishes_at(e, n, p), numeric);
        }
  }
}

TEST(TorusSolutions, JobsDoNotChangeTheResult) {
  const std::vector<GVExponents> system{GVExponents(1, 3, 5), GVExponents(2, 3, 7)};
  const auto a = torus_solutions(system, 12, 1);
  const auto b = torus_solutions(system, 12, 4);
  EXPECT_EQ(a.solutions, b.solutions);
  EXPECT_EQ(a.nontrivial_count, b.nontrivial_count);
}

TEST(GVPolynomial, EvaluateMatchesVanishesAt) {
  const auto r = gv_det(GVExponents(1, 2, 4));
  for (std::uint64_t a = 0; a < 6; ++a)
    for (std::uint64_t b = 0; b < 6; ++b)
      for (std::uint64_t c = 0; c < 6; ++c)
        EXPECT_EQ(r.evaluate(6, {a, b, c}).is_zero(), r.vanishes_at(6, {a, b, c}));
}

}  // namespace
}  // namespace spectile::vandermonde
