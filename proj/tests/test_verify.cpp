#include <gtest/gtest.h>

#include "spectile/errors.hpp"
#include "spectile/geometry.hpp"
#include "spectile/search.hpp"
#include "spectile/spectrum.hpp"
#include "spectile/verify.hpp"
#include "support/oracle.hpp"
#include "support/random_sets.hpp"

namespace spectile::classify {
namespace {

using geometry::parse_interval_union;

const auto kUnit = parse_interval_union("0,1");
const auto kHalves = parse_interval_union("0,1/2;1,1/2");
const auto kThirds = parse_interval_union("0,1/3;1,1/3;2,1/3");

TEST(PeriodicSpectrum, ParseAndValidate) {
  const auto lambda = PeriodicSpectrum::parse("d=2;0,1/2");
  EXPECT_EQ(lambda.period(), 2);
  EXPECT_EQ(lambda.residues().size(), 2u);
  EXPECT_EQ(lambda.to_string(), "d=2;0,1/2");
  EXPECT_EQ(PeriodicSpectrum::parse(" d=3 ; 2/3, 0 ,1/3").to_string(), "d=3;0,1/3,2/3");
  EXPECT_THROW(PeriodicSpectrum::parse("d=2;0"), InvalidSpectrum);        // density 1/2
  EXPECT_THROW(PeriodicSpectrum::parse("d=2;1/2,1"), InvalidSpectrum);    // 0 missing
  EXPECT_THROW(PeriodicSpectrum::parse("d=2;0,2"), InvalidSpectrum);      // outside [0, d)
  EXPECT_THROW(PeriodicSpectrum::parse("d=2;0,0"), InvalidSpectrum);      // repeated
  EXPECT_THROW(PeriodicSpectrum::parse("d=0;0"), InvalidSpectrum);
  EXPECT_THROW(PeriodicSpectrum::parse("d=1;"), ParseError);
  EXPECT_THROW(PeriodicSpectrum::parse("2;0,1"), ParseError);
  EXPECT_THROW(PeriodicSpectrum::parse("d=2;0,q"), ParseError);
}

TEST(PeriodicSpectrum, CanonicalAndLifting) {
  const auto z = PeriodicSpectrum::parse("d=3;0,1,2");
  EXPECT_TRUE(z.is_integers());
  EXPECT_EQ(z.canonical(), PeriodicSpectrum::parse("d=1;0"));
  const auto lambda = PeriodicSpectrum::parse("d=2;0,1/2");
  EXPECT_EQ(lambda.with_period(6).canonical(), lambda);
  EXPECT_EQ(lambda.with_period(4).residues().size(), 4u);
  EXPECT_TRUE(lambda.contains(make_rational(-3, 2)));
  EXPECT_FALSE(lambda.contains(1));
  EXPECT_EQ(lambda.first_nonnegative(3), (std::vector<Rational>{0, make_rational(1, 2), 2}));
  EXPECT_EQ(lambda.elements(-2, 1), (std::vector<Rational>{-2, make_rational(-3, 2), 0, make_rational(1, 2)}));
}

TEST(VerifyOrthogonality, Examples) {
  EXPECT_TRUE(verify_orthogonality(kUnit, PeriodicSpectrum::parse("d=1;0")));
  EXPECT_TRUE(verify_orthogonality(kHalves, PeriodicSpectrum::parse("d=2;0,1/2")));
  EXPECT_FALSE(verify_orthogonality(kHalves, PeriodicSpectrum::parse("d=2;0,1")));
  EXPECT_TRUE(verify_orthogonality(kThirds, PeriodicSpectrum::parse("d=3;0,1/3,2/3")));
  // chi^(1) != 0 for three unit-spaced thirds, so the integers are not a spectrum.
  EXPECT_FALSE(verify_orthogonality(kThirds, PeriodicSpectrum::parse("d=3;0,1,2")));
}

TEST(VerifyOrthogonality, CycleReductionIsExact) {
  // The vanishing pattern of chi^(delta + d k) repeats with the stated cycle.
  for (int i = 0; i < 200; ++i) {
    const auto omega = oracle::random_union(oracle::uniform(1, 3), oracle::uniform(2, 8), 4);
    const auto d = oracle::uniform(1, 4);
    const auto cycle = orthogonality_cycle(omega, d);
    const auto delta = make_rational(oracle::uniform(1, 23), oracle::uniform(1, 6));
    for (std::int64_t k = 0; k < cycle; ++k) {
      const Rational a = delta + d * k, b = delta + d * (k + cycle);
      if (a == 0 || b == 0) continue;
      ASSERT_EQ(geometry::ft_is_zero(omega, a), geometry::ft_is_zero(omega, b));
    }
  }
}

TEST(VerifyOrthogonality, MatchesNumericOracleOverTheCycle) {
  for (int i = 0; i < 60; ++i) {
    const auto d = oracle::uniform(1, 3);
    const auto grid = oracle::uniform(1, 3);
    const auto omega = oracle::random_union(oracle::uniform(1, 3), d * oracle::uniform(1, 2), 3);
    std::vector<Rational> residues{0};
    while (static_cast<std::int64_t>(residues.size()) < d) {
      const auto r = make_rational(oracle::uniform(1, d * grid - 1), grid);
      if (std::find(residues.begin(), residues.end(), r) == residues.end()) residues.push_back(r);
    }
    const PeriodicSpectrum lambda(d, residues);
    const auto cycle = orthogonality_cycle(omega, d);
    bool expected = true;
    for (std::int64_t k = 1; k < cycle && expected; ++k) expected = oracle::ft_zero_numeric(omega, Rational(d * k));
    for (const auto& a : residues)
      for (const auto& b : residues)
        for (std::int64_t k = 0; k < cycle && expected && a != b; ++k)
          expected = oracle::ft_zero_numeric(omega, a - b + d * k);
    EXPECT_EQ(verify_orthogonality(omega, lambda), expected) << omega.to_string() << " " << lambda.to_string();
  }
}

TEST(VerifyOrthogonality, InvariantUnderPeriodRelabelling) {
  const auto lambda = PeriodicSpectrum::parse("d=2;0,1/2");
  for (std::int64_t m : {2, 3, 5}) EXPECT_TRUE(verify_orthogonality(kHalves, lambda.with_period(2 * m)));
  const auto bad = PeriodicSpectrum::parse("d=2;0,1");
  for (std::int64_t m : {2, 3}) EXPECT_FALSE(verify_orthogonality(kHalves, bad.with_period(2 * m)));
}

TEST(VerifyCompleteness, Examples) {
  EXPECT_EQ(verify_completeness(kUnit, PeriodicSpectrum::parse("d=1;0")).kind, Completeness::Kind::Complete);
  const auto halves = verify_completeness(kHalves, PeriodicSpectrum::parse("d=2;0,1/2"));
  EXPECT_EQ(halves.kind, Completeness::Kind::Complete);
  EXPECT_EQ(halves.route, "hadamard");
  EXPECT_EQ(verify_completeness(kThirds, PeriodicSpectrum::parse("d=3;0,1/3,2/3")).kind,
            Completeness::Kind::Complete);
  EXPECT_THROW(verify_completeness(kHalves, PeriodicSpectrum::parse("d=2;0,1")), PreconditionViolated);
}

// H[i][j] = e(lambda_i a_j) over the cell left endpoints, checked numerically.
bool numeric_hadamard(const geometry::IntervalUnion& omega, const PeriodicSpectrum& lambda) {
  const auto cells = geometry::cell_decomposition(omega);
  const auto& rs = lambda.residues();
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      std::vector<std::pair<Rational, Rational>> terms;
      for (auto c : cells.cells) terms.emplace_back(1, (rs[i] - rs[j]) * make_rational(c, cells.denominator));
      if (!oracle::numeric_zero(terms)) return false;
    }
  return true;
}

TEST(VerifyCompleteness, HadamardMatchesNumericUnitarity) {
  EXPECT_TRUE(numeric_hadamard(kHalves, PeriodicSpectrum::parse("d=2;0,1/2")));
  EXPECT_TRUE(numeric_hadamard(kThirds, PeriodicSpectrum::parse("d=3;0,1/3,2/3")));
}

TEST(VerifyCompleteness, ParsevalRouteAgreesWithHadamard) {
  // Spectra of cell configurations found by the mask-zero enumeration.
  int checked = 0;
  for (std::int64_t d : {3, 4}) {
    for (auto& config : search::enumerate_configs(d, d)) {
      if (config.l3 + config.k[2] > 2 * d) continue;
      const auto omega = geometry::from_cells(d, config.cells);
      for (const auto& residues : search::spectra_on_grid(config.cells, d, d)) {
        std::vector<Rational> rs;
        for (auto m : residues) rs.push_back(make_rational(m, d));
        const PeriodicSpectrum lambda(d, rs);
        ASSERT_TRUE(verify_orthogonality(omega, lambda));
        const auto exact = verify_completeness(omega, lambda);
        EXPECT_EQ(exact.kind, Completeness::Kind::Complete);
        CompletenessOptions numeric;
        numeric.force_numeric = true;
        const auto approx = verify_completeness(omega, lambda, numeric);
        EXPECT_EQ(approx.kind, Completeness::Kind::NumericCertified);
        EXPECT_EQ(approx.route, "parseval");
        EXPECT_LT(approx.bound, 1e-3);
        EXPECT_TRUE(numeric_hadamard(omega, lambda));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 5);
}

TEST(VerifyCompleteness, LargeGridUsesCertifiedNumericRoute) {
  CompletenessOptions small_cap;
  small_cap.exact_max_order = 1;
  const auto result = verify_completeness(kHalves, PeriodicSpectrum::parse("d=2;0,1/2"), small_cap);
  EXPECT_EQ(result.kind, Completeness::Kind::NumericCertified);
  EXPECT_GT(result.bound, 0);
  EXPECT_TRUE(result.accepted());
}

}  // namespace
}  // namespace spectile::classify
