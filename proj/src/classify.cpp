#include "spectile/classify.hpp"

#include <numeric>

#include "spectile/embedding.hpp"
#include "spectile/errors.hpp"
#include "spectile/verify.hpp"

namespace spectile::classify {

using exactnum::CyclotomicNumber;
using spectile::to_string;

CircleRelation circle_relation(const CyclotomicNumber& alpha, const CyclotomicNumber& beta, const Rational& t,
                               const Rational& s) {
  if (alpha.is_zero() || beta.is_zero()) throw ZeroRadius("circle with zero radius");
  if (alpha == beta) return CircleRelation::Coincident;
  const auto one = CyclotomicNumber::from_rational(1);
  const auto c1 = alpha * (CyclotomicNumber::root_of_unity(t) - one);
  const auto c2 = beta * (CyclotomicNumber::root_of_unity(s) - one);
  return c1 == c2 ? CircleRelation::SharedPoint : CircleRelation::Distinct;
}

std::string to_string(CircleRelation relation) {
  switch (relation) {
    case CircleRelation::Coincident: return "Coincident";
    case CircleRelation::SharedPoint: return "SharedPoint";
    case CircleRelation::Distinct: return "Distinct";
  }
  return "?";
}

std::string to_string(Conclusion conclusion) {
  switch (conclusion) {
    case Conclusion::TilingCertified: return "TilingCertified";
    case Conclusion::Degenerate: return "Degenerate";
    case Conclusion::Exceptional: return "Exceptional";
    case Conclusion::NotSpectral: return "NotSpectral";
  }
  return "?";
}

namespace {

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json integers(const std::vector<std::int64_t>& values) {
  Json out = Json::array();
  for (auto v : values) out.push_back(v);
  return out;
}

Json exponential_matrix(const geometry::IntervalUnion& omega, const std::vector<Rational>& points) {
  Json rows = Json::array();
  for (const auto& x : points) rows.push_back(to_json(embedding::phi(omega, x)));
  return rows;
}

// NotSpectral report when a verifier fails, nullopt otherwise.
std::optional<BranchReport> check_spectral(const geometry::IntervalUnion& omega, const PeriodicSpectrum& lambda,
                                           Json& evidence) {
  const bool orthogonal = verify_orthogonality(omega, lambda);
  evidence["orthogonal"] = orthogonal;
  if (orthogonal) {
    const auto complete = verify_completeness(omega, lambda);
    evidence["complete"] = complete.to_string();
    if (complete.accepted()) return std::nullopt;
  }
  BranchReport report;
  report.branch = "NotSpectral";
  report.evidence = evidence;
  report.conclusion = Conclusion::NotSpectral;
  return report;
}

void attach_tiling(BranchReport& report, const geometry::IntervalUnion& omega) {
  auto decision = tiles_decision(omega);
  if (!decision.tiles())
    throw InvariantViolation("spectral set " + omega.to_string() + " classified as " + report.branch +
                             " does not tile (" + decision.reason + ")");
  report.evidence["tiling"] = to_json(decision);
  report.tiling = std::move(decision);
  report.conclusion = Conclusion::TilingCertified;
}

Rational lcm_rational_period(std::int64_t a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), Integer(static_cast<long>(a)).get_mpz_t(), b.get_mpz_t());
  return Rational(l);
}

}  // namespace

Json to_json(const embedding::PhiVector& v) { return rationals(v.coordinates()); }

Json to_json(const TilingDecision& decision) {
  Json out;
  out["tiles"] = decision.tiles();
  out["method"] = decision.method;
  if (decision.certificate) {
    const auto& c = *decision.certificate;
    out["cellDenominator"] = c.cell_denominator;
    out["cellPeriod"] = c.period;
    out["cells"] = integers(c.cells);
    out["complement"] = integers(c.complement);
    out["realTranslates"] = rationals(c.real_translates());
    out["realPeriod"] = to_string(c.real_period());
  } else {
    out["reason"] = decision.reason;
  }
  return out;
}

Json ExceptionalPayload::to_json() const {
  Json out;
  out["d"] = d;
  out["k"] = {k1, k2, k3};
  out["l"] = {l2, l3};
  out["lambdas"] = rationals({lambdas.begin(), lambdas.end()});
  Json sys = Json::array();
  for (const auto& e : system) sys.push_back(e.to_string());
  out["system"] = sys;
  out["gcds"] = {gcds[0], gcds[1], gcds[2]};
  out["gcdAll"] = gcd_all;
  out["order"] = order;
  out["point"] = {point[0], point[1], point[2]};
  out["pointIsSolution"] = point_is_solution;
  return out;
}

Json BranchReport::to_json() const {
  Json out;
  out["branch"] = branch;
  out["evidence"] = evidence;
  out["conclusion"] = classify::to_string(conclusion);
  return out;
}

// --- two intervals --------------------------------------------------------------

BranchReport classify_two_intervals(const geometry::IntervalUnion& omega, const PeriodicSpectrum& lambda) {
  if (omega.size() != 2) throw PreconditionViolated("classify2 needs exactly two intervals");
  Json evidence;
  if (auto report = check_spectral(omega, lambda, evidence)) return *report;

  const Rational r = omega[0].length;
  const Rational a = omega[1].left;
  const auto lams = lambda.first_nonnegative(3);
  const Rational &l2 = lams[1], &l3 = lams[2];
  const auto p0 = embedding::phi(omega, 0), p2 = embedding::phi(omega, l2), p3 = embedding::phi(omega, l3);
  evidence["lambdas"] = rationals(lams);
  evidence["exponentialMatrix"] = exponential_matrix(omega, lams);
  evidence["rank"] = embedding::span_rank(omega, lams).rank();

  BranchReport report;
  report.evidence = std::move(evidence);
  auto& ev = report.evidence;
  if (p2 == p0) {
    // Lambda = lambda_2 Z and V(Lambda) is a line: a single interval.
    report.branch = "RankOne";
    report.conclusion = Conclusion::Degenerate;
    return report;
  }

  const auto one = CyclotomicNumber::from_rational(1);
  const auto alpha = CyclotomicNumber::root_of_unity(frac(l2 * a)) - one;
  const auto beta = CyclotomicNumber::root_of_unity(frac(l2 * r)) - one;
  ev["alphaZero"] = alpha.is_zero();
  ev["betaZero"] = beta.is_zero();

  auto case_one = [&] {
    const Integer d = embedding::detect_period(omega, 0, l3);
    ev["d"] = to_int64(d);
    ev["r"] = to_string(r);
    ev["a"] = to_string(a);
    const bool half_a = is_integer(2 * a);
    ev["aInHalfIntegers"] = half_a;
    if (d != 2) throw InvariantViolation("phi(0) = phi(lambda_3) with period " + d.get_str() + " != 2");
    if (r != make_rational(1, 2) || !half_a) throw InvariantViolation("period 2 without r = 1/2 and a in Z/2");
  };

  if (lambda.is_integers()) {
    report.branch = "LambdaIsZ";
    if (p3 == p0) {
      ev["subcase"] = "Case1";
      case_one();
    } else if (alpha.is_zero()) {
      throw InvariantViolation("alpha = 0 forces phi(lambda_2) = phi(0)");
    } else if (beta.is_zero()) {
      ev["subcase"] = "BetaZero";
    } else if (alpha == beta) {
      ev["subcase"] = "CoincidentCircles";
    } else {
      throw InvariantViolation("Lambda = Z with distinct circles");
    }
  } else if (p3 == p0) {
    report.branch = "Case1";
    case_one();
  } else {
    report.branch = "Case2";
    if (p2 == p3) throw InvariantViolation("phi(lambda_2) = phi(lambda_3) forces a rank-one span");
    if (alpha.is_zero()) throw InvariantViolation("alpha = 0 forces phi(lambda_2) = phi(0)");
    if (beta.is_zero()) throw InvariantViolation("beta = 0 forces Lambda = Z");
    const auto relation = circle_relation(alpha, beta, frac(l3 * r), frac(l3 * a));
    ev["circles"] = to_string(relation);
    switch (relation) {
      case CircleRelation::Coincident: throw InvariantViolation("coincident circles force Lambda = Z");
      case CircleRelation::Distinct: throw InvariantViolation("rank-two determinant identity fails");
      case CircleRelation::SharedPoint:
        throw InvariantViolation("two distinct circles meet in three points, forcing phi(lambda_2) = phi(lambda_3)");
    }
  }
  attach_tiling(report, omega);
  return report;
}

// --- three intervals ------------------------------------------------------------

ExceptionalPayload exceptional_payload(const geometry::IntervalUnion& omega, const PeriodicSpectrum& lambda,
                                       std::int64_t d) {
  if (omega.size() != 3) throw PreconditionViolated("exceptional payload needs three intervals");
  const auto canon = lambda.canonical();
  ExceptionalPayload payload;
  payload.d = d;
  auto scaled = [&](const Rational& x) {
    const Rational v = x * d;
    if (!is_integer(v)) throw InvariantViolation("endpoint " + to_string(x) + " off the 1/d grid");
    return to_int64(v.get_num());
  };
  payload.k1 = scaled(omega[0].length);
  payload.l2 = scaled(omega[1].left);
  payload.k2 = scaled(omega[1].length);
  payload.l3 = scaled(omega[2].left);
  payload.k3 = scaled(omega[2].length);
  if (payload.k1 + payload.k2 + payload.k3 != d) throw InvariantViolation("k1 + k2 + k3 != d");

  // Lexicographically first lambda_2 < lambda_3 completing a basis with 0,
  // then the first lambda_4 with phi(lambda_2..4) independent.
  std::vector<Rational> candidates;
  for (const auto& x : canon.elements(0, Rational(d)))
    if (x > 0) candidates.push_back(x);
  bool found = false;
  for (std::size_t i = 0; i < candidates.size() && !found; ++i)
    for (std::size_t j = i + 1; j < candidates.size() && !found; ++j) {
      if (embedding::span_rank(omega, std::vector<Rational>{0, candidates[i], candidates[j]}).rank() != 3) continue;
      for (std::size_t k = 0; k < candidates.size() && !found; ++k) {
        if (k == i || k == j) continue;
        if (embedding::span_rank(omega, std::vector<Rational>{candidates[i], candidates[j], candidates[k]}).rank() == 3) {
          payload.lambdas = {candidates[i], candidates[j], candidates[k]};
          found = true;
        }
      }
    }
  if (!found) throw InvariantViolation("no lambda_2, lambda_3, lambda_4 below d with independent images");

  using vandermonde::GVExponents;
  const auto l2 = payload.l2, l3 = payload.l3;
  payload.system = {GVExponents::sorted(l2, l3, payload.k1), GVExponents::sorted(l2, l3, l2 + payload.k2),
                    GVExponents::sorted(l2, l3, l3 + payload.k3)};
  for (int m = 0; m < 3; ++m) payload.gcds[m] = payload.system[m].g();
  payload.gcd_all = std::gcd(std::gcd(payload.gcds[0], payload.gcds[1]), payload.gcds[2]);

  std::vector<Rational> exps;
  for (const auto& x : payload.lambdas) exps.push_back(frac(x / d));
  payload.order = static_cast<std::uint64_t>(to_int64(common_denominator(exps)));
  for (int m = 0; m < 3; ++m)
    payload.point[m] = static_cast<std::uint64_t>(to_int64(Rational(exps[m] * static_cast<long>(payload.order)).get_num()));
  payload.point_is_solution = true;
  for (const auto& e : payload.system)
    payload.point_is_solution = payload.point_is_solution && vandermonde::gv_det(e).vanishes_at(payload.order, payload.point);
  if (!payload.point_is_solution)
    throw InvariantViolation("spectrum point is not a common zero of the Vandermonde system");
  return payload;
}

BranchReport classify_three_intervals(const geometry::IntervalUnion& omega, const PeriodicSpectrum& lambda) {
  if (omega.size() != 3) throw PreconditionViolated("classify3 needs exactly three intervals");
  Json evidence;
  if (auto report = check_spectral(omega, lambda, evidence)) return *report;

  const auto canon = lambda.canonical();
  const std::int64_t p = canon.period();
  const Rational window = lcm_rational_period(p, embedding::phi_period(omega));
  const auto points = canon.elements(0, window);
  const auto basis = embedding::span_rank(omega, points);
  const auto first_four = canon.first_nonnegative(4);

  BranchReport report;
  report.evidence = std::move(evidence);
  auto& ev = report.evidence;
  ev["period"] = p;
  ev["rank"] = basis.rank();
  ev["basis"] = rationals(basis.points);
  ev["exponentialMatrix"] = exponential_matrix(omega, basis.points);
  ev["firstFour"] = rationals(first_four);
  ev["phi0EqualsPhiLambda4"] = embedding::phi(omega, 0) == embedding::phi(omega, first_four[3]);
  if (basis.rank() < 3) {
    report.branch = "RankDeficient";
    report.conclusion = Conclusion::Degenerate;
    return report;
  }

  // Least d with dZ in Lambda; it divides the period since dZ + pZ = gcd(d, p)Z.
  std::int64_t d = 0;
  for (auto q : exactnum::divisors(static_cast<exactnum::Order>(p))) {
    bool inside = true;
    for (std::int64_t k = 1; k < p / static_cast<std::int64_t>(q) + 1 && inside; ++k) {
      const Rational x = make_rational(static_cast<std::int64_t>(q) * k);
      const bool member = embedding::membership_test(omega, basis, x);
      if (member != canon.contains(x))
        throw InvariantViolation("membership test disagrees with Lambda at " + to_string(x));
      inside = member;
    }
    if (inside) {
      d = static_cast<std::int64_t>(q);
      break;
    }
  }
  if (d == 0) throw InvariantViolation("period multiples missing from Lambda");
  ev["d"] = d;

  std::vector<Rational> lattice, rest;
  for (const auto& x : points) (is_integer(x / d) ? lattice : rest).push_back(x);
  const auto lattice_rank = embedding::span_rank(omega, lattice).rank();
  const auto rest_rank = embedding::span_rank(omega, rest).rank();
  ev["latticeRank"] = lattice_rank;
  ev["restRank"] = rest_rank;

  if (lattice_rank >= 2) {
    report.branch = "LatticeRankHigh";
    attach_tiling(report, omega);
    return report;
  }
  if (rest_rank == 2) {
    report.branch = "ThreeEqualIntervals";
    const auto third = make_rational(1, 3);
    const bool equal = omega[0].length == third && omega[1].length == third && omega[2].length == third;
    ev["equalIntervals"] = equal;
    if (d != 3 || !equal) throw InvariantViolation("rank split 1 + 2 without three equal intervals and d = 3");
    attach_tiling(report, omega);
    return report;
  }
  if (rest_rank != 3) throw InvariantViolation("rank 3 with lattice rank 1 and rest rank " + std::to_string(rest_rank));

  report.branch = "Exceptional";
  report.conclusion = Conclusion::Exceptional;
  auto payload = exceptional_payload(omega, canon, d);
  ev["exceptional"] = payload.to_json();
  report.exceptional = std::move(payload);
  return report;
}

}  // namespace spectile::classify
