#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "spectile/embedding.hpp"
#include "spectile/exactnum.hpp"
#include "spectile/geometry.hpp"
#include "spectile/spectrum.hpp"
#include "spectile/tiling.hpp"
#include "spectile/vandermonde.hpp"

namespace spectile::classify {

using Json = nlohmann::ordered_json;

enum class CircleRelation { Coincident, SharedPoint, Distinct };

/// Circles C1(t) = alpha (e(t) - 1) and C2(s) = beta (e(s) - 1): Coincident iff
/// alpha = beta, else SharedPoint iff C1(t) = C2(s). Throws ZeroRadius.
CircleRelation circle_relation(const exactnum::CyclotomicNumber& alpha, const exactnum::CyclotomicNumber& beta,
                               const Rational& t, const Rational& s);
std::string to_string(CircleRelation relation);

enum class Conclusion { TilingCertified, Degenerate, Exceptional, NotSpectral };
std::string to_string(Conclusion conclusion);

/// The hand-off for the unresolved three-interval case: Omega on the grid
/// 1/d with runs k1, k2, k3 starting at 0, l2, l3, and three spectrum points
/// with phi(lambda_2), phi(lambda_3), phi(lambda_4) independent.
struct ExceptionalPayload {
  std::int64_t d = 0;
  std::int64_t k1 = 0, k2 = 0, k3 = 0, l2 = 0, l3 = 0;
  std::array<Rational, 3> lambdas;  // lambda_2, lambda_3, lambda_4
  /// R_(l2,l3,k1), R_(l2,l3,l2+k2), R_(l2,l3,l3+k3), each sorted.
  std::vector<vandermonde::GVExponents> system;
  std::array<std::int64_t, 3> gcds{};
  std::int64_t gcd_all = 0;
  /// X_m = e(lambda_{m+1} / d) = zeta_N^{point[m]}.
  std::uint64_t order = 1;
  std::array<std::uint64_t, 3> point{};
  bool point_is_solution = false;

  Json to_json() const;
};

/// Builds the payload for Omega on the grid 1/d: lexicographically first
/// lambda_2 < lambda_3 in Lambda n (0, d) with phi(0), phi(lambda_2),
/// phi(lambda_3) independent, then the first lambda_4 with phi(lambda_2..4)
/// independent. Throws InvariantViolation when no choice exists or the
/// point is not a common zero.
ExceptionalPayload exceptional_payload(const geometry::IntervalUnion& omega, const PeriodicSpectrum& lambda,
                                       std::int64_t d);

struct BranchReport {
  std::string branch;
  Json evidence = Json::object();
  Conclusion conclusion = Conclusion::NotSpectral;
  std::optional<TilingDecision> tiling;
  std::optional<ExceptionalPayload> exceptional;

  /// {"branch", "evidence", "conclusion"}.
  Json to_json() const;
};

Json to_json(const TilingDecision& decision);
Json to_json(const embedding::PhiVector& v);

/// Replays the two-interval case analysis on 0 < lambda_2 < lambda_3, the
/// first elements of Lambda in [0, inf). Pairs failing either verifier give a
/// NotSpectral report. Any branch the argument rules out throws
/// InvariantViolation.
BranchReport classify_two_intervals(const geometry::IntervalUnion& omega, const PeriodicSpectrum& lambda);

/// Rank of V(Lambda), the least d with dZ in Lambda, and the ranks of V(dZ)
/// and V(Lambda \ dZ) route the pair to LatticeRankHigh, ThreeEqualIntervals
/// or Exceptional.
BranchReport classify_three_intervals(const geometry::IntervalUnion& omega, const PeriodicSpectrum& lambda);

}  // namespace spectile::classify
