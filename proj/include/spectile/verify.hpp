#pragma once

#include <cstdint>
#include <string>

#include "spectile/geometry.hpp"
#include "spectile/spectrum.hpp"

namespace spectile::classify {

/// Length of the k-cycle for the frequencies delta + d k: the lcm over the
/// endpoints e of den(d e). The vanishing pattern at k and k + cycle agree.
std::int64_t orthogonality_cycle(const geometry::IntervalUnion& omega, std::int64_t period);

/// chi^(delta + d k) = 0 for all residue differences delta and all k, and
/// chi^(d k) = 0 for k != 0, checked exactly over one k-cycle.
bool verify_orthogonality(const geometry::IntervalUnion& omega, const PeriodicSpectrum& lambda);

struct Completeness {
  enum class Kind { Complete, Incomplete, NumericCertified };
  Kind kind = Kind::Incomplete;
  /// Certified bound on the Parseval defect; 0 for exact verdicts.
  double bound = 0;
  /// "hadamard" or "parseval".
  std::string route;

  bool accepted() const { return kind != Kind::Incomplete; }
  std::string to_string() const;
};

struct CompletenessOptions {
  /// Largest grid order M = lcm(Q, d) decided by the exact Hadamard route.
  std::int64_t exact_max_order = 1024;
  bool force_numeric = false;
  /// Terms |k| <= truncation of the Parseval weights sum_k |g^(lambda + M k)|^2.
  std::int64_t truncation = 4096;
};

/// Requires verify_orthogonality (PreconditionViolated otherwise). Writes Omega
/// on the grid 1/M with M = lcm(Q, d) and Lambda with period M, then checks
/// H H* = M I for H[i][c] = e(lambda_i c / M) exactly, or, above the exact size
/// cap, the Parseval identity for the cell indicators with a certified bound.
Completeness verify_completeness(const geometry::IntervalUnion& omega, const PeriodicSpectrum& lambda,
                                 const CompletenessOptions& options = {});

}  // namespace spectile::classify
