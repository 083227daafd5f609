#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spectile/geometry.hpp"

namespace spectile::classify {

/// cells (+) complement = Z_period exactly, in units of 1/cell_denominator.
struct TilingCertificate {
  std::int64_t cell_denominator = 1;
  std::int64_t period = 1;
  std::vector<std::int64_t> cells;
  std::vector<std::int64_t> complement;

  /// Every residue mod period covered exactly once.
  bool verify() const;
  /// The real tiling set is real_translates() + real_period() Z.
  std::vector<Rational> real_translates() const;
  Rational real_period() const;
};

struct TilingDecision {
  std::optional<TilingCertificate> certificate;
  /// "greedy", "coven-meyerowitz" or "state-search".
  std::string method;
  /// Why the set does not tile, when it does not.
  std::string reason;

  bool tiles() const { return certificate.has_value(); }
};

struct TilingOptions {
  /// Largest window (in cells) the forced greedy run may advance before giving up.
  std::int64_t p_max = std::int64_t{1} << 16;
  /// Largest cell span for the exhaustive state search.
  std::int64_t state_search_span = 26;
};

/// Decides whether the finite set `cells` (sorted, containing 0) tiles Z.
///  1. Forced greedy placement from the empty state: the leftmost uncovered cell
///     must be covered by the translate of min(cells); a repeated coverage
///     state yields a periodic certificate.
///  2. A greedy conflict is not conclusive (tilings may straddle every cut),
///     so the Coven-Meyerowitz conditions T1/T2 decide next: T1 and T2 give the
///     explicit complement, failure of T1 rules tiling out, and failure of T2
///     rules it out when |cells| has at most two prime factors.
///  3. Otherwise every coverage state is explored for a cycle.
/// Throws LimitExceeded when none of these is within the configured limits.
TilingDecision tile_cells(std::span<const std::int64_t> cells, std::int64_t cell_denominator,
                          const TilingOptions& options = {});

enum class GreedyOutcome { Cycle, Conflict, Exhausted };

/// Forced placement from the empty state; `out` receives the certificate on Cycle.
GreedyOutcome forced_greedy(std::span<const std::int64_t> cells, std::int64_t cell_denominator, std::int64_t p_max,
                            std::optional<TilingCertificate>& out);

struct CmVerdict {
  enum class Kind { Tiles, NotTiling, Undecided } kind;
  std::optional<TilingCertificate> certificate;
  std::string reason;
};

/// T1/T2 test with the explicit complement B(x) = prod Phi_s(x^t(s)).
CmVerdict coven_meyerowitz(std::span<const std::int64_t> cells, std::int64_t cell_denominator);

/// Cycle search in the coverage-state map; nullopt when no tiling exists.
/// Throws LimitExceeded for spans above 40.
std::optional<TilingCertificate> state_search(std::span<const std::int64_t> cells, std::int64_t cell_denominator);

TilingDecision tiles_decision(const geometry::IntervalUnion& omega, const TilingOptions& options = {});

}  // namespace spectile::classify
