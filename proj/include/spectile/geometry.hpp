#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spectile/rational.hpp"

namespace spectile::geometry {

/// Half-open interval [left, left + length).
struct Interval {
  Rational left;
  Rational length;

  Rational right() const { return left + length; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite union of disjoint intervals of total measure 1 with first left
/// endpoint 0, sorted by left endpoint. Construction validates all of this.
class IntervalUnion {
 public:
  /// Sorts by left endpoint, then validates. Throws InvalidGeometry.
  explicit IntervalUnion(std::vector<Interval> intervals);

  std::size_t size() const { return intervals_.size(); }
  const std::vector<Interval>& intervals() const { return intervals_; }
  const Interval& operator[](std::size_t j) const { return intervals_[j]; }

  /// All left and right endpoints, interval by interval.
  std::vector<Rational> endpoints() const;
  /// lcm of the endpoint denominators.
  Integer common_denominator() const;

  /// Round-trips through parse_interval_union.
  std::string to_string() const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// Parses "left,length;left,length;..." (rationals as "p" or "p/q").
/// Throws ParseError for malformed tokens and InvalidGeometry for violated invariants.
IntervalUnion parse_interval_union(std::string_view text);

/// The union written as unit cells [c/Q, (c+1)/Q) over the common denominator Q.
struct CellDecomposition {
  std::int64_t denominator = 1;
  std::vector<std::int64_t> cells;

  /// Merges runs of consecutive cells back into intervals.
  IntervalUnion to_interval_union() const;
  friend bool operator==(const CellDecomposition&, const CellDecomposition&) = default;
};

CellDecomposition cell_decomposition(const IntervalUnion& omega);

/// Builds the union from sorted cells at denominator Q (cells must start at 0
/// and number exactly Q).
IntervalUnion from_cells(std::int64_t denominator, const std::vector<std::int64_t>& cells);

/// Whether the Fourier transform of the indicator of omega vanishes at xi.
/// Decided exactly from sum_j (e(xi (a_j + r_j)) - e(xi a_j)) = 2 pi i xi chi^(xi).
/// Throws ZeroFrequency for xi = 0.
bool ft_is_zero(const IntervalUnion& omega, const Rational& xi);

}  // namespace spectile::geometry
