#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spectile/rational.hpp"

namespace spectile::classify {

/// Lambda = {residues} + period * Z, with exactly `period` distinct residues in
/// [0, period) (density 1) and 0 among them.
class PeriodicSpectrum {
 public:
  /// Sorts the residues and validates. Throws InvalidSpectrum.
  PeriodicSpectrum(std::int64_t period, std::vector<Rational> residues);

  /// "d=2;0,1/2". Throws ParseError / InvalidSpectrum.
  static PeriodicSpectrum parse(std::string_view text);

  std::int64_t period() const { return period_; }
  const std::vector<Rational>& residues() const { return residues_; }

  bool contains(const Rational& x) const;
  /// Same set written with the smallest period.
  PeriodicSpectrum canonical() const;
  /// Same set written with period `multiple` (a multiple of period()).
  PeriodicSpectrum with_period(std::int64_t multiple) const;
  /// Lambda intersected with [lo, hi), ascending.
  std::vector<Rational> elements(const Rational& lo, const Rational& hi) const;
  /// The first `count` elements of Lambda intersected with [0, inf).
  std::vector<Rational> first_nonnegative(std::size_t count) const;
  /// Lambda == Z.
  bool is_integers() const;

  std::string to_string() const;
  friend bool operator==(const PeriodicSpectrum&, const PeriodicSpectrum&) = default;

 private:
  std::int64_t period_;
  std::vector<Rational> residues_;
};

}  // namespace spectile::classify
