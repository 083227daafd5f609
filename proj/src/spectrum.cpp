#include "spectile/spectrum.hpp"

#include <algorithm>

#include "spectile/errors.hpp"
#include "spectile/exactnum.hpp"

namespace spectile::classify {

PeriodicSpectrum::PeriodicSpectrum(std::int64_t period, std::vector<Rational> residues)
    : period_(period), residues_(std::move(residues)) {
  if (period_ < 1) throw InvalidSpectrum("period must be a positive integer");
  std::sort(residues_.begin(), residues_.end());
  if (std::adjacent_find(residues_.begin(), residues_.end()) != residues_.end())
    throw InvalidSpectrum("residues must be distinct");
  if (static_cast<std::int64_t>(residues_.size()) != period_)
    throw InvalidSpectrum("density must be 1: " + std::to_string(residues_.size()) + " residues for period " +
                          std::to_string(period_));
  if (residues_.front() != 0) throw InvalidSpectrum("0 must be a residue");
  if (residues_.back() >= period_) throw InvalidSpectrum("residues must lie in [0, period)");
}

PeriodicSpectrum PeriodicSpectrum::parse(std::string_view text) {
  const auto parts = split(text, ';');
  if (parts.size() != 2) throw ParseError("expected 'd=<period>;<residues>' but got '" + std::string(text) + "'");
  auto head = trim(parts[0]);
  if (head.size() < 3 || head.substr(0, 2) != "d=")
    throw ParseError("expected 'd=<period>' but got '" + std::string(head) + "'");
  const Rational d = parse_rational(head.substr(2));
  if (!is_integer(d)) throw ParseError("period must be an integer, got '" + std::string(head.substr(2)) + "'");
  std::vector<Rational> residues;
  for (auto token : split(parts[1], ',')) residues.push_back(parse_rational(token));
  return PeriodicSpectrum(to_int64(d.get_num()), std::move(residues));
}

bool PeriodicSpectrum::contains(const Rational& x) const {
  const Rational d = period_;
  const Rational r = x - Rational{spectile::floor(x / d)} * d;
  return std::binary_search(residues_.begin(), residues_.end(), r);
}

PeriodicSpectrum PeriodicSpectrum::canonical() const {
  for (auto p : exactnum::divisors(static_cast<exactnum::Order>(period_))) {
    const auto shift = static_cast<std::int64_t>(p);
    if (shift == period_) break;
    const bool invariant = std::all_of(residues_.begin(), residues_.end(),
                                       [&](const Rational& r) { return contains(r + shift); });
    if (!invariant) continue;
    std::vector<Rational> base;
    for (const auto& r : residues_)
      if (r < shift) base.push_back(r);
    return PeriodicSpectrum(shift, std::move(base));
  }
  return *this;
}

PeriodicSpectrum PeriodicSpectrum::with_period(std::int64_t multiple) const {
  if (multiple % period_ != 0) throw InvalidSpectrum("new period must be a multiple of the old one");
  std::vector<Rational> out;
  out.reserve(multiple);
  for (std::int64_t k = 0; k < multiple / period_; ++k)
    for (const auto& r : residues_) out.push_back(r + k * period_);
  return PeriodicSpectrum(multiple, std::move(out));
}

std::vector<Rational> PeriodicSpectrum::elements(const Rational& lo, const Rational& hi) const {
  std::vector<Rational> out;
  const Rational d = period_;
  const Integer k0 = spectile::floor(lo / d);
  const Integer k1 = spectile::floor(hi / d);
  for (Integer k = k0; k <= k1; ++k)
    for (const auto& r : residues_) {
      const Rational x = r + Rational{k} * d;
      if (x >= lo && x < hi) out.push_back(x);
    }
  return out;
}

std::vector<Rational> PeriodicSpectrum::first_nonnegative(std::size_t count) const {
  const auto blocks = static_cast<std::int64_t>(count / residues_.size() + 1);
  auto out = elements(0, Rational{blocks * period_});
  out.resize(count);
  return out;
}

bool PeriodicSpectrum::is_integers() const {
  const auto c = canonical();
  return c.period_ == 1;
}

std::string PeriodicSpectrum::to_string() const {
  std::string out = "d=" + std::to_string(period_) + ";";
  for (std::size_t i = 0; i < residues_.size(); ++i) out += (i ? "," : "") + spectile::to_string(residues_[i]);
  return out;
}

}  // namespace spectile::classify
