#include "spectile/embedding.hpp"

#include <algorithm>
#include <set>

#include "spectile/errors.hpp"

namespace spectile::embedding {

using exactnum::CyclotomicNumber;
using exactnum::Order;
using exactnum::RootTerm;

std::vector<Rational> PhiVector::coordinates() const {
  std::vector<Rational> out = first;
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

PhiVector phi(const geometry::IntervalUnion& omega, const Rational& x) {
  PhiVector v;
  v.first.reserve(omega.size());
  v.second.reserve(omega.size());
  for (const auto& iv : omega.intervals()) {
    v.first.push_back(frac(iv.right() * x));
    v.second.push_back(frac(iv.left * x));
  }
  return v;
}

namespace {

std::vector<RootTerm> form_terms(const PhiVector& u, const PhiVector& v) {
  if (u.n() != v.n()) throw std::invalid_argument("phi vectors of different length");
  std::vector<RootTerm> terms;
  terms.reserve(2 * u.n());
  for (std::size_t j = 0; j < u.n(); ++j) {
    terms.push_back({1, u.first[j] - v.first[j]});
    terms.push_back({-1, u.second[j] - v.second[j]});
  }
  return terms;
}

}  // namespace

CyclotomicNumber null_form(const PhiVector& u, const PhiVector& v) { return exactnum::root_sum(form_terms(u, v)); }

bool mutually_null(const PhiVector& u, const PhiVector& v) { return exactnum::root_sum_is_zero(form_terms(u, v)); }

SpanBasis span_rank(const geometry::IntervalUnion& omega, std::span<const Rational> points) {
  SpanBasis basis;
  std::vector<PhiVector> images;
  images.reserve(points.size());
  Order order = 1;
  for (const auto& x : points) {
    images.push_back(phi(omega, x));
    for (const auto& e : images.back().coordinates()) order = exactnum::lcm(order, e.get_den().get_ui());
  }

  // Echelon rows sorted by pivot, each normalized so that its pivot coordinate equals 1.
  struct Row {
    std::size_t pivot;
    std::vector<CyclotomicNumber> values;
  };
  std::vector<Row> rows;
  std::set<std::vector<Rational>> seen;
  const std::size_t width = 2 * omega.size();

  for (std::size_t i = 0; i < points.size() && rows.size() < width; ++i) {
    auto coords = images[i].coordinates();
    if (!seen.insert(coords).second) continue;
    std::vector<CyclotomicNumber> v;
    v.reserve(width);
    for (const auto& e : coords)
      v.push_back(CyclotomicNumber::root_of_unity(order, e.get_num().get_ui() * (order / e.get_den().get_ui())));
    for (const auto& row : rows) {
      if (v[row.pivot].is_zero()) continue;
      const auto f = v[row.pivot];
      for (std::size_t c = row.pivot; c < width; ++c)
        if (!row.values[c].is_zero()) v[c] = v[c] - f * row.values[c];
    }
    std::size_t pivot = 0;
    while (pivot < width && v[pivot].is_zero()) ++pivot;
    if (pivot == width) continue;
    const auto inv = exactnum::cyclo_invert(v[pivot]);
    for (std::size_t c = pivot; c < width; ++c)
      if (!v[c].is_zero()) v[c] = v[c] * inv;
    auto at = std::find_if(rows.begin(), rows.end(), [&](const Row& r) { return r.pivot > pivot; });
    rows.insert(at, Row{pivot, std::move(v)});
    basis.points.push_back(points[i]);
  }
  return basis;
}

Integer detect_period(const geometry::IntervalUnion& omega, const Rational& l1, const Rational& l2) {
  if (phi(omega, l1) != phi(omega, l2))
    throw NotEqualVectors("phi(" + to_string(l1) + ") != phi(" + to_string(l2) + ")");
  Rational d = l1 - l2;
  if (d < 0) d = -d;
  if (d == 0 || !is_integer(d))
    throw NonIntegerPeriod("|" + to_string(l1) + " - " + to_string(l2) + "| = " + to_string(d) +
                           " is not a positive integer");
  return d.get_num();
}

bool membership_test(const geometry::IntervalUnion& omega, const SpanBasis& basis, const Rational& x) {
  if (basis.points.empty()) throw EmptyBasis("membership test needs a nonempty basis");
  const auto px = phi(omega, x);
  for (const auto& y : basis.points)
    if (!mutually_null(px, phi(omega, y))) return false;
  return true;
}

Integer phi_period(const geometry::IntervalUnion& omega) { return omega.common_denominator(); }

}  // namespace spectile::embedding
