#include "spectile/geometry.hpp"

#include <algorithm>

#include "spectile/errors.hpp"
#include "spectile/exactnum.hpp"

namespace spectile::geometry {

IntervalUnion::IntervalUnion(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw InvalidGeometry("empty interval union");
  std::stable_sort(intervals_.begin(), intervals_.end(),
                   [](const Interval& a, const Interval& b) { return a.left < b.left; });
  Rational measure = 0;
  for (std::size_t j = 0; j < intervals_.size(); ++j) {
    const auto& iv = intervals_[j];
    if (iv.length <= 0)
      throw InvalidGeometry("zero length: interval " + std::to_string(j + 1) + " has length " +
                            spectile::to_string(iv.length));
    if (j > 0 && intervals_[j - 1].right() > iv.left)
      throw InvalidGeometry("overlap: [" + spectile::to_string(intervals_[j - 1].left) + "," +
                            spectile::to_string(intervals_[j - 1].right()) + ") meets [" +
                            spectile::to_string(iv.left) + "," + spectile::to_string(iv.right()) + ")");
    measure += iv.length;
  }
  if (intervals_.front().left != 0)
    throw InvalidGeometry("first left endpoint must be 0, got " + spectile::to_string(intervals_.front().left));
  if (measure != 1) throw InvalidGeometry("total measure must be 1, got " + spectile::to_string(measure));
}

std::vector<Rational> IntervalUnion::endpoints() const {
  std::vector<Rational> out;
  out.reserve(2 * intervals_.size());
  for (const auto& iv : intervals_) {
    out.push_back(iv.left);
    out.push_back(iv.right());
  }
  return out;
}

Integer IntervalUnion::common_denominator() const { return spectile::common_denominator(endpoints()); }

std::string IntervalUnion::to_string() const {
  std::string out;
  for (const auto& iv : intervals_) {
    if (!out.empty()) out += ';';
    out += spectile::to_string(iv.left) + "," + spectile::to_string(iv.length);
  }
  return out;
}

IntervalUnion parse_interval_union(std::string_view text) {
  std::vector<Interval> intervals;
  for (auto part : split(text, ';')) {
    const auto fields = split(part, ',');
    if (fields.size() != 2)
      throw ParseError("expected 'left,length' but got '" + std::string(trim(part)) + "'");
    intervals.push_back({parse_rational(fields[0]), parse_rational(fields[1])});
  }
  return IntervalUnion(std::move(intervals));
}

CellDecomposition cell_decomposition(const IntervalUnion& omega) {
  CellDecomposition out;
  out.denominator = to_int64(omega.common_denominator());
  const Integer q = out.denominator;
  for (const auto& iv : omega.intervals()) {
    const Rational lo = iv.left * q;
    const Rational hi = iv.right() * q;
    for (std::int64_t c = to_int64(lo.get_num()); c < to_int64(hi.get_num()); ++c) out.cells.push_back(c);
  }
  return out;
}

IntervalUnion from_cells(std::int64_t denominator, const std::vector<std::int64_t>& cells) {
  std::vector<Interval> intervals;
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i + 1;
    while (j < cells.size() && cells[j] == cells[j - 1] + 1) ++j;
    intervals.push_back({make_rational(cells[i], denominator),
                         make_rational(static_cast<std::int64_t>(j - i), denominator)});
    i = j;
  }
  return IntervalUnion(std::move(intervals));
}

IntervalUnion CellDecomposition::to_interval_union() const { return from_cells(denominator, cells); }

bool ft_is_zero(const IntervalUnion& omega, const Rational& xi) {
  if (xi == 0) throw ZeroFrequency("chi^ at 0 equals the measure; the test needs xi != 0");
  std::vector<exactnum::RootTerm> terms;
  terms.reserve(2 * omega.size());
  for (const auto& iv : omega.intervals()) {
    terms.push_back({1, xi * iv.right()});
    terms.push_back({-1, xi * iv.left});
  }
  return exactnum::root_sum_is_zero(terms);
}

}  // namespace spectile::geometry
