#pragma once

// The map phi_Omega : R -> T^n x T^n, x -> (e(x(a_j + r_j)))_j ; (e(x a_j))_j,
// the conjugate-linear form (v1, v2) . (w1, w2) = <v1, w1> - <v2, w2>, and
// exact rank computations on the span of phi-images.

#include <span>
#include <vector>

#include "spectile/exactnum.hpp"
#include "spectile/geometry.hpp"

namespace spectile::embedding {

/// A point of T^n x T^n stored as exponents in [0, 1) of e(t) = e^{2 pi i t}.
struct PhiVector {
  std::vector<Rational> first;   // right endpoints
  std::vector<Rational> second;  // left endpoints; second[0] is always 0

  std::size_t n() const { return first.size(); }
  /// All 2n coordinates as one sequence (first block, then second).
  std::vector<Rational> coordinates() const;
  friend bool operator==(const PhiVector&, const PhiVector&) = default;
};

PhiVector phi(const geometry::IntervalUnion& omega, const Rational& x);

/// u . v = sum_j e(u1_j - v1_j) - sum_j e(u2_j - v2_j), exactly.
exactnum::CyclotomicNumber null_form(const PhiVector& u, const PhiVector& v);
/// null_form(u, v) == 0 without materializing the value.
bool mutually_null(const PhiVector& u, const PhiVector& v);

/// Greedy basis of span{phi(x) : x in points}: a point is kept when its image
/// is independent of the images of the points kept before it.
struct SpanBasis {
  std::vector<Rational> points;

  std::size_t rank() const { return points.size(); }
};

/// Exact Gaussian elimination over Q(zeta_M), M the lcm of all exponent
/// denominators, pivoting on the first nonzero coordinate.
SpanBasis span_rank(const geometry::IntervalUnion& omega, std::span<const Rational> points);

/// |l1 - l2| after checking phi(l1) = phi(l2) (NotEqualVectors) and that the
/// difference is a positive integer (NonIntegerPeriod).
Integer detect_period(const geometry::IntervalUnion& omega, const Rational& l1, const Rational& l2);

/// x in Lambda iff phi(x) is null against phi(y) for every basis point y.
/// Throws EmptyBasis.
bool membership_test(const geometry::IntervalUnion& omega, const SpanBasis& basis, const Rational& x);

/// Smallest positive p with phi(x + p) = phi(x) for all x: the lcm of the
/// endpoint denominators.
Integer phi_period(const geometry::IntervalUnion& omega);

}  // namespace spectile::embedding
