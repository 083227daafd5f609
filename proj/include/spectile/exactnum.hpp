#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element of Q(zeta_N) is stored as its canonical representative modulo the
// N-th cyclotomic polynomial: a rational polynomial of degree < phi(N) in
// zeta_N. Zero testing is therefore a coefficient test, never a numeric one.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "spectile/rational.hpp"

namespace spectile::exactnum {

using Order = std::uint64_t;

/// Orders above this are rejected with LimitExceeded.
inline constexpr Order kMaxOrder = 1u << 17;

/// The N-th cyclotomic polynomial, coefficients low degree first (monic).
struct CycloPoly {
  Order order = 1;
  std::vector<Integer> coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
};

/// Phi_N by exact division of x^N - 1 by the product of Phi_d over the proper
/// divisors d of N. Results are memoized; the function is thread-safe.
CycloPoly cyclotomic_poly(Order n);

Order euler_phi(Order n);
std::vector<Order> divisors(Order n);
Order lcm(Order a, Order b);

/// coeff * e^{2 pi i exponent}.
struct RootTerm {
  Rational coeff;
  Rational exponent;
};

class CyclotomicNumber {
 public:
  /// Zero, in Q = Q(zeta_1).
  CyclotomicNumber();

  static CyclotomicNumber from_rational(const Rational& value, Order order = 1);
  /// Reduces an arbitrary polynomial in zeta_N (low degree first).
  static CyclotomicNumber from_polynomial(Order order, std::vector<Rational> poly);
  /// zeta_N^power.
  static CyclotomicNumber root_of_unity(Order order, std::uint64_t power);
  /// e^{2 pi i exponent} for a rational exponent; order = den(exponent mod 1).
  static CyclotomicNumber root_of_unity(const Rational& exponent);

  Order order() const { return order_; }
  /// Canonical coefficients, length phi(order).
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  /// Same value viewed in Q(zeta_M); M must be a multiple of order().
  CyclotomicNumber lift(Order multiple) const;
  /// Same value in Q(zeta_M) for a divisor M of order(), if it lies there.
  std::optional<CyclotomicNumber> descend(Order divisor) const;

  CyclotomicNumber conj() const;
  std::complex<double> to_complex() const;

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  /// Values of different orders compare equal when equal after lifting to the lcm order.
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z);

 private:
  CyclotomicNumber(Order order, std::vector<Rational> coeffs);

  Order order_;
  std::vector<Rational> coeffs_;
};

/// Canonical form of sum_k c_k e^{2 pi i theta_k}. The field order is the lcm
/// of the exponent denominators.
CyclotomicNumber root_sum(std::span<const RootTerm> terms);

/// Exact zero test of sum_k c_k e^{2 pi i theta_k} without building the value.
bool root_sum_is_zero(std::span<const RootTerm> terms);

/// Multiplicative inverse via the extended Euclidean algorithm against Phi_N.
/// Throws ZeroInversion for z = 0.
CyclotomicNumber cyclo_invert(const CyclotomicNumber& z);

/// Scratch accumulator for integer combinations of N-th roots of unity; used by
/// the hot loops (orthogonality sweeps, torus enumeration). Not thread-safe:
/// give each worker its own instance.
class RootSumAccumulator {
 public:
  explicit RootSumAccumulator(Order order);

  Order order() const { return order_; }
  void clear();
  /// Adds coeff * zeta_N^power (power taken mod N).
  void add(std::int64_t coeff, std::uint64_t power);
  /// Exact: reduces modulo Phi_N. Falls back to big integers on overflow.
  bool is_zero() const;
  CyclotomicNumber value() const;

 private:
  Order order_;
  std::vector<std::int64_t> bins_;
  mutable std::vector<std::int64_t> scratch_;
};

}  // namespace spectile::exactnum
