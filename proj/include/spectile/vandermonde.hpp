#pragma once

// Generalized Vandermonde determinants
//   R_(j,k,l)(X1,X2,X3) = det [[1,1,1,1],[1,X1^j,X1^k,X1^l],[1,X2^j,..],[1,X3^j,..]],
// their quotients, and their common zeros at roots of unity.

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectile/exactnum.hpp"
#include "spectile/rational.hpp"

namespace spectile::vandermonde {

struct GVExponents {
  std::int64_t j = 1, k = 2, l = 3;

  /// Throws PreconditionViolated unless 0 < j < k < l.
  GVExponents(std::int64_t j, std::int64_t k, std::int64_t l);
  GVExponents() = default;

  /// "j,k,l". Throws ParseError.
  static GVExponents parse(std::string_view text);
  /// Sorts three distinct positive integers.
  static GVExponents sorted(std::int64_t a, std::int64_t b, std::int64_t c);

  std::int64_t g() const;
  std::string to_string() const;
  friend bool operator==(const GVExponents&, const GVExponents&) = default;
  friend auto operator<=>(const GVExponents&, const GVExponents&) = default;
};

/// "j,k,l|j,k,l|...". Throws ParseError, or PreconditionViolated when empty.
std::vector<GVExponents> parse_system(std::string_view text);

using Monomial = std::array<std::uint32_t, 3>;

/// Sparse polynomial in X1, X2, X3 with integer coefficients; no zero terms.
/// Monomials are ordered lexicographically; the leading term is the largest.
class GVPolynomial {
 public:
  GVPolynomial() = default;
  static GVPolynomial constant(const Integer& c);
  static GVPolynomial monomial(const Monomial& m, const Integer& c = 1);

  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Integer& c);

  GVPolynomial operator-() const;
  friend GVPolynomial operator+(const GVPolynomial& a, const GVPolynomial& b);
  friend GVPolynomial operator-(const GVPolynomial& a, const GVPolynomial& b);
  friend GVPolynomial operator*(const GVPolynomial& a, const GVPolynomial& b);
  friend bool operator==(const GVPolynomial&, const GVPolynomial&) = default;

  /// Exchanges X_a and X_b (0-based).
  GVPolynomial swap_variables(int a, int b) const;
  /// P(X1^g, X2^g, X3^g).
  GVPolynomial substitute_power(std::uint32_t g) const;
  /// X_i := value for one variable (0-based); other variables untouched.
  GVPolynomial substitute_constant(int variable, const Integer& value) const;
  /// Identifies X_b with X_a.
  GVPolynomial identify_variables(int a, int b) const;

  /// P(zeta_N^e1, zeta_N^e2, zeta_N^e3) == 0, decided exactly.
  bool vanishes_at(std::uint64_t order, const std::array<std::uint64_t, 3>& exps) const;
  exactnum::CyclotomicNumber evaluate(std::uint64_t order, const std::array<std::uint64_t, 3>& exps) const;

  /// "3*X1^2*X2 - X3 + 1" style text.
  std::string to_string() const;

 private:
  std::map<Monomial, Integer> terms_;
};

/// Exact quotient; throws NotDivisible when the remainder is nonzero.
GVPolynomial exact_divide(const GVPolynomial& dividend, const GVPolynomial& divisor);

GVPolynomial gv_det(const GVExponents& exps);
/// prod_{i<j} (X_j - X_i).
GVPolynomial vandermonde3();

struct SchurPair {
  GVPolynomial s;  // R / prod_{i<j}(X_j - X_i)
  GVPolynomial t;  // R / R_(1,2,3)(X1^g, X2^g, X3^g)
};
SchurPair schur_and_t(const GVExponents& exps);

struct TorusSolutionSet {
  std::uint64_t order = 1;
  std::vector<std::array<std::uint64_t, 3>> solutions;  // lexicographic
  std::uint64_t trivial_count = 0;
  std::uint64_t nontrivial_count = 0;
};

/// Trivial: some coordinate is 0 (X = 1) or two coordinates coincide.
bool is_trivial(const std::array<std::uint64_t, 3>& exps);

/// All (e1,e2,e3) in Z_N^3 at which every R of the system vanishes, by exact
/// evaluation with early exit. The e1 range is split across `jobs` workers.
TorusSolutionSet torus_solutions(std::span<const GVExponents> system, std::uint64_t order, unsigned jobs = 1);

/// Independent path: builds the 4x4 matrix of roots of unity and eliminates
/// over Q(zeta_N).
bool det_vanishes_at(const GVExponents& exps, std::uint64_t order, const std::array<std::uint64_t, 3>& point);

}  // namespace spectile::vandermonde
