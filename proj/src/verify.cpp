#include "spectile/verify.hpp"

#include <cfloat>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "spectile/errors.hpp"
#include "spectile/exactnum.hpp"

namespace spectile::classify {

std::int64_t orthogonality_cycle(const geometry::IntervalUnion& omega, std::int64_t period) {
  Integer cycle = 1;
  const Rational d = period;
  for (const auto& e : omega.endpoints()) {
    const Rational de = d * e;
    mpz_lcm(cycle.get_mpz_t(), cycle.get_mpz_t(), de.get_den_mpz_t());
  }
  return to_int64(cycle);
}

bool verify_orthogonality(const geometry::IntervalUnion& omega, const PeriodicSpectrum& lambda) {
  const std::int64_t d = lambda.period();
  const std::int64_t cycle = orthogonality_cycle(omega, d);
  // The lattice part dZ \ {0}; k = cycle repeats the k = 0 pattern, which vanishes trivially.
  for (std::int64_t k = 1; k < cycle; ++k)
    if (!geometry::ft_is_zero(omega, Rational{k * d})) return false;
  // chi^(-xi) is the conjugate of chi^(xi), so ordered pairs i < j cover i != j
  // once k runs over a full cycle.
  const auto& res = lambda.residues();
  for (std::size_t i = 0; i < res.size(); ++i)
    for (std::size_t j = i + 1; j < res.size(); ++j) {
      const Rational delta = res[j] - res[i];
      for (std::int64_t k = 0; k < cycle; ++k)
        if (!geometry::ft_is_zero(omega, delta + k * d)) return false;
    }
  return true;
}

std::string Completeness::to_string() const {
  switch (kind) {
    case Kind::Complete:
      return "Complete";
    case Kind::Incomplete:
      return "Incomplete";
    case Kind::NumericCertified:
      return "NumericCertified";
  }
  return "?";
}

namespace {

Completeness hadamard(const std::vector<std::int64_t>& cells, std::int64_t grid, const PeriodicSpectrum& lifted) {
  // Rows h_i = (e(lambda_i c / M))_c; the diagonal of H H* is M automatically.
  const auto& res = lifted.residues();
  for (std::size_t i = 0; i < res.size(); ++i)
    for (std::size_t j = i + 1; j < res.size(); ++j) {
      const Rational delta = (res[i] - res[j]) / grid;
      std::vector<exactnum::RootTerm> terms;
      terms.reserve(cells.size());
      for (auto c : cells) terms.push_back({1, delta * c});
      if (!exactnum::root_sum_is_zero(terms)) return {Completeness::Kind::Incomplete, 0, "hadamard"};
    }
  return {Completeness::Kind::Complete, 0, "hadamard"};
}

// Parseval for f = sum_c alpha_c 1_{cell c}: sum_lambda |<f, e_lambda>|^2 equals
// sum_i |(H^* alpha)_i|^2 w_i with w_i = sum_k |g^(lambda_i + M k)|^2, g the
// indicator of [0, 1/M). Completeness holds iff the Gram matrix
// G = H^* diag(w) H equals I / M; the bound covers truncation and rounding.
Completeness parseval(const std::vector<std::int64_t>& cells, std::int64_t grid, const PeriodicSpectrum& lifted,
                      std::int64_t truncation) {
  const auto m = static_cast<std::size_t>(grid);
  const double md = static_cast<double>(grid);
  const auto kt = std::max<std::int64_t>(truncation, 2);
  const auto& res = lifted.residues();

  std::vector<double> weight(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double x = res[i].get_d();
    const double s = std::sin(std::numbers::pi * x / md);
    double sum = 0;
    if (x == 0) {
      sum = 1.0 / (md * md);
    } else {
      for (std::int64_t k = -kt; k <= kt; ++k) {
        const double f = x + md * static_cast<double>(k);
        sum += s * s / (std::numbers::pi * std::numbers::pi * f * f);
      }
    }
    weight[i] = sum;
  }
  std::vector<std::vector<std::complex<double>>> h(m, std::vector<std::complex<double>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < m; ++c) {
      const Rational t = frac(res[i] * cells[c] / grid);
      h[i][c] = std::polar(1.0, 2 * std::numbers::pi * t.get_d());
    }

  double defect = 0;
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t c2 = c; c2 < m; ++c2) {
      std::complex<double> g = 0;
      for (std::size_t i = 0; i < m; ++i) g += std::conj(h[i][c]) * h[i][c2] * weight[i];
      const double target = c == c2 ? 1.0 / md : 0.0;
      defect = std::max(defect, std::abs(g - target) * md);
    }
  // Tail: sum_{|k| > K} 1/(x + M k)^2 <= (2 / M^2) / (K - 1) per row, at most M
  // rows, times sin^2 / pi^2 <= 1 / pi^2, rescaled by M.
  const double tail = md * md * 2.0 / (std::numbers::pi * std::numbers::pi * md * md * static_cast<double>(kt - 1));
  const double rounding = 64.0 * DBL_EPSILON * (md + 2.0 * static_cast<double>(kt));
  const double bound = tail + rounding;
  if (defect > bound) return {Completeness::Kind::Incomplete, bound, "parseval"};
  return {Completeness::Kind::NumericCertified, bound, "parseval"};
}

}  // namespace

Completeness verify_completeness(const geometry::IntervalUnion& omega, const PeriodicSpectrum& lambda,
                                 const CompletenessOptions& options) {
  if (!verify_orthogonality(omega, lambda))
    throw PreconditionViolated("completeness needs an orthogonal spectrum");
  const auto cells = geometry::cell_decomposition(omega);
  const std::int64_t grid = std::lcm(cells.denominator, lambda.period());
  // Refine the cells to the grid 1/M.
  const std::int64_t split = grid / cells.denominator;
  std::vector<std::int64_t> fine;
  fine.reserve(static_cast<std::size_t>(grid));
  for (auto c : cells.cells)
    for (std::int64_t s = 0; s < split; ++s) fine.push_back(c * split + s);
  const auto lifted = lambda.with_period(grid);
  if (!options.force_numeric && grid <= options.exact_max_order) return hadamard(fine, grid, lifted);
  return parseval(fine, grid, lifted, options.truncation);
}

}  // namespace spectile::classify
