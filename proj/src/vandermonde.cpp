#include "spectile/vandermonde.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include "spectile/errors.hpp"

namespace spectile::vandermonde {

GVExponents::GVExponents(std::int64_t j_, std::int64_t k_, std::int64_t l_) : j(j_), k(k_), l(l_) {
  if (!(0 < j && j < k && k < l))
    throw PreconditionViolated("exponents must satisfy 0 < j < k < l: " + to_string());
}

GVExponents GVExponents::parse(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw ParseError("expected j,k,l: '" + std::string(text) + "'");
  std::array<std::int64_t, 3> v{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto r = parse_rational(parts[i]);
    if (!is_integer(r)) throw ParseError("exponent is not an integer: '" + std::string(trim(parts[i])) + "'");
    v[i] = to_int64(r.get_num());
  }
  return {v[0], v[1], v[2]};
}

GVExponents GVExponents::sorted(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::array<std::int64_t, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

std::int64_t GVExponents::g() const { return std::gcd(std::gcd(j, k), l); }

std::string GVExponents::to_string() const {
  return std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l);
}

std::vector<GVExponents> parse_system(std::string_view text) {
  std::vector<GVExponents> out;
  for (auto part : split(text, '|'))
    if (!trim(part).empty()) out.push_back(GVExponents::parse(part));
  if (out.empty()) throw PreconditionViolated("empty system");
  return out;
}

// --- GVPolynomial ---------------------------------------------------------------

GVPolynomial GVPolynomial::constant(const Integer& c) { return monomial({0, 0, 0}, c); }

GVPolynomial GVPolynomial::monomial(const Monomial& m, const Integer& c) {
  GVPolynomial p;
  p.add_term(m, c);
  return p;
}

bool GVPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0, 0});
}

void GVPolynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GVPolynomial GVPolynomial::operator-() const {
  GVPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

GVPolynomial operator+(const GVPolynomial& a, const GVPolynomial& b) {
  GVPolynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

GVPolynomial operator-(const GVPolynomial& a, const GVPolynomial& b) { return a + (-b); }

GVPolynomial operator*(const GVPolynomial& a, const GVPolynomial& b) {
  GVPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
  return out;
}

GVPolynomial GVPolynomial::swap_variables(int a, int b) const {
  GVPolynomial out;
  for (const auto& [key, c] : terms_) {
    Monomial m = key;
    std::swap(m[a], m[b]);
    out.add_term(m, c);
  }
  return out;
}

GVPolynomial GVPolynomial::substitute_power(std::uint32_t g) const {
  GVPolynomial out;
  for (const auto& [m, c] : terms_) out.add_term({m[0] * g, m[1] * g, m[2] * g}, c);
  return out;
}

GVPolynomial GVPolynomial::substitute_constant(int variable, const Integer& value) const {
  GVPolynomial out;
  for (const auto& [key, c] : terms_) {
    Monomial m = key;
    Integer factor;
    mpz_pow_ui(factor.get_mpz_t(), value.get_mpz_t(), m[variable]);
    m[variable] = 0;
    out.add_term(m, c * factor);
  }
  return out;
}

GVPolynomial GVPolynomial::identify_variables(int a, int b) const {
  GVPolynomial out;
  for (const auto& [key, c] : terms_) {
    Monomial m = key;
    m[a] += m[b];
    m[b] = 0;
    out.add_term(m, c);
  }
  return out;
}

exactnum::CyclotomicNumber GVPolynomial::evaluate(std::uint64_t order, const std::array<std::uint64_t, 3>& e) const {
  std::vector<Rational> poly(order);
  for (const auto& [m, c] : terms_) {
    const std::uint64_t power = (m[0] * e[0] + m[1] * e[1] + m[2] * e[2]) % order;
    poly[power] += Rational(c);
  }
  return exactnum::CyclotomicNumber::from_polynomial(order, std::move(poly));
}

bool GVPolynomial::vanishes_at(std::uint64_t order, const std::array<std::uint64_t, 3>& e) const {
  exactnum::RootSumAccumulator acc(order);
  for (const auto& [m, c] : terms_) {
    if (!c.fits_slong_p()) return evaluate(order, e).is_zero();
    acc.add(c.get_si(), (m[0] * e[0] + m[1] * e[1] + m[2] * e[2]) % order);
  }
  return acc.is_zero();
}

std::string GVPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    const bool unit = m == Monomial{0, 0, 0};
    if (mag != 1 || unit) os << mag.get_str();
    bool need_star = mag != 1;
    for (int v = 0; v < 3; ++v) {
      if (m[v] == 0) continue;
      if (need_star) os << '*';
      os << 'X' << v + 1;
      if (m[v] > 1) os << '^' << m[v];
      need_star = true;
    }
  }
  return os.str();
}

GVPolynomial exact_divide(const GVPolynomial& dividend, const GVPolynomial& divisor) {
  if (divisor.is_zero()) throw NotDivisible("division by the zero polynomial");
  const auto& [lead_m, lead_c] = *divisor.terms().rbegin();
  GVPolynomial rest = dividend, quotient;
  while (!rest.is_zero()) {
    const auto& [m, c] = *rest.terms().rbegin();
    Monomial q{};
    for (int v = 0; v < 3; ++v) {
      if (m[v] < lead_m[v]) throw NotDivisible("leading monomial not divisible; remainder is nonzero");
      q[v] = m[v] - lead_m[v];
    }
    if (!mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t()))
      throw NotDivisible("leading coefficient not divisible; remainder is nonzero");
    const auto term = GVPolynomial::monomial(q, c / lead_c);
    quotient = quotient + term;
    rest = rest - term * divisor;
  }
  return quotient;
}

GVPolynomial gv_det(const GVExponents& exps) {
  const std::array<std::uint32_t, 4> column{0, static_cast<std::uint32_t>(exps.j), static_cast<std::uint32_t>(exps.k),
                                            static_cast<std::uint32_t>(exps.l)};
  std::array<int, 4> perm{0, 1, 2, 3};
  GVPolynomial out;
  do {
    int inversions = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) inversions += perm[a] > perm[b];
    // Row 0 is all ones; row i contributes X_i^{column[perm[i]]}.
    out.add_term({column[perm[1]], column[perm[2]], column[perm[3]]}, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

GVPolynomial vandermonde3() {
  auto x = [](int v) {
    Monomial m{0, 0, 0};
    m[v] = 1;
    return GVPolynomial::monomial(m);
  };
  return (x(1) - x(0)) * (x(2) - x(0)) * (x(2) - x(1));
}

SchurPair schur_and_t(const GVExponents& exps) {
  const auto r = gv_det(exps);
  SchurPair out;
  out.s = exact_divide(r, vandermonde3());
  const auto v_g = gv_det({1, 2, 3}).substitute_power(static_cast<std::uint32_t>(exps.g()));
  out.t = exact_divide(r, v_g);
  if (out.s * vandermonde3() != r || out.t * v_g != r) throw NotDivisible("quotient does not reproduce R");
  return out;
}

// --- torus solutions ------------------------------------------------------------

bool is_trivial(const std::array<std::uint64_t, 3>& e) {
  return e[0] == 0 || e[1] == 0 || e[2] == 0 || e[0] == e[1] || e[0] == e[2] || e[1] == e[2];
}

namespace {

struct CompiledTerm {
  std::int64_t coeff;
  std::array<std::uint64_t, 3> exps;  // reduced mod N
};

std::vector<std::array<std::uint64_t, 3>> solve_range(const std::vector<std::vector<CompiledTerm>>& system,
                                                      std::uint64_t order, std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::array<std::uint64_t, 3>> out;
  exactnum::RootSumAccumulator acc(order);
  for (std::uint64_t e1 = lo; e1 < hi; ++e1)
    for (std::uint64_t e2 = 0; e2 < order; ++e2)
      for (std::uint64_t e3 = 0; e3 < order; ++e3) {
        bool all = true;
        for (const auto& poly : system) {
          acc.clear();
          for (const auto& t : poly) acc.add(t.coeff, (t.exps[0] * e1 + t.exps[1] * e2 + t.exps[2] * e3) % order);
          if (!acc.is_zero()) {
            all = false;
            break;
          }
        }
        if (all) out.push_back({e1, e2, e3});
      }
  return out;
}

}  // namespace

TorusSolutionSet torus_solutions(std::span<const GVExponents> system, std::uint64_t order, unsigned jobs) {
  if (system.empty()) throw PreconditionViolated("empty system");
  if (order == 0) throw PreconditionViolated("order must be positive");
  if (order > exactnum::kMaxOrder) throw LimitExceeded("torus order too large");
  std::vector<std::vector<CompiledTerm>> compiled;
  for (const auto& exps : system) {
    std::vector<CompiledTerm> terms;
    const auto r = gv_det(exps);
    for (const auto& [m, c] : r.terms())
      terms.push_back({c.get_si(), {m[0] % order, m[1] % order, m[2] % order}});
    compiled.push_back(std::move(terms));
  }
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(order)));
  std::vector<std::vector<std::array<std::uint64_t, 3>>> parts(jobs);
  if (jobs == 1) {
    parts[0] = solve_range(compiled, order, 0, order);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      const std::uint64_t lo = order * w / jobs, hi = order * (w + 1) / jobs;
      workers.emplace_back([&, w, lo, hi] { parts[w] = solve_range(compiled, order, lo, hi); });
    }
    for (auto& t : workers) t.join();
  }
  TorusSolutionSet out;
  out.order = order;
  for (auto& part : parts) out.solutions.insert(out.solutions.end(), part.begin(), part.end());
  for (const auto& s : out.solutions) (is_trivial(s) ? out.trivial_count : out.nontrivial_count)++;
  return out;
}

bool det_vanishes_at(const GVExponents& exps, std::uint64_t order, const std::array<std::uint64_t, 3>& point) {
  using exactnum::CyclotomicNumber;
  const std::array<std::uint64_t, 4> column{0, static_cast<std::uint64_t>(exps.j), static_cast<std::uint64_t>(exps.k),
                                            static_cast<std::uint64_t>(exps.l)};
  std::vector<std::vector<CyclotomicNumber>> m(4, std::vector<CyclotomicNumber>(4));
  for (int c = 0; c < 4; ++c) m[0][c] = CyclotomicNumber::root_of_unity(order, 0);
  for (int r = 1; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = CyclotomicNumber::root_of_unity(order, (point[r - 1] * column[c]) % order);
  // Singular iff elimination runs out of pivots.
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    while (pivot < 4 && m[pivot][col].is_zero()) ++pivot;
    if (pivot == 4) return true;
    std::swap(m[pivot], m[col]);
    const auto inv = exactnum::cyclo_invert(m[col][col]);
    for (int r = col + 1; r < 4; ++r) {
      if (m[r][col].is_zero()) continue;
      const auto f = m[r][col] * inv;
      for (int c = col; c < 4; ++c) m[r][c] = m[r][c] - f * m[col][c];
    }
  }
  return false;
}

}  // namespace spectile::vandermonde
