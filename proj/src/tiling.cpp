#include "spectile/tiling.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "spectile/errors.hpp"
#include "spectile/exactnum.hpp"

namespace spectile::classify {

bool TilingCertificate::verify() const {
  if (period <= 0 || cells.empty() || complement.empty()) return false;
  if (static_cast<std::int64_t>(cells.size() * complement.size()) != period) return false;
  std::vector<char> hit(static_cast<std::size_t>(period), 0);
  for (auto a : cells)
    for (auto b : complement) {
      const auto r = static_cast<std::size_t>(((a + b) % period + period) % period);
      if (hit[r]++) return false;
    }
  return true;
}

std::vector<Rational> TilingCertificate::real_translates() const {
  std::vector<Rational> out;
  for (auto b : complement) out.push_back(make_rational(b, cell_denominator));
  return out;
}

Rational TilingCertificate::real_period() const { return make_rational(period, cell_denominator); }

namespace {

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

// Drops the lowest `n` bits.
void shift_down(Bits& b, std::size_t n) {
  const std::size_t words = n / 64, bits = n % 64;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::size_t src = i + words;
    std::uint64_t lo = src < b.size() ? b[src] : 0;
    std::uint64_t hi = src + 1 < b.size() ? b[src + 1] : 0;
    b[i] = bits ? (lo >> bits) | (hi << (64 - bits)) : lo;
  }
}

TilingCertificate make_certificate(std::span<const std::int64_t> cells, std::int64_t q, std::int64_t period,
                                   std::vector<std::int64_t> complement) {
  TilingCertificate cert;
  cert.cell_denominator = q;
  cert.period = period;
  cert.cells.assign(cells.begin(), cells.end());
  for (auto& b : complement) b = ((b % period) + period) % period;
  std::sort(complement.begin(), complement.end());
  cert.complement = std::move(complement);
  if (!cert.verify()) throw InvariantViolation("tiling certificate does not partition Z_P");
  return cert;
}

}  // namespace

GreedyOutcome forced_greedy(std::span<const std::int64_t> cells, std::int64_t q, std::int64_t p_max,
                     std::optional<TilingCertificate>& out) {
  const auto span = static_cast<std::size_t>(cells.back() + 1);
  Bits state((span + 63) / 64, 0);  // bit i: position x + i already covered
  std::map<Bits, std::size_t> seen;  // state -> index into `placed`
  std::vector<std::int64_t> placed;
  std::int64_t x = 0;
  while (x <= p_max) {
    if (auto [it, fresh] = seen.emplace(state, placed.size()); !fresh) {
      const std::int64_t start = placed[it->second];
      std::vector<std::int64_t> complement;
      for (std::size_t i = it->second; i < placed.size(); ++i) complement.push_back(placed[i] - start);
      out = make_certificate(cells, q, x - start, std::move(complement));
      return GreedyOutcome::Cycle;
    }
    for (auto a : cells) {
      if (test(state, static_cast<std::size_t>(a))) return GreedyOutcome::Conflict;
      set(state, static_cast<std::size_t>(a));
    }
    placed.push_back(x);
    std::size_t step = 0;
    while (step < span && test(state, step)) ++step;
    shift_down(state, step);
    x += static_cast<std::int64_t>(step);
  }
  return GreedyOutcome::Exhausted;
}

// --- Coven-Meyerowitz -------------------------------------------------------

namespace {

struct PrimePower {
  std::uint64_t prime;
  std::uint64_t value;
};

bool mask_vanishes(std::span<const std::int64_t> cells, exactnum::Order order) {
  exactnum::RootSumAccumulator acc(order);
  for (auto c : cells) acc.add(1, static_cast<std::uint64_t>(c) % order);
  return acc.is_zero();
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) { return n >= 2 && prime_factors(n) == std::vector<std::uint64_t>{n}; }

using IntPoly = std::vector<std::int64_t>;

IntPoly poly_mul_mod(const IntPoly& a, const IntPoly& b, std::size_t modulus) {
  IntPoly out(modulus, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j]) out[(i + j) % modulus] += a[i] * b[j];
  }
  return out;
}

}  // namespace

CmVerdict coven_meyerowitz(std::span<const std::int64_t> cells, std::int64_t q) {
  const auto size = static_cast<std::uint64_t>(cells.size());
  const auto degree = static_cast<std::uint64_t>(cells.back());
  // S_A: prime powers s with Phi_s | A(x); phi(s) <= deg A is necessary.
  std::vector<PrimePower> s_a;
  for (std::uint64_t p = 2; p <= degree + 1; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t s = p; (s / p) * (p - 1) <= degree; s *= p)
      if (mask_vanishes(cells, s)) s_a.push_back({p, s});
  }
  std::uint64_t product = 1;
  for (const auto& s : s_a) product *= s.prime;
  if (product != size) return {CmVerdict::Kind::NotTiling, std::nullopt, "T1 fails"};

  // T2 over every choice of at most one power per prime (two or more primes).
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_prime;
  for (const auto& s : s_a) by_prime[s.prime].push_back(s.value);
  std::vector<std::vector<std::uint64_t>> groups;
  for (auto& [p, v] : by_prime) groups.push_back(v);
  bool t2 = true;
  std::vector<std::size_t> choice(groups.size(), 0);  // 0 = skip, i + 1 = groups[g][i]
  while (t2) {
    std::uint64_t m = 1;
    std::size_t picked = 0;
    for (std::size_t g = 0; g < groups.size(); ++g)
      if (choice[g]) {
        m *= groups[g][choice[g] - 1];
        ++picked;
      }
    if (picked >= 2) {
      if (m > exactnum::kMaxOrder) return {CmVerdict::Kind::Undecided, std::nullopt, "T2 order too large"};
      t2 = mask_vanishes(cells, m);
    }
    std::size_t g = 0;
    while (g < groups.size() && ++choice[g] > groups[g].size()) choice[g++] = 0;
    if (g == groups.size()) break;
  }
  if (!t2) {
    if (prime_factors(size).size() <= 2) return {CmVerdict::Kind::NotTiling, std::nullopt, "T2 fails"};
    return {CmVerdict::Kind::Undecided, std::nullopt, "T2 fails with three or more primes"};
  }

  // B(x) = prod Phi_s(x^{t(s)}) over prime powers s | L not in S_A, with t(s)
  // the largest divisor of L coprime to s; then A (+) B = Z_L.
  std::uint64_t l = 1;
  for (const auto& s : s_a) l = std::lcm(l, s.value);
  if (l > static_cast<std::uint64_t>(std::int64_t{1} << 24))
    return {CmVerdict::Kind::Undecided, std::nullopt, "tiling period too large"};
  IntPoly b{1};
  for (auto p : prime_factors(l)) {
    std::uint64_t pk = 1, t = l;
    while (t % p == 0) t /= p;
    while (l % (pk * p) == 0) {
      pk *= p;
      const bool in_s_a = std::any_of(s_a.begin(), s_a.end(), [&](const PrimePower& s) { return s.value == pk; });
      if (in_s_a) continue;
      const auto phi = exactnum::cyclotomic_poly(pk);
      IntPoly factor(phi.degree() * t + 1, 0);
      for (std::size_t j = 0; j < phi.coeffs.size(); ++j) factor[j * t] = phi.coeffs[j].get_si();
      b = poly_mul_mod(b, factor, l);
    }
  }
  b.resize(l, 0);
  std::vector<std::int64_t> complement;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 1)
      complement.push_back(static_cast<std::int64_t>(i));
    else if (b[i] != 0)
      return {CmVerdict::Kind::Undecided, std::nullopt, "complement polynomial is not 0/1"};
  }
  TilingCertificate cert;
  cert.cell_denominator = q;
  cert.period = static_cast<std::int64_t>(l);
  cert.cells.assign(cells.begin(), cells.end());
  cert.complement = std::move(complement);
  if (!cert.verify()) return {CmVerdict::Kind::Undecided, std::nullopt, "constructed complement fails"};
  return {CmVerdict::Kind::Tiles, std::move(cert), ""};
}

// --- exhaustive state search --------------------------------------------------

// Each state (positions x+1 .. x+span-1 already covered, x uncovered) has at
// most one successor, so tilings of Z are exactly the cycles of this map.
std::optional<TilingCertificate> state_search(std::span<const std::int64_t> cells, std::int64_t q) {
  if (cells.back() + 1 > 40) throw LimitExceeded("state search span too large");
  const auto span = static_cast<unsigned>(cells.back() + 1);
  const unsigned width = span - 1;
  std::uint64_t mask_a = 0;
  for (auto c : cells)
    if (c > 0) mask_a |= std::uint64_t{1} << (c - 1);
  const std::uint64_t count = std::uint64_t{1} << width;
  // 0 = unvisited, 1 = on the current path, 2 = resolved.
  std::vector<std::uint8_t> color(count, 0);
  auto successor = [&](std::uint64_t s, std::int64_t& step) -> std::optional<std::uint64_t> {
    if (s & mask_a) return std::nullopt;
    std::uint64_t covered = s | mask_a;  // bit i: position x + 1 + i
    step = 1;
    while (covered & 1u) {
      covered >>= 1;
      ++step;
    }
    return covered >> 1;
  };
  std::vector<std::uint64_t> path;
  for (std::uint64_t start = 0; start < count; ++start) {
    if (color[start]) continue;
    path.clear();
    std::optional<std::uint64_t> s = start;
    while (s && color[*s] == 0) {
      color[*s] = 1;
      path.push_back(*s);
      std::int64_t step = 0;
      s = successor(*s, step);
    }
    if (s && color[*s] == 1) {
      // Found a cycle starting at *s.
      std::vector<std::int64_t> complement;
      std::int64_t x = 0;
      std::uint64_t cur = *s;
      do {
        complement.push_back(x);
        std::int64_t step = 0;
        cur = *successor(cur, step);
        x += step;
      } while (cur != *s);
      return make_certificate(cells, q, x, std::move(complement));
    }
    for (auto p : path) color[p] = 2;
  }
  return std::nullopt;
}

TilingDecision tile_cells(std::span<const std::int64_t> cells, std::int64_t cell_denominator,
                          const TilingOptions& options) {
  if (cells.empty() || cells.front() != 0 || !std::is_sorted(cells.begin(), cells.end()) ||
      std::adjacent_find(cells.begin(), cells.end()) != cells.end())
    throw std::invalid_argument("cells must be sorted, distinct and start at 0");
  TilingDecision decision;
  std::optional<TilingCertificate> cert;
  const auto outcome = forced_greedy(cells, cell_denominator, options.p_max, cert);
  if (outcome == GreedyOutcome::Cycle) {
    decision.certificate = std::move(cert);
    decision.method = "greedy";
    return decision;
  }
  auto cm = coven_meyerowitz(cells, cell_denominator);
  if (cm.kind != CmVerdict::Kind::Undecided) {
    decision.method = "coven-meyerowitz";
    decision.certificate = std::move(cm.certificate);
    decision.reason = cm.reason;
    return decision;
  }
  if (cells.back() + 1 > options.state_search_span)
    throw LimitExceeded("tiling undecided: " + cm.reason + "; span " + std::to_string(cells.back() + 1) +
                        " exceeds the state-search limit");
  decision.method = "state-search";
  decision.certificate = state_search(cells, cell_denominator);
  if (!decision.certificate) decision.reason = "no cycle in the coverage-state map";
  return decision;
}

TilingDecision tiles_decision(const geometry::IntervalUnion& omega, const TilingOptions& options) {
  const auto cd = geometry::cell_decomposition(omega);
  return tile_cells(cd.cells, cd.denominator, options);
}

}  // namespace spectile::classify
