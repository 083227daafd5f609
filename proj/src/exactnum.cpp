#include "spectile/exactnum.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <string>

#include "spectile/errors.hpp"

namespace spectile::exactnum {

namespace {

struct CycloData {
  CycloPoly poly;
  // (index, coefficient) for the nonzero non-leading coefficients.
  std::vector<std::pair<std::size_t, Integer>> tail;
  std::vector<std::pair<std::size_t, std::int64_t>> tail64;
  bool fits64 = true;
};

using Poly = std::vector<Rational>;
using IntPoly = std::vector<Integer>;

// Exact division of a by the monic b; the remainder must vanish.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly rem = a;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = rem[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw InvariantViolation("cyclotomic division left a remainder");
  return q;
}

class CycloCache {
 public:
  std::shared_ptr<const CycloData> get(Order n) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    if (n > kMaxOrder) throw LimitExceeded("cyclotomic order " + std::to_string(n) + " too large");
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    }
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (Order d : divisors(n)) {
      if (d == n) continue;
      p = divide_exact(p, get(d)->poly.coeffs);
    }
    auto data = std::make_shared<CycloData>();
    data->poly.order = n;
    data->poly.coeffs = p;
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      if (p[j] == 0) continue;
      data->tail.emplace_back(j, p[j]);
      if (p[j].fits_slong_p())
        data->tail64.emplace_back(j, p[j].get_si());
      else
        data->fits64 = false;
    }
    std::lock_guard lock(mutex_);
    return cache_.emplace(n, std::move(data)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Order, std::shared_ptr<const CycloData>> cache_;
};

CycloCache& cache() {
  static CycloCache instance;
  return instance;
}

// Reduces poly (any length) modulo Phi_N in place and truncates to phi(N).
template <typename T>
void reduce_mod(std::vector<T>& poly, const CycloData& data) {
  const std::size_t deg = data.poly.degree();
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i] == 0) continue;
    const T c = poly[i];
    for (const auto& [j, a] : data.tail) poly[i - deg + j] -= c * a;
    poly[i] = 0;
  }
  poly.resize(deg, T{0});
}

bool checked_reduce64(std::vector<std::int64_t>& poly, const CycloData& data) {
  const std::size_t deg = data.poly.degree();
  for (std::size_t i = poly.size(); i-- > deg;) {
    const std::int64_t c = poly[i];
    if (c == 0) continue;
    for (const auto& [j, a] : data.tail64) {
      std::int64_t prod;
      if (__builtin_mul_overflow(c, a, &prod)) return false;
      if (__builtin_sub_overflow(poly[i - deg + j], prod, &poly[i - deg + j])) return false;
    }
    poly[i] = 0;
  }
  poly.resize(deg);
  return true;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by nonzero b over Q.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    const Rational c = a[i] / b.back();
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {q, a};
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Order exponent_order(const Rational& exponent) {
  const Integer& den = exponent.get_den();
  if (!den.fits_ulong_p() || den.get_ui() > kMaxOrder)
    throw LimitExceeded("root of unity of order " + den.get_str() + " too large");
  return den.get_ui();
}

}  // namespace

std::vector<Order> divisors(Order n) {
  std::vector<Order> small, large;
  for (Order d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Order euler_phi(Order n) {
  Order result = n;
  for (Order p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Order lcm(Order a, Order b) { return std::lcm(a, b); }

CycloPoly cyclotomic_poly(Order n) { return cache().get(n)->poly; }

// ---------------------------------------------------------------------------

CyclotomicNumber::CyclotomicNumber() : order_(1), coeffs_(1, Rational{0}) {}

CyclotomicNumber::CyclotomicNumber(Order order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

CyclotomicNumber CyclotomicNumber::from_rational(const Rational& value, Order order) {
  std::vector<Rational> c(euler_phi(order), Rational{0});
  c[0] = value;
  return {order, std::move(c)};
}

CyclotomicNumber CyclotomicNumber::from_polynomial(Order order, std::vector<Rational> poly) {
  const auto data = cache().get(order);
  reduce_mod(poly, *data);
  return {order, std::move(poly)};
}

CyclotomicNumber CyclotomicNumber::root_of_unity(Order order, std::uint64_t power) {
  power %= order;
  const Order deg = euler_phi(order);
  if (power < deg) {
    std::vector<Rational> c(deg, Rational{0});
    c[power] = 1;
    return {order, std::move(c)};
  }
  std::vector<Rational> poly(power + 1, Rational{0});
  poly[power] = 1;
  return from_polynomial(order, std::move(poly));
}

CyclotomicNumber CyclotomicNumber::root_of_unity(const Rational& exponent) {
  const Rational e = frac(exponent);
  const Order n = exponent_order(e);
  return root_of_unity(n, e.get_num().get_ui());
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

CyclotomicNumber CyclotomicNumber::lift(Order multiple) const {
  if (multiple == order_) return *this;
  if (multiple % order_ != 0) throw std::invalid_argument("lift target must be a multiple of the order");
  const Order k = multiple / order_;
  std::vector<Rational> poly(coeffs_.size() * k, Rational{0});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * k] = coeffs_[i];
  return from_polynomial(multiple, std::move(poly));
}

std::optional<CyclotomicNumber> CyclotomicNumber::descend(Order divisor) const {
  if (divisor == order_) return *this;
  if (order_ % divisor != 0) throw std::invalid_argument("descend target must divide the order");
  const std::size_t rows = coeffs_.size();
  const std::size_t cols = euler_phi(divisor);
  // Augmented system: columns are the lifted power basis of Q(zeta_divisor).
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1, Rational{0}));
  for (std::size_t c = 0; c < cols; ++c) {
    const auto basis = root_of_unity(divisor, c).lift(order_);
    for (std::size_t r = 0; r < rows; ++r) m[r][c] = basis.coeffs_[r];
  }
  for (std::size_t r = 0; r < rows; ++r) m[r][cols] = coeffs_[r];

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const Rational inv = 1 / m[rank][c];
    for (auto& v : m[rank]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[rank][k];
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;
  std::vector<Rational> out(cols, Rational{0});
  for (std::size_t i = 0; i < rank; ++i) out[pivot_cols[i]] = m[i][cols];
  return CyclotomicNumber{divisor, std::move(out)};
}

CyclotomicNumber CyclotomicNumber::conj() const {
  std::vector<Rational> poly(order_, Rational{0});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[(order_ - i) % order_] += coeffs_[i];
  return from_polynomial(order_, std::move(poly));
}

std::complex<double> CyclotomicNumber::to_complex() const {
  std::complex<double> sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const double angle = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order_);
    sum += coeffs_[i].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  auto out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  const Order n = lcm(a.order_, b.order_);
  auto x = a.lift(n);
  const auto y = b.lift(n);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  const Order n = lcm(a.order_, b.order_);
  const auto x = a.lift(n);
  const auto y = b.lift(n);
  auto prod = mul(x.coeffs_, y.coeffs_);
  if (prod.empty()) return CyclotomicNumber::from_rational(0, n);
  return CyclotomicNumber::from_polynomial(n, std::move(prod));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const Order n = lcm(a.order_, b.order_);
  return a.lift(n).coeffs_ == b.lift(n).coeffs_;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z) {
  os << "Q(zeta_" << z.order_ << ")[";
  for (std::size_t i = 0; i < z.coeffs_.size(); ++i) os << (i ? ", " : "") << to_string(z.coeffs_[i]);
  return os << "]";
}

// ---------------------------------------------------------------------------

namespace {

Order common_order(std::span<const RootTerm> terms) {
  Order n = 1;
  for (const auto& t : terms) {
    n = lcm(n, exponent_order(frac(t.exponent)));
    if (n > kMaxOrder) throw LimitExceeded("root sum order too large");
  }
  return n;
}

std::uint64_t power_of(const Rational& exponent, Order n) {
  const Rational e = frac(exponent);
  return e.get_num().get_ui() * (n / e.get_den().get_ui());
}

}  // namespace

CyclotomicNumber root_sum(std::span<const RootTerm> terms) {
  const Order n = common_order(terms);
  std::vector<Rational> poly(n, Rational{0});
  for (const auto& t : terms) poly[power_of(t.exponent, n)] += t.coeff;
  return CyclotomicNumber::from_polynomial(n, std::move(poly));
}

bool root_sum_is_zero(std::span<const RootTerm> terms) {
  const bool integral = std::all_of(terms.begin(), terms.end(), [](const RootTerm& t) {
    return t.coeff.get_den() == 1 && t.coeff.get_num().fits_slong_p();
  });
  if (!integral) return root_sum(terms).is_zero();
  const Order n = common_order(terms);
  RootSumAccumulator acc(n);
  for (const auto& t : terms) acc.add(t.coeff.get_num().get_si(), power_of(t.exponent, n));
  return acc.is_zero();
}

CyclotomicNumber cyclo_invert(const CyclotomicNumber& z) {
  if (z.is_zero()) throw ZeroInversion("cannot invert zero");
  const Order n = z.order();
  const auto data = cache().get(n);
  Poly modulus(data->poly.coeffs.begin(), data->poly.coeffs.end());
  Poly r0 = modulus, r1 = z.coeffs();
  trim(r1);
  Poly t0{}, t1{Rational{1}};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly t2 = sub(t0, mul(q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // Phi_N is irreducible, so the gcd r0 is a nonzero constant.
  if (r0.size() != 1) throw InvariantViolation("cyclotomic polynomial has a nontrivial factor");
  const Rational inv = 1 / r0[0];
  for (auto& c : t0) c *= inv;
  return CyclotomicNumber::from_polynomial(n, std::move(t0));
}

// ---------------------------------------------------------------------------

RootSumAccumulator::RootSumAccumulator(Order order) : order_(order), bins_(order, 0) {
  cache().get(order);
}

void RootSumAccumulator::clear() { std::fill(bins_.begin(), bins_.end(), 0); }

void RootSumAccumulator::add(std::int64_t coeff, std::uint64_t power) {
  auto& bin = bins_[power % order_];
  if (__builtin_add_overflow(bin, coeff, &bin)) throw LimitExceeded("root sum accumulator overflow");
}

bool RootSumAccumulator::is_zero() const {
  if (std::all_of(bins_.begin(), bins_.end(), [](std::int64_t v) { return v == 0; })) return true;
  const auto data = cache().get(order_);
  if (data->fits64) {
    scratch_ = bins_;
    if (checked_reduce64(scratch_, *data))
      return std::all_of(scratch_.begin(), scratch_.end(), [](std::int64_t v) { return v == 0; });
  }
  return value().is_zero();
}

CyclotomicNumber RootSumAccumulator::value() const {
  std::vector<Rational> poly(bins_.size());
  for (std::size_t i = 0; i < bins_.size(); ++i) poly[i] = Rational{Integer{static_cast<long>(bins_[i])}};
  return CyclotomicNumber::from_polynomial(order_, std::move(poly));
}

}  // namespace spectile::exactnum
