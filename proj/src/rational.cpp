#include "spectile/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "spectile/errors.hpp"

namespace spectile {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r{Integer{static_cast<long>(num)}, Integer{static_cast<long>(den)}};
  r.canonicalize();
  return r;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

std::vector<std::string_view> split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(separator, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view token) {
  const std::string_view original = token;
  token = trim(token);
  bool negative = false;
  if (!token.empty() && (token.front() == '-' || token.front() == '+')) {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }
  const auto slash = token.find('/');
  const std::string_view num = token.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : token.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(original) + "'");
  Integer n{std::string(num), 10};
  Integer d{std::string(den), 10};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(original) + "'");
  Rational r{n, d};
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& value) {
  if (value.get_den() == 1) return Rational{0};
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  Rational out{r, value.get_den()};
  out.canonicalize();
  return out;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer common_denominator(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) throw LimitExceeded("integer " + value.get_str() + " exceeds 64 bits");
  return value.get_si();
}

}  // namespace spectile
