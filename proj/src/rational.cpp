#include "acx/rational.hpp"

#include <algorithm>
#include <stdexcept>

#include "acx/errors.hpp"

namespace acx {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  std::string owned(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(owned, 10);
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionMismatch(std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_text(s)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    return Rational(parse_integer(s));
  }
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = s.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

RationalVector parse_vector(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

RationalVector zeros(std::size_t n) { return RationalVector(n, Rational(0)); }

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  require_same_size(a.size(), b.size());
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  require_same_size(a.size(), b.size());
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVector operator-(const RationalVector& a) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

RationalVector& operator+=(RationalVector& a, const RationalVector& b) {
  require_same_size(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_size(a.size(), b.size());
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

mpz_class common_denominator(std::span<const Rational> v) {
  mpz_class l = 1;
  for (const auto& x : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  return l;
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace acx
