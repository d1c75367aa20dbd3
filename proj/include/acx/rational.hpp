#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace acx {

// mpq_class canonicalizes after every arithmetic operation, so values are
// always reduced with a positive denominator. The two-argument constructor
// does not; build quotients with `ratio` instead.
using Rational = mpq_class;

/// num / den in canonical form. den must be nonzero.
inline Rational ratio(const mpz_class& num, const mpz_class& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// A point (or direction) of Q^n.
using RationalVector = std::vector<Rational>;

/// Parses "p/q", "-p/q" or an integer string. Throws std::invalid_argument
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Parses a comma-separated list such as "3/2,3/2".
RationalVector parse_vector(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(std::span<const Rational> v);

RationalVector zeros(std::size_t n);
bool is_zero(std::span<const Rational> v);

RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a);
RationalVector operator*(const Rational& s, const RationalVector& v);
RationalVector& operator+=(RationalVector& a, const RationalVector& b);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

// Least common multiple of all denominators.
mpz_class common_denominator(std::span<const Rational> v);

// Lexicographic order, used only for deterministic output listings.
bool lex_less(const RationalVector& a, const RationalVector& b);

}  // namespace acx
