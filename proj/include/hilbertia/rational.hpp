#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbertia {

using Integer = mpz_class;

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator, so structural equality is value equality.
using Rational = mpq_class;

/// Raised for violated preconditions of algebraic operations.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Integer ceil(const Rational& q);
Integer floor(const Rational& q);
Integer ipow(const Integer& base, unsigned long exp);
Rational qpow(const Rational& base, unsigned long exp);

/// True when q = r^2 for some rational r; the root is written to *root.
bool is_square(const Rational& q, Rational* root = nullptr);

}  // namespace hilbertia
