#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hilbertia/rational.hpp"

namespace hilbertia {

/// Dense univariate polynomial over Q; coefficient index is the exponent.
/// The highest stored coefficient is nonzero, the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t exponent);
  /// The polynomial X - root.
  static UniPoly linear_root(const Rational& root);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const;

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of X^i, zero past the degree.
  Rational coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  /// p(X + shift).
  UniPoly taylor_shift(const Rational& shift) const;
  /// p(scale * X).
  UniPoly scale_argument(const Rational& scale) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// Division by a monic divisor: h = f*q + r, deg r < deg f. Integer inputs
/// give integer outputs since no coefficient is ever divided.
DivMod poly_divmod(const UniPoly& h, const UniPoly& f);

/// Euclidean division over Q by any nonzero divisor.
DivMod divmod(const UniPoly& h, const UniPoly& f);

/// Quotient when f divides h exactly, nullopt otherwise.
std::optional<UniPoly> try_divide(const UniPoly& h, const UniPoly& f);
/// Quotient of an exact division; throws DomainError if f does not divide h.
UniPoly exact_quotient(const UniPoly& h, const UniPoly& f);

/// Monic gcd (zero only when both inputs are zero), via a primitive
/// pseudo-remainder sequence over Z.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Inverse of a modulo m over Q; throws if gcd(a, m) != 1.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);

UniPoly pow(const UniPoly& p, unsigned exponent);

/// f = scale * F with F in Z[X] primitive and lc(F) > 0.
struct IntegerForm {
  Rational scale;
  std::vector<Integer> coeffs;
};
IntegerForm primitive_integer_form(const UniPoly& f);
UniPoly from_integers(const std::vector<Integer>& coeffs);

/// Result of rescaling a monic minimal polynomial to integer coefficients.
struct IntegralRescale {
  Integer d;
  UniPoly poly;
};

/// For monic m = X^n + b_{n-1}X^{n-1} + ... + b_0, finds the least d >= 1
/// with sum d^{n-i} b_i X^i integral; that polynomial equals d^n m(X/d).
IntegralRescale minpoly_integral_rescale(const UniPoly& m);

}  // namespace hilbertia
