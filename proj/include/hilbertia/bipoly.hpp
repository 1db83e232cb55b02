#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hilbertia/unipoly.hpp"

namespace hilbertia {

/// Element of Q[X][Y]: f = a_0(X) + a_1(X) Y + ... + a_n(X) Y^n, stored
/// densely in Y. a_n is nonzero unless f is zero (empty).
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> y_coeffs);

  /// Polynomial in X alone (Y-degree 0).
  static BiPoly from_x(const UniPoly& a);
  /// Polynomial in Y alone with rational coefficients.
  static BiPoly from_y(const UniPoly& p);
  /// c X^i Y^j.
  static BiPoly monomial(const Rational& c, std::size_t x_exp, std::size_t y_exp);

  int degree_y() const { return static_cast<int>(y_.size()) - 1; }
  /// Maximum X-degree over all Y-coefficients, -1 for zero.
  int degree_x() const;
  bool is_zero() const { return y_.empty(); }

  const std::vector<UniPoly>& y_coefficients() const { return y_; }
  UniPoly coeff(std::size_t j) const { return j < y_.size() ? y_[j] : UniPoly{}; }
  /// a_n(X).
  UniPoly leading() const { return y_.empty() ? UniPoly{} : y_.back(); }
  /// Coefficient of X^i Y^j.
  Rational coeff(std::size_t i, std::size_t j) const { return coeff(j).coeff(i); }

  BiPoly derivative_y() const;
  /// f(X + shift, Y).
  BiPoly shift_x(const Rational& shift) const;
  /// f(X, Y + shift).
  BiPoly shift_y(const Rational& shift) const;
  /// Drops every X^i with i >= precision.
  BiPoly truncate_x(std::size_t precision) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const UniPoly& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const UniPoly& c) { return a *= c; }
  friend BiPoly operator*(const UniPoly& c, BiPoly a) { return a *= c; }
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= UniPoly::constant(c); }
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

 private:
  void normalize();
  std::vector<UniPoly> y_;
};

/// f_b(Y) = f(b, Y), normalized.
UniPoly specialize(const BiPoly& f, const Rational& b);

/// Monic gcd over X of a_0, ..., a_n.
UniPoly content_y(const BiPoly& f);
/// f / content_y(f); f = content_y(f) * primitive_part_y(f) exactly.
BiPoly primitive_part_y(const BiPoly& f);

/// Quotient when g divides f in Q[X][Y], nullopt otherwise.
std::optional<BiPoly> try_divide(const BiPoly& f, const BiPoly& g);

/// lc_Y(g)^(deg f - deg g + 1) * f mod g, as polynomials in Y over Q[X].
BiPoly pseudo_remainder(const BiPoly& f, const BiPoly& g);

/// gcd in Q[X][Y], with monic leading X-coefficient of the leading Y-coefficient.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

/// Yun decomposition of a Y-primitive f into pairwise coprime squarefree
/// parts: f = const * prod parts[i].first ^ parts[i].second.
std::vector<std::pair<BiPoly, unsigned>> squarefree_decomposition_y(const BiPoly& f);

/// Scales f so the leading coefficient of a_n(X) is 1; returns the factor removed.
Rational normalize_leading(BiPoly& f);

}  // namespace hilbertia
