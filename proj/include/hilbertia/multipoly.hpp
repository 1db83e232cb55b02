#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "hilbertia/rational.hpp"

namespace hilbertia {

using Exponent = std::vector<unsigned>;

/// Sparse polynomial in X_1, ..., X_k over Q. Terms are keyed by exponent
/// vector (iteration is lexicographic) and never hold a zero coefficient.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t variable_count = 1) : nvars_(variable_count) {}

  static MultiPoly constant(std::size_t variable_count, const Rational& c);
  /// X_index, 1-based.
  static MultiPoly variable(std::size_t variable_count, std::size_t index);

  std::size_t variable_count() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;

  /// Adds c * X^exponent; exponent length must equal variable_count().
  void add_term(const Exponent& exponent, const Rational& c);

  /// Degree in X_index (1-based), -1 for the zero polynomial.
  int degree_in(std::size_t index) const;
  int max_variable_degree() const;

  Rational evaluate(std::span<const Rational> point) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

 private:
  void check_compatible(const MultiPoly& o) const;
  std::size_t nvars_;
  std::map<Exponent, Rational> terms_;
};

/// Substitutes X_index = b (1-based); the result has one variable fewer and
/// the remaining variables keep their relative order.
MultiPoly specialize_multi(const MultiPoly& f, std::size_t index, const Rational& b);

}  // namespace hilbertia
