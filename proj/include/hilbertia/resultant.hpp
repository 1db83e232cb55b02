#pragma once

#include "hilbertia/bipoly.hpp"
#include "hilbertia/unipoly.hpp"

namespace hilbertia {

/// Determinant of the Sylvester matrix of f and g over Q. A constant
/// argument c gives c^(deg of the other); two constants give 1.
Rational resultant(const UniPoly& f, const UniPoly& g);

/// Resultant with respect to Y, as a polynomial in X.
UniPoly resultant_y(const BiPoly& f, const BiPoly& g);

/// (-1)^(n(n-1)/2) res(f, f') / a_n for deg f = n >= 1.
Rational discriminant(const UniPoly& f);

/// Discriminant in Y; an element of Q[X]. Requires deg_Y f >= 1.
UniPoly discriminant_y(const BiPoly& f);

struct RegularityReport {
  bool is_regular = false;
  Rational leading_coeff_value;
  Rational discriminant_value;
};

/// b is regular when a_n(b) != 0 and Disc_Y(f)(b) != 0.
RegularityReport is_regular_value(const BiPoly& f, const Rational& b);

/// Same test with the discriminant already computed.
RegularityReport is_regular_value(const BiPoly& f, const UniPoly& disc, const Rational& b);

/// deg a_n + deg Disc_Y(f): bounds the number of non-regular b. Throws when
/// the discriminant vanishes identically (f has a repeated factor in Y).
int nonregular_count_bound(const BiPoly& f);

}  // namespace hilbertia
