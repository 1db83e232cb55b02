#pragma once

#include <complex>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hilbertia/bipoly.hpp"

namespace hilbertia {

using Complex = std::complex<double>;

/// Absolute tolerance for accepting a floating root, and relative tolerance
/// for floating cross-checks.
inline constexpr double kRootTolerance = 1e-9;
inline constexpr double kRelativeTolerance = 1e-6;

/// Power series truncated after z^order; coefficients[k] multiplies z^k.
/// Scalar is Rational (exact mode) or Complex (numeric mode).
template <class Scalar>
struct TruncSeries {
  std::vector<Scalar> coefficients;

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  const Scalar& operator[](std::size_t k) const { return coefficients[k]; }
};

/// f in the local coordinates z = X - b, u = Y - y0:
///   f = a_10 z + a_01 u + sum_{i+j>=2} a_ij z^i u^j,  a_01 != 0,
/// with a'_ij = -a_ij / a_01 and A the least positive integer bounding |a'_ij|.
template <class Scalar>
struct LocalForm {
  Scalar a01;
  /// a_ij of the shifted polynomial, indexed [i][j] (i for z, j for u).
  std::vector<std::vector<Scalar>> shifted;
  /// a'_ij for every (i, j) other than (0,0), (0,1) with a_ij != 0.
  std::map<std::pair<int, int>, Scalar> normalized_coeffs;
  Integer A;
};

/// Throws DomainError if y0 is not a root of f_b or a_01 = 0.
template <class Scalar>
LocalForm<Scalar> local_form(const BiPoly& f, const Rational& b, const Scalar& y0);

/// Coefficients b_1..b_K of the analytic root u(z) with u(0) = 0 in local
/// coordinates: b_1 = a'_10, b_k = -c_k / a_01 where c_k is the z^k
/// coefficient of f(z, b_1 z + ... + b_{k-1} z^(k-1)).
template <class Scalar>
TruncSeries<Scalar> root_series(const BiPoly& f, const Rational& b, const Scalar& y0, int order);

/// f(z, u(z)) mod z^(order+1) in local coordinates.
template <class Scalar>
TruncSeries<Scalar> series_residual(const BiPoly& f, const Rational& b, const Scalar& y0,
                                    const TruncSeries<Scalar>& u);

/// z-adic valuation of an exact series: index of the first nonzero
/// coefficient, or order()+1 when all vanish.
int valuation(const TruncSeries<Rational>& s);

/// Root series of h(z, v) = A z - v + A sum_{i+j>=2} z^i v^j, the branch with
/// v(0) = 0. All coefficients are nonnegative integers.
TruncSeries<Rational> majorant_series(const Integer& A, int order);

/// (A+1) v^2 - v + A z / (1 - z) mod z^(order+1).
TruncSeries<Rational> majorant_residual(const Integer& A, const TruncSeries<Rational>& v);

/// |b_k| <= A_k for 1 <= k <= order (numeric mode: with relative slack 1e-9).
template <class Scalar>
bool majorant_dominates(const BiPoly& f, const Rational& b, const Scalar& y0, int order);

/// W_m / V_m for nodes t_0..t_m and values f(t_i): the Vandermonde
/// determinant with its last column replaced by the values, over the
/// Vandermonde determinant. Equals the leading coefficient of the
/// interpolant of degree <= m.
Rational divided_difference_ratio(std::span<const Rational> nodes, std::span<const Rational> values);

/// The unique polynomial of degree <= m through (nodes[i], values[i]).
UniPoly interpolate_rational(std::span<const Rational> nodes, std::span<const Rational> values);

extern template LocalForm<Rational> local_form(const BiPoly&, const Rational&, const Rational&);
extern template LocalForm<Complex> local_form(const BiPoly&, const Rational&, const Complex&);
extern template TruncSeries<Rational> root_series(const BiPoly&, const Rational&, const Rational&, int);
extern template TruncSeries<Complex> root_series(const BiPoly&, const Rational&, const Complex&, int);
extern template TruncSeries<Rational> series_residual(const BiPoly&, const Rational&, const Rational&,
                                                      const TruncSeries<Rational>&);
extern template TruncSeries<Complex> series_residual(const BiPoly&, const Rational&, const Complex&,
                                                     const TruncSeries<Complex>&);
extern template bool majorant_dominates(const BiPoly&, const Rational&, const Rational&, int);
extern template bool majorant_dominates(const BiPoly&, const Rational&, const Complex&, int);

}  // namespace hilbertia
