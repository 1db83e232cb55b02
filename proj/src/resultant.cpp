#include "hilbertia/resultant.hpp"

#include <vector>

namespace hilbertia {

namespace {

bool is_zero_elem(const Rational& r) { return sgn(r) == 0; }
bool is_zero_elem(const UniPoly& p) { return p.is_zero(); }
Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
UniPoly exact_div(const UniPoly& a, const UniPoly& b) { return exact_quotient(a, b); }
Rational negate(const Rational& a) { return -a; }
UniPoly negate(const UniPoly& a) { return -a; }

template <class Ring>
Ring ring_one() {
  if constexpr (std::is_same_v<Ring, Rational>) {
    return Rational(1);
  } else {
    return UniPoly::constant(1);
  }
}

// Fraction-free (Bareiss) determinant; every division is exact in Ring.
template <class Ring>
Ring bareiss_determinant(std::vector<std::vector<Ring>> m) {
  const std::size_t n = m.size();
  if (n == 0) return ring_one<Ring>();
  bool negative = false;
  Ring prev = ring_one<Ring>();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero_elem(m[k][k])) {
      std::size_t p = k + 1;
      while (p < n && is_zero_elem(m[p][k])) ++p;
      if (p == n) return Ring{};
      std::swap(m[k], m[p]);
      negative = !negative;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Ring t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_div(t, prev);
      }
      m[i][k] = Ring{};
    }
    prev = m[k][k];
  }
  Ring det = m[n - 1][n - 1];
  return negative ? negate(det) : det;
}

// coeffs are in ascending order; the matrix uses descending rows.
template <class Ring>
Ring sylvester_resultant(const std::vector<Ring>& f, const std::vector<Ring>& g) {
  if (f.empty() || g.empty()) throw DomainError("resultant: zero polynomial");
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<Ring>> s(size, std::vector<Ring>(size));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f[m - i];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g[n - i];
  }
  return bareiss_determinant(std::move(s));
}

}  // namespace

Rational resultant(const UniPoly& f, const UniPoly& g) {
  return sylvester_resultant(f.coefficients(), g.coefficients());
}

UniPoly resultant_y(const BiPoly& f, const BiPoly& g) {
  return sylvester_resultant(f.y_coefficients(), g.y_coefficients());
}

Rational discriminant(const UniPoly& f) {
  const int n = f.degree();
  if (n < 1) throw DomainError("discriminant: degree must be at least 1");
  Rational r = resultant(f, f.derivative()) / f.leading();
  if ((n * (n - 1) / 2) % 2 != 0) r = -r;
  return r;
}

UniPoly discriminant_y(const BiPoly& f) {
  const int n = f.degree_y();
  if (n < 1) throw DomainError("discriminant_y: Y-degree must be at least 1");
  UniPoly r = exact_quotient(resultant_y(f, f.derivative_y()), f.leading());
  if ((n * (n - 1) / 2) % 2 != 0) r = -r;
  return r;
}

RegularityReport is_regular_value(const BiPoly& f, const Rational& b) {
  return is_regular_value(f, discriminant_y(f), b);
}

RegularityReport is_regular_value(const BiPoly& f, const UniPoly& disc, const Rational& b) {
  if (f.degree_y() < 1) throw DomainError("is_regular_value: Y-degree must be at least 1");
  RegularityReport rep;
  rep.leading_coeff_value = f.leading()(b);
  rep.discriminant_value = disc(b);
  rep.is_regular = sgn(rep.leading_coeff_value) != 0 && sgn(rep.discriminant_value) != 0;
  return rep;
}

int nonregular_count_bound(const BiPoly& f) {
  const UniPoly disc = discriminant_y(f);
  if (disc.is_zero()) {
    throw DomainError("nonregular_count_bound: discriminant vanishes; f has a repeated factor in Y");
  }
  return f.leading().degree() + disc.degree();
}

}  // namespace hilbertia
