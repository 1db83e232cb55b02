#include "hilbertia/series.hpp"

#include <cmath>

namespace hilbertia {

namespace {

template <class S>
S from_rational(const Rational& q) {
  if constexpr (std::is_same_v<S, Rational>) {
    return q;
  } else {
    return S(q.get_d(), 0.0);
  }
}

bool negligible(const Rational& x) { return sgn(x) == 0; }
bool negligible(const Complex& x) { return std::abs(x) < kRootTolerance; }

Integer ceil_abs(const Rational& x) { return ceil(abs(x)); }
Integer ceil_abs(const Complex& x) { return Integer(std::ceil(std::abs(x))); }

using Grid = std::vector<std::vector<Rational>>;

template <class S>
std::vector<std::vector<S>> shifted_grid(const BiPoly& f, const Rational& b, const S& y0) {
  const BiPoly g = f.shift_x(b);
  const std::size_t nx = static_cast<std::size_t>(std::max(g.degree_x(), 0)) + 1;
  const std::size_t ny = static_cast<std::size_t>(std::max(g.degree_y(), 0)) + 1;
  std::vector<std::vector<S>> grid(nx, std::vector<S>(ny, S(0)));
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) grid[i][j] = from_rational<S>(g.coeff(i, j));
    // Taylor shift of row i in u: p(u + y0).
    auto& row = grid[i];
    for (std::size_t s = 0; s + 1 < ny; ++s) {
      for (std::size_t j = ny - 1; j > s; --j) row[j - 1] += y0 * row[j];
    }
  }
  return grid;
}

// sum_{i,j} grid[i][j] z^i u(z)^j mod z^(n+1); u has no constant term.
template <class S>
std::vector<S> compose(const std::vector<std::vector<S>>& grid, const std::vector<S>& u, std::size_t n) {
  const std::size_t ny = grid.empty() ? 0 : grid[0].size();
  std::vector<S> acc(n + 1, S(0));
  for (std::size_t j = ny; j-- > 0;) {
    // acc = acc * u + column_j(z)
    std::vector<S> next(n + 1, S(0));
    for (std::size_t a = 0; a <= n; ++a) {
      if (negligible(acc[a]) && acc[a] == S(0)) continue;
      for (std::size_t c = 1; c < u.size() && a + c <= n; ++c) next[a + c] += acc[a] * u[c];
    }
    for (std::size_t i = 0; i < grid.size() && i <= n; ++i) next[i] += grid[i][j];
    acc = std::move(next);
  }
  return acc;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m[p][k]) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m[i][k]) == 0) continue;
      Rational factor = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return det;
}

void check_nodes(std::span<const Rational> nodes, std::span<const Rational> values, std::size_t min_nodes) {
  if (nodes.size() != values.size()) throw DomainError("nodes and values differ in length");
  if (nodes.size() < min_nodes) throw DomainError("not enough nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i] == nodes[j]) throw DomainError("repeated node " + to_string(nodes[i]));
    }
  }
}

}  // namespace

template <class Scalar>
LocalForm<Scalar> local_form(const BiPoly& f, const Rational& b, const Scalar& y0) {
  LocalForm<Scalar> lf;
  lf.shifted = shifted_grid(f, b, y0);
  const auto& g = lf.shifted;
  if (!negligible(g[0][0])) throw DomainError("local_form: y0 is not a root of f_b");
  if (g[0].size() < 2 || negligible(g[0][1])) {
    throw DomainError("local_form: a01 = 0, b is not regular at this root");
  }
  lf.a01 = g[0][1];
  Integer bound = 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g[i].size(); ++j) {
      if ((i == 0 && j <= 1) || g[i][j] == Scalar(0)) continue;
      Scalar a = -g[i][j] / lf.a01;
      lf.normalized_coeffs.emplace(std::make_pair(static_cast<int>(i), static_cast<int>(j)), a);
      Integer c = ceil_abs(a);
      if (c > bound) bound = c;
    }
  }
  lf.A = bound;
  return lf;
}

template <class Scalar>
TruncSeries<Scalar> root_series(const BiPoly& f, const Rational& b, const Scalar& y0, int order) {
  if (order < 1) throw DomainError("root_series: order must be at least 1");
  const LocalForm<Scalar> lf = local_form(f, b, y0);
  const std::size_t n = static_cast<std::size_t>(order);
  std::vector<Scalar> u(n + 1, Scalar(0));
  const Scalar a10 = lf.shifted.size() > 1 ? lf.shifted[1][0] : Scalar(0);
  u[1] = -a10 / lf.a01;
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<Scalar> partial(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k));
    const std::vector<Scalar> comp = compose(lf.shifted, partial, k);
    u[k] = -comp[k] / lf.a01;
  }
  return {std::move(u)};
}

template <class Scalar>
TruncSeries<Scalar> series_residual(const BiPoly& f, const Rational& b, const Scalar& y0,
                                    const TruncSeries<Scalar>& u) {
  const auto grid = shifted_grid(f, b, y0);
  return {compose(grid, u.coefficients, static_cast<std::size_t>(u.order()))};
}

int valuation(const TruncSeries<Rational>& s) {
  for (std::size_t k = 0; k < s.coefficients.size(); ++k) {
    if (sgn(s.coefficients[k]) != 0) return static_cast<int>(k);
  }
  return s.order() + 1;
}

TruncSeries<Rational> majorant_series(const Integer& A, int order) {
  if (order < 1) throw DomainError("majorant_series: order must be at least 1");
  if (A < 0) throw DomainError("majorant_series: A must be nonnegative");
  const std::size_t n = static_cast<std::size_t>(order);
  std::vector<Rational> v(n + 1, Rational(0));
  v[1] = A;
  for (std::size_t k = 2; k <= n; ++k) {
    // c_k = A * sum_{i+j>=2} [z^(k-i)] P^j with P = v truncated below z^k.
    std::vector<Rational> power(k + 1, Rational(0));
    power[0] = 1;
    Rational c = 0;
    for (std::size_t j = 0; j <= k; ++j) {
      const std::size_t i_min = j >= 2 ? 0 : 2 - j;
      for (std::size_t i = i_min; i <= k; ++i) c += power[k - i];
      std::vector<Rational> next(k + 1, Rational(0));
      for (std::size_t a = 0; a <= k; ++a) {
        if (sgn(power[a]) == 0) continue;
        for (std::size_t e = 1; e < k && a + e <= k; ++e) next[a + e] += power[a] * v[e];
      }
      power = std::move(next);
    }
    v[k] = c * A;
  }
  return {std::move(v)};
}

TruncSeries<Rational> majorant_residual(const Integer& A, const TruncSeries<Rational>& v) {
  const std::size_t n = static_cast<std::size_t>(v.order());
  std::vector<Rational> r(n + 1, Rational(0));
  const Rational a1 = Rational(A) + 1;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += a1 * v[i] * v[j];
  }
  for (std::size_t k = 0; k <= n; ++k) r[k] -= v[k];
  for (std::size_t k = 1; k <= n; ++k) r[k] += A;
  return {std::move(r)};
}

template <class Scalar>
bool majorant_dominates(const BiPoly& f, const Rational& b, const Scalar& y0, int order) {
  const LocalForm<Scalar> lf = local_form(f, b, y0);
  const TruncSeries<Scalar> u = root_series(f, b, y0, order);
  const TruncSeries<Rational> m = majorant_series(lf.A, order);
  for (int k = 1; k <= order; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    if constexpr (std::is_same_v<Scalar, Rational>) {
      if (abs(u[idx]) > m[idx]) return false;
    } else {
      if (std::abs(u[idx]) > m[idx].get_d() * (1.0 + kRootTolerance)) return false;
    }
  }
  return true;
}

Rational divided_difference_ratio(std::span<const Rational> nodes, std::span<const Rational> values) {
  check_nodes(nodes, values, 2);
  const std::size_t n = nodes.size();
  std::vector<std::vector<Rational>> v(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < n; ++j) {
      v[i][j] = p;
      p *= nodes[i];
    }
  }
  std::vector<std::vector<Rational>> w = v;
  for (std::size_t i = 0; i < n; ++i) w[i][n - 1] = values[i];
  const Rational vm = determinant(std::move(v));
  if (sgn(vm) == 0) throw DomainError("divided_difference_ratio: Vandermonde determinant vanishes");
  return determinant(std::move(w)) / vm;
}

UniPoly interpolate_rational(std::span<const Rational> nodes, std::span<const Rational> values) {
  check_nodes(nodes, values, 1);
  const std::size_t n = nodes.size();
  // Newton divided differences, then expansion of the Newton form.
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
    }
  }
  UniPoly result = UniPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * UniPoly::linear_root(nodes[i]) + UniPoly::constant(dd[i]);
  }
  return result;
}

template LocalForm<Rational> local_form(const BiPoly&, const Rational&, const Rational&);
template LocalForm<Complex> local_form(const BiPoly&, const Rational&, const Complex&);
template TruncSeries<Rational> root_series(const BiPoly&, const Rational&, const Rational&, int);
template TruncSeries<Complex> root_series(const BiPoly&, const Rational&, const Complex&, int);
template TruncSeries<Rational> series_residual(const BiPoly&, const Rational&, const Rational&,
                                               const TruncSeries<Rational>&);
template TruncSeries<Complex> series_residual(const BiPoly&, const Rational&, const Complex&,
                                              const TruncSeries<Complex>&);
template bool majorant_dominates(const BiPoly&, const Rational&, const Rational&, int);
template bool majorant_dominates(const BiPoly&, const Rational&, const Complex&, int);

}  // namespace hilbertia
