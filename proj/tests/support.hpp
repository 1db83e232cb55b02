#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "hilbertia/bipoly.hpp"
#include "hilbertia/multipoly.hpp"
#include "hilbertia/rational.hpp"
#include "hilbertia/unipoly.hpp"

namespace testing_support {

using hilbertia::BiPoly;
using hilbertia::Integer;
using hilbertia::MultiPoly;
using hilbertia::Rational;
using hilbertia::UniPoly;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long height = 9, long max_den = 5) {
  return hilbertia::make_rational(uniform(rng, -height, height), uniform(rng, 1, max_den));
}

inline UniPoly random_uni(Rng& rng, int degree, long height = 9, bool integral = true) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = integral ? Rational(uniform(rng, -height, height)) : random_rational(rng, height);
  while (c.back() == 0) c.back() = integral ? Rational(uniform(rng, 1, height)) : random_rational(rng, height);
  return UniPoly(c);
}

inline UniPoly random_monic(Rng& rng, int degree, long height = 9) {
  UniPoly p = random_uni(rng, degree, height);
  std::vector<Rational> c = p.coefficients();
  c.back() = 1;
  return UniPoly(c);
}

/// Random BiPoly of exact Y-degree ny, X-degrees up to nx.
inline BiPoly random_bi(Rng& rng, int ny, int nx, long height = 5) {
  std::vector<UniPoly> ys;
  for (int j = 0; j <= ny; ++j) {
    int dx = static_cast<int>(uniform(rng, 0, nx));
    UniPoly a = random_uni(rng, dx, height);
    if (j < ny && uniform(rng, 0, 3) == 0) a = UniPoly{};
    ys.push_back(a);
  }
  return BiPoly(ys);
}

inline MultiPoly random_multi(Rng& rng, std::size_t k, unsigned max_exp, int terms, long height = 7) {
  MultiPoly f(k);
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> e(k);
    for (auto& x : e) x = static_cast<unsigned>(uniform(rng, 0, max_exp));
    long c = uniform(rng, -height, height);
    if (c != 0) f.add_term(e, hilbertia::make_rational(c, uniform(rng, 1, 3)));
  }
  return f;
}

/// q^deg * f(p/q) with machine integers; f given by small integer coefficients.
inline bool vanishes_at(const std::vector<long>& coeffs, long p, long q) {
  Integer total = 0;
  std::size_t n = coeffs.size() - 1;
  std::vector<Integer> ppow(n + 1), qpow(n + 1);
  ppow[0] = 1;
  qpow[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    ppow[i] = ppow[i - 1] * p;
    qpow[i] = qpow[i - 1] * q;
  }
  for (std::size_t i = 0; i <= n; ++i) total += Integer(coeffs[i]) * ppow[i] * qpow[n - i];
  return total == 0;
}

/// Divisors of |n| (n != 0), by trial division.
inline std::vector<Integer> divisors(const Integer& n) {
  Integer m = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Integer coefficients of a scalar multiple of f (primitive, any sign).
inline std::vector<Integer> integer_coeffs(const UniPoly& f) {
  Integer l = 1;
  for (const auto& c : f.coefficients()) l = lcm(l, c.get_den());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : f.coefficients()) {
    Rational s = c * Rational(l);
    out.push_back(s.get_num());
    g = gcd(g, s.get_num());
  }
  for (auto& x : out) x /= g;
  return out;
}

inline Integer eval_int(const std::vector<Integer>& c, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

/// Kronecker's method restricted to factors of degree 1 and 2: for a
/// polynomial of degree <= 4 over Q, reducible iff such a factor exists.
/// Candidate factors are interpolated through divisors of f at small points.
inline bool brute_reducible_deg_le4(const UniPoly& f) {
  int n = f.degree();
  if (n <= 1) return false;
  auto c = integer_coeffs(f);
  for (int e = 1; e <= n / 2; ++e) {
    std::vector<Integer> pts, vals;
    for (long x = 0; static_cast<int>(pts.size()) < e + 1; x = (x <= 0 ? 1 - x : -x)) {
      Integer v = eval_int(c, Integer(x));
      if (v == 0) return true;  // rational (integer) root
      pts.push_back(Integer(x));
      vals.push_back(v);
    }
    std::vector<std::vector<Integer>> divs;
    for (const auto& v : vals) divs.push_back(divisors(v));
    std::vector<std::size_t> idx(e + 1, 0);
    for (;;) {
      for (unsigned mask = 0; mask < (1u << e); ++mask) {
        // g and -g give the same divisor; the first value stays positive
        std::vector<Rational> xs, ys;
        for (int i = 0; i <= e; ++i) {
          Integer dv = divs[i][idx[i]];
          if (i > 0 && (mask >> (i - 1)) & 1) dv = -dv;
          xs.push_back(Rational(pts[i]));
          ys.push_back(Rational(dv));
        }
        // Lagrange interpolation
        UniPoly g;
        for (int i = 0; i <= e; ++i) {
          UniPoly term = UniPoly::constant(ys[i]);
          for (int j = 0; j <= e; ++j) {
            if (j == i) continue;
            term = term * UniPoly{-xs[j], Rational(1)};
            term = term * (Rational(1) / (xs[i] - xs[j]));
          }
          g += term;
        }
        if (g.degree() != e) continue;
        if (hilbertia::divmod(f, g).remainder.is_zero()) return true;
      }
      int pos = 0;
      while (pos <= e) {
        if (++idx[pos] < divs[pos].size()) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos > e) break;
    }
  }
  return false;
}

/// Rational roots of an integer polynomial by exhaustive search over p/q
/// with q <= max_den and |p/q| <= Cauchy bound.
inline std::vector<Rational> brute_rational_roots(const std::vector<long>& coeffs) {
  std::size_t n = coeffs.size() - 1;
  while (n > 0 && coeffs[n] == 0) --n;
  std::vector<long> c(coeffs.begin(), coeffs.begin() + static_cast<long>(n) + 1);
  std::vector<Rational> roots;
  if (n == 0) return roots;
  long lead = std::labs(c[n]);
  long bound = 1;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, 1 + (std::labs(c[i]) + lead - 1) / lead);
  for (long q = 1; q <= lead; ++q) {
    for (long p = -bound * q; p <= bound * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      if (vanishes_at(c, p, q)) roots.push_back(hilbertia::make_rational(p, q));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline UniPoly lagrange(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  UniPoly g;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly term = UniPoly::constant(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term = term * UniPoly{-xs[j], Rational(1)};
      term = term * (Rational(1) / (xs[i] - xs[j]));
    }
    g += term;
  }
  return g;
}

inline Integer catalan(unsigned n) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
  return b / (n + 1);
}

/// Roots of a real polynomial via Durand-Kerner.
inline std::vector<std::complex<double>> numeric_roots(const UniPoly& f) {
  int n = f.degree();
  std::vector<std::complex<double>> a(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) a[i] = f.coeff(i).get_d() / f.leading().get_d();
  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * z + a[i];
    return acc;
  };
  std::vector<std::complex<double>> r(static_cast<std::size_t>(n));
  std::complex<double> seed(0.4, 0.9);
  for (int i = 0; i < n; ++i) r[i] = std::pow(seed, i);
  for (int it = 0; it < 2000; ++it) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= r[i] - r[j];
      std::complex<double> step = eval(r[i]) / den;
      r[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-15) break;
  }
  return r;
}

}  // namespace testing_support
