#include <doctest.h>

#include <set>

#include "hilbertia/series.hpp"
#include "support.hpp"

using namespace hilbertia;
using namespace testing_support;

namespace {

const BiPoly BX = BiPoly::from_x(UniPoly{0, 1});
const BiPoly BY = BiPoly::monomial(1, 0, 1);

std::vector<Rational> tail(const TruncSeries<Rational>& s) {
  return std::vector<Rational>(s.coefficients.begin() + 1, s.coefficients.end());
}

struct Instance {
  BiPoly f;
  Rational b, y0;
};

/// Random f with f(b, y0) = 0 and f_Y(b, y0) != 0.
Instance random_instance(Rng& rng) {
  for (;;) {
    BiPoly g = random_bi(rng, static_cast<int>(uniform(rng, 1, 3)), 3, 4);
    Rational b = random_rational(rng, 3, 2), y0 = random_rational(rng, 3, 2);
    Rational v = specialize(g, b)(y0);
    BiPoly f = g - BiPoly::from_x(UniPoly::constant(v));
    if (specialize(f.derivative_y(), b)(y0) == 0) continue;
    return {f, b, y0};
  }
}

std::complex<double> eval_numeric(const BiPoly& f, std::complex<double> x, std::complex<double> y) {
  std::complex<double> acc = 0;
  for (int j = f.degree_y(); j >= 0; --j) {
    const UniPoly& a = f.y_coefficients()[j];
    std::complex<double> aj = 0;
    for (int i = a.degree(); i >= 0; --i) aj = aj * x + a.coeff(i).get_d();
    acc = acc * y + aj;
  }
  return acc;
}

/// u(z) = y(b + z) - y0 for the branch through y0, followed from z = 0 by
/// Newton continuation along the segment [0, z].
std::complex<double> tracked_root(const BiPoly& f, const BiPoly& fy, double b, std::complex<double> y0,
                                  std::complex<double> z) {
  std::complex<double> y = y0;
  const int steps = 32;
  for (int s = 1; s <= steps; ++s) {
    std::complex<double> x = b + z * (static_cast<double>(s) / steps);
    for (int it = 0; it < 30; ++it) {
      std::complex<double> step = eval_numeric(f, x, y) / eval_numeric(fy, x, y);
      y -= step;
      if (std::abs(step) < 1e-16) break;
    }
  }
  return y - y0;
}

/// b_k by the Cauchy integral over |z| = rho, trapezoid rule with n nodes.
std::vector<std::complex<double>> cauchy_coefficients(const BiPoly& f, double b, std::complex<double> y0,
                                                      double rho, int kmax, int n = 128) {
  BiPoly fy = f.derivative_y();
  std::vector<std::complex<double>> vals(n);
  const double pi = std::acos(-1.0);
  for (int j = 0; j < n; ++j) vals[j] = tracked_root(f, fy, b, y0, std::polar(rho, 2 * pi * j / n));
  std::vector<std::complex<double>> out(static_cast<std::size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) {
    std::complex<double> acc = 0;
    for (int j = 0; j < n; ++j) acc += vals[j] * std::polar(1.0, -2 * pi * j * k / n);
    out[k] = acc / (n * std::pow(rho, k));
  }
  return out;
}

}  // namespace

TEST_CASE("local form examples") {
  BiPoly f = BX - BY + BY * BY;
  auto lf = local_form(f, Rational(0), Rational(0));
  CHECK(lf.a01 == -1);
  CHECK(lf.shifted[1][0] == 1);
  CHECK(lf.normalized_coeffs.at({1, 0}) == 1);
  CHECK(lf.A == 1);

  auto lg = local_form(BY * BY - BX, Rational(1), Rational(1));
  CHECK(lg.a01 == 2);
  CHECK(lg.shifted[1][0] == -1);
  CHECK(lg.shifted[0][2] == 1);
  CHECK(lg.shifted[0][0] == 0);

  CHECK_THROWS_AS(local_form(BY * BY - BX, Rational(0), Rational(0)), DomainError);
  CHECK_THROWS_AS(local_form(BY * BY - BX, Rational(1), Rational(2)), DomainError);
}

TEST_CASE("root series examples") {
  auto u = root_series(BX - BY + BY * BY, Rational(0), Rational(0), 5);
  CHECK(tail(u) == std::vector<Rational>{1, 1, 2, 5, 14});
  u = root_series(BX - BY, Rational(0), Rational(0), 7);
  CHECK(tail(u) == std::vector<Rational>{1, 0, 0, 0, 0, 0, 0});
  u = root_series(BX - BY + BY * BY * BY, Rational(0), Rational(0), 5);
  CHECK(tail(u) == std::vector<Rational>{1, 0, 1, 0, 3});
  CHECK(u[0] == 0);
}

TEST_CASE("catalan closed form") {
  auto u = root_series(BX - BY + BY * BY, Rational(0), Rational(0), 20);
  for (unsigned k = 1; k <= 20; ++k) REQUIRE(u[k] == Rational(catalan(k - 1)));
}

TEST_CASE("majorant series") {
  auto v = majorant_series(0, 6);
  for (const auto& x : v.coefficients) CHECK(x == 0);
  v = majorant_series(1, 1);
  CHECK(v[1] == 1);
  v = majorant_series(1, 8);
  CHECK(valuation(majorant_residual(1, v)) > 8);
  for (Integer A = 1; A <= 6; ++A) {
    auto w = majorant_series(A, 12);
    REQUIRE(w[1] == Rational(A));
    for (const auto& x : w.coefficients) {
      REQUIRE(x >= 0);
      REQUIRE(is_integer(x));
    }
    REQUIRE(valuation(majorant_residual(A, w)) > 12);
  }
}

TEST_CASE("majorant domination examples") {
  CHECK(majorant_dominates(BX - BY + BY * BY, Rational(0), Rational(0), 10));
  CHECK(majorant_dominates(BX - BY, Rational(0), Rational(0), 10));
}

TEST_CASE("residual vanishes and the majorant dominates on random instances") {
  Rng rng(61);
  for (int t = 0; t < 200; ++t) {
    Instance in = random_instance(rng);
    auto u = root_series(in.f, in.b, in.y0, 12);
    REQUIRE(valuation(series_residual(in.f, in.b, in.y0, u)) > 12);
    REQUIRE(majorant_dominates(in.f, in.b, in.y0, 12));
    auto lf = local_form(in.f, in.b, in.y0);
    for (const auto& [ij, a] : lf.normalized_coeffs) REQUIRE(abs(a) <= Rational(lf.A));
    auto a10 = lf.normalized_coeffs.find({1, 0});
    REQUIRE(u[1] == (a10 == lf.normalized_coeffs.end() ? Rational(0) : a10->second));
  }
}

TEST_CASE("numeric mode agrees with exact mode at rational roots") {
  Rng rng(62);
  for (int t = 0; t < 50; ++t) {
    Instance in = random_instance(rng);
    auto exact = root_series(in.f, in.b, in.y0, 8);
    auto num = root_series(in.f, in.b, Complex(in.y0.get_d(), 0), 8);
    for (int k = 1; k <= 8; ++k) {
      double e = exact[k].get_d();
      REQUIRE(std::abs(num[k] - e) <= kRelativeTolerance * std::max(1.0, std::abs(e)));
    }
  }
}

TEST_CASE("coefficients match Cauchy integrals of the tracked root") {
  Rng rng(63);
  for (int t = 0; t < 25; ++t) {
    Instance in = random_instance(rng);
    auto u = root_series(in.f, in.b, in.y0, 6);
    auto A = local_form(in.f, in.b, in.y0).A;
    auto maj = majorant_series(A, 6);
    double a = A.get_d();
    double rho = 0.25 / (4 * a * (a + 1) + 1);
    auto num = cauchy_coefficients(in.f, in.b.get_d(), in.y0.get_d(), rho, 6);
    for (int k = 1; k <= 6; ++k) {
      double e = u[k].get_d();
      // scale: the majorant coefficient bounds |b_k|
      REQUIRE(std::abs(num[k] - e) <= kRelativeTolerance * (std::abs(e) + maj[k].get_d()));
    }
  }
}

TEST_CASE("irrational root in numeric mode") {
  // u(z) = sqrt(2 + z) - sqrt(2); b_k = binom(1/2, k) 2^(1/2 - k)
  double s2 = std::sqrt(2.0);
  auto u = root_series(BY * BY - BX, Rational(2), Complex(s2, 0), 6);
  double binom = 1;
  for (int k = 1; k <= 6; ++k) {
    binom *= (0.5 - (k - 1)) / k;
    double expect = binom * s2 / std::pow(2.0, k);
    REQUIRE(std::abs(u[k] - expect) <= kRelativeTolerance * std::abs(expect));
  }
  CHECK(majorant_dominates(BY * BY - BX, Rational(2), Complex(s2, 0), 12));
  auto cplx = root_series(BY * BY + BiPoly::from_x(UniPoly{1}), Rational(0), Complex(0, 1), 4);
  CHECK(std::abs(cplx[1]) < kRootTolerance);
  CHECK_THROWS_AS(root_series(BY * BY - BX, Rational(2), Complex(1.4, 0), 3), DomainError);
}

TEST_CASE("divided differences") {
  auto sq = [](const Rational& t) { return t * t; };
  std::vector<Rational> n3{0, 1, 2}, v3{sq(0), sq(1), sq(2)};
  CHECK(divided_difference_ratio(n3, v3) == 1);
  std::vector<Rational> n2{0, 1}, v2{0, 1};
  CHECK(divided_difference_ratio(n2, v2) == 1);
  std::vector<Rational> n4{0, 1, 2, 3}, v4{0, 1, 8, 27};
  CHECK(divided_difference_ratio(n4, v4) == 1);
  std::vector<Rational> bad{1, 1}, badv{2, 3};
  CHECK_THROWS_AS(divided_difference_ratio(bad, badv), DomainError);
}

TEST_CASE("divided difference equals the leading coefficient") {
  Rng rng(64);
  for (int t = 0; t < 200; ++t) {
    int m = static_cast<int>(uniform(rng, 1, 5));
    UniPoly f = random_uni(rng, m, 9, false);
    std::set<Rational> nodes;
    while (static_cast<int>(nodes.size()) < m + 1) nodes.insert(random_rational(rng, 20, 6));
    std::vector<Rational> ts(nodes.begin(), nodes.end()), vs;
    for (const auto& x : ts) vs.push_back(f(x));
    REQUIRE(divided_difference_ratio(ts, vs) == f.leading());
  }
}

TEST_CASE("interpolation examples") {
  std::vector<Rational> a{0, 1}, av{1, 2};
  CHECK(interpolate_rational(a, av) == UniPoly{1, 1});
  std::vector<Rational> b{0, 1, 2}, bv{0, 1, 4};
  CHECK(interpolate_rational(b, bv) == UniPoly{0, 0, 1});
  std::vector<Rational> c{0, 1}, cv{make_rational(1, 2), make_rational(1, 3)};
  CHECK(interpolate_rational(c, cv) == UniPoly{make_rational(1, 2), make_rational(-1, 6)});
  std::vector<Rational> d{2, 2}, dv{1, 1};
  CHECK_THROWS_AS(interpolate_rational(d, dv), DomainError);
}

TEST_CASE("interpolation matches Lagrange and recovers polynomials") {
  Rng rng(65);
  for (int t = 0; t < 200; ++t) {
    int m = static_cast<int>(uniform(rng, 0, 6));
    std::set<long> nodes;
    while (static_cast<int>(nodes.size()) < m + 1) nodes.insert(uniform(rng, -15, 15));
    std::vector<Rational> ts(nodes.begin(), nodes.end()), vs;
    for (std::size_t i = 0; i < ts.size(); ++i) vs.push_back(random_rational(rng, 30, 7));
    UniPoly p = interpolate_rational(ts, vs);
    REQUIRE(p == lagrange(ts, vs));
    REQUIRE(p.degree() <= m);
    for (std::size_t i = 0; i < ts.size(); ++i) REQUIRE(p(ts[i]) == vs[i]);

    UniPoly g = random_uni(rng, m, 9, false);
    std::vector<Rational> gv;
    for (const auto& x : ts) gv.push_back(g(x));
    REQUIRE(interpolate_rational(ts, gv) == g);
  }
}
