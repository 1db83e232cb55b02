#include <doctest.h>

#include "hilbertia/bipoly.hpp"
#include "hilbertia/multipoly.hpp"
#include "hilbertia/unipoly.hpp"
#include "support.hpp"

using namespace hilbertia;
using namespace testing_support;

namespace {

const UniPoly X{0, 1};
BiPoly bx(const UniPoly& p) { return BiPoly::from_x(p); }
const BiPoly BX = BiPoly::from_x(X);
const BiPoly BY = BiPoly::monomial(1, 0, 1);

}  // namespace

TEST_CASE("rationals stay reduced") {
  Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(make_rational(0, 7).get_den() == 1);
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK(to_string(make_rational(-7, 21)) == "-1/3");
  CHECK(ceil(make_rational(7, 2)) == 4);
  CHECK(floor(make_rational(-7, 2)) == -4);
  Rational r;
  CHECK(is_square(make_rational(9, 4), &r));
  CHECK(r == make_rational(3, 2));
  CHECK_FALSE(is_square(Rational(2)));
  CHECK_FALSE(is_square(Rational(-4)));
}

TEST_CASE("unipoly arithmetic") {
  CHECK((X + UniPoly{1}) * (X - UniPoly{1}) == UniPoly{-1, 0, 1});
  UniPoly f{3, 0, 2};
  CHECK(f + UniPoly{} == f);
  CHECK((f - f).is_zero());
  CHECK(UniPoly{}.degree() == -1);
  CHECK(UniPoly{0, 0, 0}.is_zero());
  CHECK(f.derivative() == UniPoly{0, 4});
  CHECK(f(Rational(2)) == 11);
  CHECK(f.taylor_shift(1) == UniPoly{5, 4, 2});
  CHECK(pow(X + UniPoly{1}, 3) == UniPoly{1, 3, 3, 1});
}

TEST_CASE("monic division") {
  auto d = poly_divmod(UniPoly{1, 0, 1}, X);
  CHECK(d.quotient == X);
  CHECK(d.remainder == UniPoly{1});
  d = poly_divmod(UniPoly{0, 0, 0, 1}, UniPoly{-1, 1});
  CHECK(d.quotient == UniPoly{1, 1, 1});
  CHECK(d.remainder == UniPoly{1});
  UniPoly f{2, -3, 1};
  d = poly_divmod(f, f);
  CHECK(d.quotient == UniPoly{1});
  CHECK(d.remainder.is_zero());
  CHECK_THROWS_AS(poly_divmod(f, UniPoly{1, 2}), DomainError);
  CHECK_THROWS_AS(poly_divmod(f, UniPoly{}), DomainError);
}

TEST_CASE("monic division property, integral coefficients preserved") {
  Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    UniPoly f = random_monic(rng, static_cast<int>(uniform(rng, 1, 5)));
    UniPoly h = random_uni(rng, static_cast<int>(uniform(rng, 0, 9)));
    auto d = poly_divmod(h, f);
    REQUIRE(f * d.quotient + d.remainder == h);
    REQUIRE(d.remainder.degree() < f.degree());
    for (const auto& c : d.quotient.coefficients()) REQUIRE(is_integer(c));
    for (const auto& c : d.remainder.coefficients()) REQUIRE(is_integer(c));
  }
}

TEST_CASE("gcd is monic and divides") {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    UniPoly c = random_uni(rng, static_cast<int>(uniform(rng, 0, 3)), 5, false);
    UniPoly a = random_uni(rng, static_cast<int>(uniform(rng, 0, 4)), 5, false) * c;
    UniPoly b = random_uni(rng, static_cast<int>(uniform(rng, 0, 4)), 5, false) * c;
    UniPoly g = gcd(a, b);
    REQUIRE(g.is_monic());
    REQUIRE(divmod(a, g).remainder.is_zero());
    REQUIRE(divmod(b, g).remainder.is_zero());
    REQUIRE(divmod(g, c.monic()).remainder.is_zero());
  }
  CHECK(gcd(UniPoly{}, UniPoly{}).is_zero());
}

TEST_CASE("bivariate arithmetic and specialization") {
  CHECK((BY - BX) * (BY + BX) == BY * BY - BX * BX);
  BiPoly f = BY * BY - BX;
  CHECK(specialize(f, 4) == UniPoly{-4, 0, 1});
  CHECK(specialize(BX * BY + bx(UniPoly{1}), 0) == UniPoly{1});
  CHECK(specialize(bx(UniPoly{1, 0, 1}) * BY * BY * BY, 2) == UniPoly{0, 0, 0, 5});
  CHECK(f + BiPoly{} == f);
  CHECK(f.degree_y() == 2);
  CHECK(f.degree_x() == 1);
}

TEST_CASE("specialization is a ring homomorphism") {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    BiPoly f = random_bi(rng, static_cast<int>(uniform(rng, 0, 3)), 3);
    BiPoly g = random_bi(rng, static_cast<int>(uniform(rng, 0, 3)), 3);
    Rational b = random_rational(rng);
    REQUIRE(specialize(f * g, b) == specialize(f, b) * specialize(g, b));
    REQUIRE(specialize(f + g, b) == specialize(f, b) + specialize(g, b));
  }
}

TEST_CASE("content and primitive part") {
  BiPoly f = BX * BY * BY - BX * BX * BX;
  CHECK(content_y(f) == X);
  CHECK(primitive_part_y(f) == BY * BY - BX * BX);
  CHECK(content_y(BY * BY - BX) == UniPoly{1});
  BiPoly g = bx(UniPoly{0, 1, 1}) * BY + bx(UniPoly{1, 1});
  CHECK(content_y(g) == UniPoly{1, 1});
  CHECK(primitive_part_y(g) == BX * BY + bx(UniPoly{1}));
  CHECK_THROWS_AS(content_y(BiPoly{}), DomainError);
}

TEST_CASE("content times primitive part reassembles") {
  Rng rng(14);
  for (int t = 0; t < 500; ++t) {
    BiPoly f = random_bi(rng, static_cast<int>(uniform(rng, 0, 4)), 4);
    if (uniform(rng, 0, 1)) f = f * random_uni(rng, static_cast<int>(uniform(rng, 1, 2)), 3);
    UniPoly c = content_y(f);
    REQUIRE(c.is_monic());
    REQUIRE(c * primitive_part_y(f) == f);
  }
}

TEST_CASE("multivariate arithmetic") {
  MultiPoly x1 = MultiPoly::variable(3, 1), x2 = MultiPoly::variable(3, 2), x3 = MultiPoly::variable(3, 3);
  MultiPoly f = x3 * x3 - x1 * x2;
  CHECK(f.degree_in(3) == 2);
  CHECK(f.max_variable_degree() == 2);
  MultiPoly g = specialize_multi(f, 1, 1);
  CHECK(g.variable_count() == 2);
  MultiPoly y1 = MultiPoly::variable(2, 1), y2 = MultiPoly::variable(2, 2);
  CHECK(g == y2 * y2 - y1);
  CHECK(specialize_multi(x1, 1, 7) == MultiPoly::constant(2, 7));
  CHECK(specialize_multi(x2 + x3, 1, 5) == y1 + y2);
  CHECK_THROWS_AS(specialize_multi(f, 4, 1), DomainError);
  CHECK_THROWS_AS(f + y1, DomainError);
  CHECK((f - f).is_zero());
  std::vector<Rational> pt{2, 3, 4};
  CHECK(f.evaluate(pt) == 10);
}

TEST_CASE("minimal polynomial rescaling") {
  auto r = minpoly_integral_rescale(UniPoly{make_rational(1, 3), make_rational(1, 2), 1});
  CHECK(r.d == 6);
  CHECK(r.poly == UniPoly{12, 3, 1});
  r = minpoly_integral_rescale(UniPoly{make_rational(-1, 2), 1});
  CHECK(r.d == 2);
  CHECK(r.poly == UniPoly{-1, 1});
  r = minpoly_integral_rescale(UniPoly{1, 1, 0, 1});
  CHECK(r.d == 1);
  CHECK(r.poly == UniPoly{1, 1, 0, 1});
  CHECK_THROWS_AS(minpoly_integral_rescale(UniPoly{1, 2}), DomainError);
}

TEST_CASE("rescaling is integral, minimal and inverts") {
  Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    int n = static_cast<int>(uniform(rng, 1, 4));
    std::vector<Rational> c;
    for (int i = 0; i < n; ++i) c.push_back(random_rational(rng, 9, 12));
    c.push_back(1);
    UniPoly m(c);
    auto r = minpoly_integral_rescale(m);
    REQUIRE(r.poly.is_monic());
    for (const auto& x : r.poly.coefficients()) REQUIRE(is_integer(x));
    Rational dn = qpow(Rational(r.d), static_cast<unsigned long>(n));
    REQUIRE(r.poly.scale_argument(Rational(r.d)) == m * dn);
    for (Integer d = 1; d < r.d; ++d) {
      bool integral = true;
      for (int i = 0; i < n && integral; ++i)
        integral = is_integer(m.coeff(i) * qpow(Rational(d), static_cast<unsigned long>(n - i)));
      REQUIRE_FALSE(integral);
    }
  }
}
