#include <doctest.h>

#include <set>

#include "hilbertia/kronecker.hpp"
#include "support.hpp"

using namespace hilbertia;
using namespace testing_support;

namespace {

MultiPoly var(std::size_t k, std::size_t i) { return MultiPoly::variable(k, i); }
const BiPoly BX = BiPoly::from_x(UniPoly{0, 1});
const BiPoly BY = BiPoly::monomial(1, 0, 1);

MultiPoly random_vd(Rng& rng, unsigned d, std::size_t k) {
  MultiPoly f(k);
  int terms = static_cast<int>(uniform(rng, 1, 6));
  for (int t = 0; t < terms; ++t) {
    Exponent e(k);
    e[0] = static_cast<unsigned>(uniform(rng, 0, 4));
    for (std::size_t j = 1; j < k; ++j) e[j] = static_cast<unsigned>(uniform(rng, 0, d - 1));
    f.add_term(e, random_rational(rng));
  }
  return f;
}

/// Direct certificate on f(b, X_2, ..., X_k), not the Kronecker factorization.
bool certified_after(const MultiPoly& f, const Rational& b) { return certify_irreducible_multi(specialize_multi(f, 1, b)); }

}  // namespace

TEST_CASE("parameters") {
  CHECK_THROWS_AS(KroneckerParams(1, 3), DomainError);
  CHECK_THROWS_AS(KroneckerParams(2, 2), DomainError);
  CHECK(KroneckerParams(3, 4).y_degree_bound() == 27);
}

TEST_CASE("forward map examples") {
  MultiPoly x1 = var(3, 1), x2 = var(3, 2), x3 = var(3, 3);
  CHECK(kronecker_forward(x1 * x2 * x3, {2, 3}) == BX * BY * BY * BY);
  CHECK(kronecker_forward(x2 + x3, {2, 3}) == BY + BY * BY);
  BiPoly y7 = BY;
  for (int i = 0; i < 6; ++i) y7 = y7 * BY;
  CHECK(kronecker_forward(x1 * x1 + x2 * x3 * x3, {3, 3}) == BX * BX + y7);
  CHECK_THROWS_AS(kronecker_forward(var(4, 1), {2, 3}), DomainError);
}

TEST_CASE("membership") {
  KroneckerParams p(2, 3);
  CHECK_FALSE(in_Vd(var(3, 2) * var(3, 2), p));
  CHECK(in_Vd(var(3, 1) * var(3, 1) * var(3, 1), p));
  BiPoly y3 = BY * BY * BY;
  CHECK(in_Wd(y3, p));
  CHECK_FALSE(in_Wd(y3 * BY, p));
  CHECK(in_Vd(MultiPoly::constant(3, 1), p));
  CHECK(in_Wd(BiPoly::from_x(UniPoly{1}), p));
}

TEST_CASE("inverse map examples") {
  KroneckerParams p(2, 3);
  CHECK(kronecker_inverse(BX * BY * BY * BY, p) == var(3, 1) * var(3, 2) * var(3, 3));
  CHECK(kronecker_inverse(BY * BY * BY, p) == var(3, 2) * var(3, 3));
  CHECK(kronecker_inverse(BiPoly::from_x(UniPoly{7}), p) == MultiPoly::constant(3, 7));
  CHECK_THROWS_AS(kronecker_inverse(BY * BY * BY * BY, p), DomainError);
}

TEST_CASE("roundtrip on random members of V_d") {
  Rng rng(41);
  for (int t = 0; t < 500; ++t) {
    unsigned d = static_cast<unsigned>(uniform(rng, 2, 3));
    std::size_t k = static_cast<std::size_t>(uniform(rng, 3, 4));
    KroneckerParams p(d, k);
    MultiPoly f = random_vd(rng, d, k);
    REQUIRE(in_Vd(f, p));
    BiPoly g = kronecker_forward(f, p);
    REQUIRE(in_Wd(g, p));
    REQUIRE(kronecker_inverse(g, p) == f);
  }
}

TEST_CASE("monomials of V_2 map injectively") {
  KroneckerParams p(2, 3);
  std::set<std::pair<unsigned, unsigned>> images;
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 2; ++b)
      for (unsigned c = 0; c < 2; ++c) {
        MultiPoly m(3);
        m.add_term({a, b, c}, 1);
        BiPoly g = kronecker_forward(m, p);
        REQUIRE(g.degree_x() == static_cast<int>(a));
        images.insert({a, static_cast<unsigned>(g.degree_y())});
        REQUIRE(kronecker_inverse(g, p) == m);
      }
  CHECK(images.size() == 12);
}

TEST_CASE("multiplicativity when the product stays in V_d") {
  Rng rng(42);
  int checked = 0;
  while (checked < 200) {
    unsigned d = static_cast<unsigned>(uniform(rng, 2, 4));
    std::size_t k = static_cast<std::size_t>(uniform(rng, 3, 4));
    KroneckerParams p(d, k);
    MultiPoly f = random_vd(rng, (d + 1) / 2, k), g = random_vd(rng, (d + 1) / 2, k);
    MultiPoly fg = f * g;
    if (!in_Vd(fg, p)) continue;
    REQUIRE(kronecker_forward(fg, p) == kronecker_forward(f, p) * kronecker_forward(g, p));
    ++checked;
  }
}

TEST_CASE("first-variable specialization pipeline") {
  MultiPoly x1 = var(3, 1), x2 = var(3, 2), x3 = var(3, 3);
  MultiPoly f = x3 * x3 - x1 * x2;
  FirstVarSpecialization s = specialize_first_var_irreducible(f, 100);
  CHECK(s.d == 3);
  REQUIRE(s.values.size() >= 10);
  // S_3(f) = Y (Y^5 - X) and Y^5 - 1 splits, so the pipeline passes over
  // b = 1 even though f(1, X2, X3) is irreducible
  CHECK(s.values.front() == 2);
  CHECK(certified_after(f, 1));
  for (const auto& b : s.values) REQUIRE(certified_after(f, b));

  MultiPoly g = x3 * x3 - x1 - x2;
  s = specialize_first_var_irreducible(g, 100);
  REQUIRE(s.values.size() >= 10);
  for (const auto& b : s.values) REQUIRE(certified_after(g, b));
  // b = 0 is valid for this one though the search starts at 1
  CHECK(certified_after(g, 0));

  CHECK_THROWS_AS(specialize_first_var_irreducible(x2 * x3, 50), ReducibleInput);
  try {
    specialize_first_var_irreducible(x2 * x3, 50);
  } catch (const ReducibleInput& e) {
    CHECK_FALSE(e.factor().is_constant());
  }
}

TEST_CASE("pipeline on random irreducible trivariates") {
  Rng rng(43);
  int run = 0;
  for (int t = 0; t < 40 && run < 8; ++t) {
    MultiPoly f = random_multi(rng, 3, 1, 4, 5) + var(3, 3) * var(3, 3);
    if (!certify_irreducible_multi(f)) continue;
    try {
      auto s = specialize_first_var_irreducible(f, 30);
      for (const auto& b : s.values) REQUIRE(certified_after(f, b));
      ++run;
    } catch (const ReducibleInput&) {
      FAIL("certified input reported reducible");
    } catch (const DomainError&) {
    }
  }
  CHECK(run >= 3);
}

TEST_CASE("full specialization") {
  MultiPoly x1 = var(3, 1), x2 = var(3, 2), x3 = var(3, 3);
  MultiPoly p = var(2, 1) * var(2, 2);
  auto b = full_specialization(x3 * x3 - x1 - x2, p, 50);
  REQUIRE(b.size() == 2);
  CHECK(b == std::vector<Rational>{1, 1});

  MultiPoly f2 = var(2, 2) * var(2, 2) - var(2, 1);
  b = full_specialization(f2, MultiPoly::constant(1, 1), 50);
  CHECK(b == std::vector<Rational>{2});

  MultiPoly q = var(2, 1) - MultiPoly::constant(2, 1);
  b = full_specialization(x3 * x3 - x1 * x2, q, 50);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == 2);
  CHECK(q.evaluate(b) != 0);
  MultiPoly last = specialize_multi(specialize_multi(x3 * x3 - x1 * x2, 1, b[0]), 1, b[1]);
  std::vector<Rational> coeffs(3);
  for (const auto& [e, c] : last.terms()) coeffs[e[0]] = c;
  CHECK(is_irreducible_uni(UniPoly(coeffs)));

  CHECK_THROWS_AS(full_specialization(x3 * x3 - x1 - x2, MultiPoly(2), 50), DomainError);
}

TEST_CASE("bivariate view") {
  MultiPoly f = var(2, 2) * var(2, 2) - var(2, 1);
  CHECK(to_bipoly(f) == BY * BY - BX);
  CHECK(from_bipoly(BY * BY - BX) == f);
}
