#include "hilbertia/factorize.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "modular.hpp"

namespace hilbertia {

namespace {

using modular::FpPoly;
using modular::ZPoly;

bool coeff_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return false;
}

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_probable_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Exact quotient a / b in Z[X], nullopt when b does not divide a.
std::optional<ZPoly> divide_z(const ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  ZPoly q(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer t = r[k] / b.back();
    q[k - db] = t;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= t * b[i];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return q;
}

void make_primitive(ZPoly& v) {
  Integer g = 0;
  for (const auto& c : v) g = gcd(g, c);
  if (v.back() < 0) g = -g;
  for (auto& c : v) c /= g;
}

// Irreducible primitive factors of a squarefree primitive F in Z[X] with
// deg F >= 2 and lc(F) > 0.
std::vector<ZPoly> zassenhaus(ZPoly F) {
  const int n = static_cast<int>(F.size()) - 1;
  std::uint64_t p = 5;
  std::vector<FpPoly> local;
  std::mt19937_64 rng(0x5eed);
  for (;; ++p) {
    if (!is_probable_prime(p)) continue;
    const modular::PrimeField fp(p);
    if (fp.reduce(F.back()) == 0) continue;
    FpPoly fbar = fp.from_integers(F);
    if (modular::degree(fp.gcd(fbar, fp.derivative(fbar))) != 0) continue;
    local = fp.factor_squarefree(fbar, rng);
    break;
  }
  if (local.size() == 1) return {F};

  // Any lc(F)/lc(h) * h for h | F has coefficients below |lc| 2^n ||F||_2.
  Integer norm2 = 0;
  for (const auto& c : F) norm2 += c * c;
  Integer bound = sqrt(norm2) + 1;
  bound *= abs(F.back());
  bound <<= static_cast<unsigned long>(n);
  bound *= 2;
  const Integer pz(static_cast<unsigned long>(p));
  unsigned levels = 1;
  while (ipow(pz, 1UL << levels) <= bound) ++levels;
  const Integer modulus = ipow(pz, 1UL << levels);
  const modular::ResidueRing ring(modulus);

  std::vector<ZPoly> lifted = modular::hensel_lift(F, local, p, levels);
  std::vector<ZPoly> found;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      ZPoly cand{F.back()};
      for (auto i : idx) cand = ring.mul(cand, lifted[i]);
      cand = ring.symmetric(cand);
      make_primitive(cand);
      if (auto q = divide_z(F, cand)) {
        found.push_back(cand);
        F = std::move(*q);
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
          lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(*it));
        }
        hit = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == lifted.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (F.size() > 1) {
    make_primitive(F);
    found.push_back(F);
  }
  return found;
}

// Monic irreducible factors of a monic squarefree f over Q.
std::vector<UniPoly> factor_squarefree_rational(const UniPoly& f) {
  if (f.degree() <= 1) return {f};
  IntegerForm form = primitive_integer_form(f);
  std::vector<UniPoly> out;
  for (const auto& z : zassenhaus(form.coeffs)) out.push_back(from_integers(z).monic());
  return out;
}

// Yun's algorithm over Q on a monic f.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f) {
  std::vector<std::pair<UniPoly, unsigned>> out;
  UniPoly fp = f.derivative();
  UniPoly a = gcd(f, fp);
  UniPoly b = exact_quotient(f, a);
  UniPoly c = exact_quotient(fp, a);
  UniPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    UniPoly ai = gcd(b, d);
    UniPoly bn = exact_quotient(b, ai);
    d = exact_quotient(d, ai) - bn.derivative();
    if (ai.degree() > 0) out.emplace_back(std::move(ai), i);
    b = std::move(bn);
  }
  return out;
}

}  // namespace

UniPoly Factorization::expand() const {
  UniPoly r = UniPoly::constant(unit);
  for (const auto& f : factors) r *= pow(f.poly, f.multiplicity);
  return r;
}

std::vector<Rational> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw DomainError("rational_roots: zero polynomial");
  std::vector<Integer> z = primitive_integer_form(f).coeffs;
  std::vector<Rational> roots;
  std::size_t shift = 0;
  while (shift < z.size() && z[shift] == 0) ++shift;
  if (shift > 0) {
    roots.emplace_back(0);
    z.erase(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (z.size() >= 2) {
    const UniPoly g = from_integers(z);
    for (const auto& num : divisors(z.front())) {
      for (const auto& den : divisors(z.back())) {
        if (gcd(num, den) != 1) continue;
        for (int sign : {-1, 1}) {
          Rational r = make_rational(num * sign, den);
          if (sgn(g(r)) == 0) roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Factorization factor_unipoly(const UniPoly& f) {
  if (f.is_zero()) throw DomainError("factor_unipoly: zero polynomial");
  Factorization out;
  out.unit = f.leading();
  if (f.degree() == 0) return out;
  for (const auto& [part, mult] : squarefree_decomposition(f.monic())) {
    for (auto& g : factor_squarefree_rational(part)) out.factors.push_back({std::move(g), mult});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return coeff_less(a.poly, b.poly); });
  return out;
}

bool is_irreducible_uni(const UniPoly& f) {
  if (f.is_zero()) throw DomainError("is_irreducible_uni: zero polynomial");
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const Factorization fa = factor_unipoly(f);
  return fa.factors.size() == 1 && fa.factors.front().multiplicity == 1;
}

}  // namespace hilbertia
