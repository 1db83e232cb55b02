#include <algorithm>
#include <numeric>

#include "hilbertia/factorize.hpp"
#include "hilbertia/resultant.hpp"

namespace hilbertia {

namespace {

bool uni_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return false;
}

bool bi_less(const BiPoly& a, const BiPoly& b) {
  if (a.degree_y() != b.degree_y()) return a.degree_y() < b.degree_y();
  if (a.degree_x() != b.degree_x()) return a.degree_x() < b.degree_x();
  const auto& ya = a.y_coefficients();
  const auto& yb = b.y_coefficients();
  for (std::size_t j = 0; j < ya.size(); ++j) {
    if (ya[j] != yb[j]) return uni_less(ya[j], yb[j]);
  }
  return false;
}

// 1 / a mod z^precision; a(0) != 0.
UniPoly series_inverse(const UniPoly& a, std::size_t precision) {
  std::vector<Rational> inv(precision);
  const Rational a0inv = 1 / a.coeff(0);
  for (std::size_t k = 0; k < precision; ++k) {
    Rational acc = k == 0 ? Rational(1) : Rational(0);
    for (std::size_t i = 1; i <= k; ++i) acc -= a.coeff(i) * inv[k - i];
    inv[k] = acc * a0inv;
  }
  return UniPoly(std::move(inv));
}

// Y-polynomial made of the z^k coefficients of g.
UniPoly z_slice(const BiPoly& g, std::size_t k) {
  std::vector<Rational> c;
  for (const auto& a : g.y_coefficients()) c.push_back(a.coeff(k));
  return UniPoly(std::move(c));
}

BiPoly times_z_power(const UniPoly& y_poly, std::size_t k) {
  std::vector<UniPoly> y;
  for (const auto& c : y_poly.coefficients()) y.push_back(UniPoly::monomial(c, k));
  return BiPoly(std::move(y));
}

int count_factors(const UniPoly& f) { return static_cast<int>(factor_unipoly(f).factors.size()); }

// Irreducible factors of F, primitive in Y and squarefree, deg_Y F >= 1.
std::vector<BiPoly> factor_squarefree_bi(const BiPoly& F) {
  const int n = F.degree_y();
  if (n == 1) return {F};
  if (F.degree_x() == 0) {
    std::vector<BiPoly> out;
    for (const auto& fac : factor_unipoly(specialize(F, Rational(0))).factors) {
      out.push_back(BiPoly::from_y(fac.poly));
    }
    return out;
  }
  const UniPoly disc = discriminant_y(F);

  // Regular point whose specialization has the fewest factors among the
  // first few admissible candidates 0, 1, -1, 2, -2, ...
  std::optional<Rational> best;
  int best_count = 0;
  int admissible = 0;
  for (long k = 0; admissible < 6; ++k) {
    const Rational b((k % 2 == 0) ? -(k / 2) : (k + 1) / 2);
    if (!is_regular_value(F, disc, b).is_regular) continue;
    ++admissible;
    const int c = count_factors(specialize(F, b));
    if (c == 1) return {F};
    if (!best || c < best_count) {
      best = b;
      best_count = c;
    }
  }
  const Rational b = *best;
  const BiPoly G = F.shift_x(b);
  const std::size_t precision = static_cast<std::size_t>(F.degree_x()) + 1;

  // Monic (in Y) power-series version of G.
  const UniPoly lc_inv = series_inverse(G.leading(), precision);
  std::vector<UniPoly> m_coeffs;
  for (int j = 0; j < n; ++j) {
    UniPoly c = G.coeff(static_cast<std::size_t>(j)) * lc_inv;
    const auto& v = c.coefficients();
    m_coeffs.emplace_back(std::vector<Rational>(v.begin(), v.begin() + std::min(v.size(), precision)));
  }
  m_coeffs.push_back(UniPoly::constant(1));
  const BiPoly M(std::move(m_coeffs));

  std::vector<UniPoly> base;
  for (const auto& fac : factor_unipoly(specialize(M, Rational(0))).factors) base.push_back(fac.poly);
  const std::size_t r = base.size();

  // Partial-fraction multipliers: sum_i s_i prod_{j != i} base_j = 1.
  std::vector<UniPoly> cofactor(r, UniPoly::constant(1)), s(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (j != i) cofactor[i] *= base[j];
    }
    s[i] = inverse_mod(cofactor[i], base[i]);
  }

  std::vector<BiPoly> g;
  for (const auto& p : base) g.push_back(BiPoly::from_y(p));
  for (std::size_t k = 1; k < precision; ++k) {
    BiPoly prod = BiPoly::from_x(UniPoly::constant(1));
    for (const auto& gi : g) prod = (prod * gi).truncate_x(k + 1);
    const UniPoly err = z_slice(M - prod, k);
    if (err.is_zero()) continue;
    for (std::size_t i = 0; i < r; ++i) {
      const UniPoly delta = divmod(err * s[i], base[i]).remainder;
      g[i] += times_z_power(delta, k);
    }
  }

  // Recombination by trial division.
  std::vector<BiPoly> found;
  BiPoly current = G;
  std::size_t sz = 1;
  while (2 * sz <= g.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(sz);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      BiPoly cand = BiPoly::from_x(current.leading());
      for (auto i : idx) cand = (cand * g[i]).truncate_x(precision);
      cand = primitive_part_y(cand);
      if (auto q = try_divide(current, cand)) {
        found.push_back(cand);
        current = std::move(*q);
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
          g.erase(g.begin() + static_cast<std::ptrdiff_t>(*it));
        }
        hit = true;
        break;
      }
      std::size_t k = sz;
      while (k > 0 && idx[k - 1] == g.size() - sz + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < sz; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++sz;
  }
  if (current.degree_y() > 0) found.push_back(current);

  for (auto& h : found) h = h.shift_x(Rational(-b));
  return found;
}

}  // namespace

BiPoly BiFactorization::expand() const {
  BiPoly r = BiPoly::from_x(x_part);
  for (const auto& f : factors) r = r * f;
  return r;
}

BiFactorization factor_bipoly_small(const BiPoly& f) {
  if (f.is_zero()) throw DomainError("factor_bipoly_small: zero polynomial");
  if (f.degree_y() > kBiFactorMaxDegreeY || f.degree_x() > kBiFactorMaxDegreeX) {
    throw DegreeBoundExceeded("factor_bipoly_small: degree bound exceeded (deg_Y <= 6, deg_X <= 12)");
  }
  BiFactorization out;
  const BiPoly pp = primitive_part_y(f);
  if (pp.degree_y() == 0) {
    out.x_part = f.coeff(0);
    return out;
  }
  BiPoly product = BiPoly::from_x(UniPoly::constant(1));
  for (const auto& [part, mult] : squarefree_decomposition_y(pp)) {
    for (auto& h : factor_squarefree_bi(primitive_part_y(part))) {
      normalize_leading(h);
      for (unsigned i = 0; i < mult; ++i) {
        out.factors.push_back(h);
        product = product * h;
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), bi_less);
  out.x_part = exact_quotient(f.leading(), product.leading());
  if (!(out.expand() == f)) throw DomainError("factor_bipoly_small: internal reassembly mismatch");
  return out;
}

BiIrredCertificate is_irreducible_bi(const BiPoly& f, int search_budget) {
  if (search_budget <= 0) throw DomainError("is_irreducible_bi: budget must be positive");
  if (f.is_zero()) throw DomainError("is_irreducible_bi: zero polynomial");
  BiIrredCertificate cert;
  if (f.degree_y() == 0) return cert;
  const UniPoly content = content_y(f);
  if (content.degree() > 0) {
    cert.verdict = BiVerdict::Reducible;
    cert.reducible_witness = std::make_pair(BiPoly::from_x(content), primitive_part_y(f));
    return cert;
  }
  cert.content_ok = true;
  const int n = f.degree_y();
  auto witness = [&](long b) {
    const UniPoly fb = specialize(f, Rational(b));
    return fb.degree() == n && is_irreducible_uni(fb);
  };
  for (long b = 0; b < search_budget; ++b) {
    if (witness(b)) {
      cert.verdict = BiVerdict::Irreducible;
      cert.witness_b = Rational(b);
      return cert;
    }
  }
  const BiFactorization fa = factor_bipoly_small(f);
  if (fa.factors.size() >= 2) {
    cert.verdict = BiVerdict::Reducible;
    const BiPoly& first = fa.factors.front();
    cert.reducible_witness = std::make_pair(first, *try_divide(f, first));
    return cert;
  }
  constexpr long kWitnessCap = 10000;
  for (long b = search_budget; b < kWitnessCap; ++b) {
    if (witness(b)) {
      cert.verdict = BiVerdict::Irreducible;
      cert.witness_b = Rational(b);
      return cert;
    }
  }
  throw DomainError("is_irreducible_bi: irreducible by factorization but no witness below cap");
}

}  // namespace hilbertia
