#include "hilbertia/unipoly.hpp"

#include <algorithm>
#include <map>

namespace hilbertia {

namespace {

using ZVec = std::vector<Integer>;

void trim(ZVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Integer content(const ZVec& v) {
  Integer g = 0;
  for (const auto& c : v) g = gcd(g, c);
  return g;
}

void make_primitive(ZVec& v) {
  Integer g = content(v);
  if (g == 0) return;
  if (v.back() < 0) g = -g;
  for (auto& c : v) c /= g;
}

// lc(b)^(deg a - deg b + 1) * a mod b over Z.
ZVec pseudo_remainder(ZVec a, const ZVec& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (a.size() >= b.size()) {
    Integer la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

std::map<Integer, unsigned> factor_small(Integer n) {
  std::map<Integer, unsigned> out;
  if (n < 0) n = -n;
  for (Integer p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t exponent) {
  std::vector<Rational> v(exponent + 1);
  v[exponent] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& root) {
  return UniPoly(std::vector<Rational>{Rational(-root), Rational(1)});
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

bool UniPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  UniPoly r = *this;
  Rational inv = 1 / leading();
  return r *= inv;
}

UniPoly UniPoly::taylor_shift(const Rational& shift) const {
  // Repeated synthetic division; exact over Q.
  std::vector<Rational> c = coeffs_;
  const std::size_t n = c.size();
  if (sgn(shift) == 0) return *this;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += shift * c[j];
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scale_argument(const Rational& scale) const {
  std::vector<Rational> c = coeffs_;
  Rational p = 1;
  for (auto& x : c) {
    x *= p;
    p *= scale;
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

DivMod poly_divmod(const UniPoly& h, const UniPoly& f) {
  if (f.is_zero()) throw DomainError("poly_divmod: zero divisor");
  if (!f.is_monic()) throw DomainError("poly_divmod: divisor is not monic");
  return divmod(h, f);
}

DivMod divmod(const UniPoly& h, const UniPoly& f) {
  if (f.is_zero()) throw DomainError("divmod: zero divisor");
  std::vector<Rational> r = h.coefficients();
  const auto& fc = f.coefficients();
  const std::size_t df = fc.size() - 1;
  if (r.size() < fc.size()) return {UniPoly{}, h};
  std::vector<Rational> q(r.size() - df);
  const bool monic = fc.back() == 1;
  Rational inv = 1 / fc.back();
  for (std::size_t k = r.size(); k-- > df;) {
    if (sgn(r[k]) == 0) continue;
    Rational t = monic ? r[k] : Rational(r[k] * inv);
    q[k - df] = t;
    for (std::size_t i = 0; i <= df; ++i) r[k - df + i] -= t * fc[i];
  }
  r.resize(df);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

std::optional<UniPoly> try_divide(const UniPoly& h, const UniPoly& f) {
  auto [q, r] = divmod(h, f);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

UniPoly exact_quotient(const UniPoly& h, const UniPoly& f) {
  auto q = try_divide(h, f);
  if (!q) throw DomainError("exact_quotient: division is not exact");
  return *q;
}

IntegerForm primitive_integer_form(const UniPoly& f) {
  if (f.is_zero()) return {Rational(0), {}};
  Integer den = 1;
  for (const auto& c : f.coefficients()) den = lcm(den, c.get_den());
  ZVec z;
  z.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) z.push_back(c.get_num() * (den / c.get_den()));
  Integer g = content(z);
  if (z.back() < 0) g = -g;
  for (auto& c : z) c /= g;
  return {make_rational(g, den), std::move(z)};
}

UniPoly from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& z : coeffs) c.emplace_back(z);
  return UniPoly(std::move(c));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  ZVec x = primitive_integer_form(a).coeffs;
  ZVec y = primitive_integer_form(b).coeffs;
  if (x.size() < y.size()) std::swap(x, y);
  while (y.size() > 1) {
    ZVec r = pseudo_remainder(x, y);
    if (r.empty()) return from_integers(y).monic();
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return UniPoly::constant(1);
}

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
  // Extended Euclid over Q tracking only the coefficient of a.
  UniPoly r0 = m, r1 = divmod(a, m).remainder;
  UniPoly s0, s1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw DomainError("inverse_mod: not invertible");
  return divmod(s0 * (1 / r0.leading()), m).remainder;
}

UniPoly pow(const UniPoly& p, unsigned exponent) {
  UniPoly result = UniPoly::constant(1);
  UniPoly base = p;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

IntegralRescale minpoly_integral_rescale(const UniPoly& m) {
  if (!m.is_monic()) throw DomainError("minpoly_integral_rescale: polynomial is not monic");
  const int n = m.degree();
  if (n < 1) throw DomainError("minpoly_integral_rescale: degree must be at least 1");
  // q | d^(n-i) for each denominator q of b_i: a prime l^e in q forces
  // l^ceil(e/(n-i)) | d.
  std::map<Integer, unsigned long> need;
  for (int i = 0; i < n; ++i) {
    const Integer& q = m.coefficients()[i].get_den();
    if (q == 1) continue;
    const unsigned long gap = static_cast<unsigned long>(n - i);
    for (const auto& [prime, e] : factor_small(q)) {
      unsigned long k = (e + gap - 1) / gap;
      need[prime] = std::max(need[prime], k);
    }
  }
  Integer d = 1;
  for (const auto& [prime, k] : need) d *= ipow(prime, k);
  std::vector<Rational> c(n + 1);
  Integer dp = 1;
  for (int i = n; i >= 0; --i) {
    c[i] = m.coefficients()[i] * dp;
    dp *= d;
  }
  return {d, UniPoly(std::move(c))};
}

}  // namespace hilbertia
