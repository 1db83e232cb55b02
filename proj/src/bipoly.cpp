#include "hilbertia/bipoly.hpp"

#include <algorithm>

namespace hilbertia {

BiPoly::BiPoly(std::vector<UniPoly> y_coeffs) : y_(std::move(y_coeffs)) { normalize(); }

void BiPoly::normalize() {
  while (!y_.empty() && y_.back().is_zero()) y_.pop_back();
}

BiPoly BiPoly::from_x(const UniPoly& a) { return BiPoly(std::vector<UniPoly>{a}); }

BiPoly BiPoly::from_y(const UniPoly& p) {
  std::vector<UniPoly> y;
  y.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) y.push_back(UniPoly::constant(c));
  return BiPoly(std::move(y));
}

BiPoly BiPoly::monomial(const Rational& c, std::size_t x_exp, std::size_t y_exp) {
  std::vector<UniPoly> y(y_exp + 1);
  y[y_exp] = UniPoly::monomial(c, x_exp);
  return BiPoly(std::move(y));
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& a : y_) d = std::max(d, a.degree());
  return d;
}

BiPoly BiPoly::derivative_y() const {
  if (y_.size() <= 1) return {};
  std::vector<UniPoly> d(y_.size() - 1);
  for (std::size_t j = 1; j < y_.size(); ++j) d[j - 1] = y_[j] * Rational(static_cast<unsigned long>(j));
  return BiPoly(std::move(d));
}

BiPoly BiPoly::shift_x(const Rational& shift) const {
  std::vector<UniPoly> y;
  y.reserve(y_.size());
  for (const auto& a : y_) y.push_back(a.taylor_shift(shift));
  return BiPoly(std::move(y));
}

BiPoly BiPoly::shift_y(const Rational& shift) const {
  // Horner in Y with the substitution Y -> Y + shift.
  BiPoly acc;
  const BiPoly lin(std::vector<UniPoly>{UniPoly::constant(shift), UniPoly::constant(1)});
  for (auto it = y_.rbegin(); it != y_.rend(); ++it) acc = acc * lin + from_x(*it);
  return acc;
}

BiPoly BiPoly::truncate_x(std::size_t precision) const {
  std::vector<UniPoly> y;
  y.reserve(y_.size());
  for (const auto& a : y_) {
    const auto& c = a.coefficients();
    y.emplace_back(std::vector<Rational>(c.begin(), c.begin() + std::min(c.size(), precision)));
  }
  return BiPoly(std::move(y));
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& a : r.y_) a = -a;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.y_.size() > y_.size()) y_.resize(o.y_.size());
  for (std::size_t j = 0; j < o.y_.size(); ++j) y_[j] += o.y_[j];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.y_.size() > y_.size()) y_.resize(o.y_.size());
  for (std::size_t j = 0; j < o.y_.size(); ++j) y_[j] -= o.y_[j];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator*=(const UniPoly& c) {
  for (auto& a : y_) a *= c;
  normalize();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UniPoly> c(a.y_.size() + b.y_.size() - 1);
  for (std::size_t i = 0; i < a.y_.size(); ++i) {
    if (a.y_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.y_.size(); ++j) c[i + j] += a.y_[i] * b.y_[j];
  }
  return BiPoly(std::move(c));
}

UniPoly specialize(const BiPoly& f, const Rational& b) {
  std::vector<Rational> c;
  c.reserve(f.y_coefficients().size());
  for (const auto& a : f.y_coefficients()) c.push_back(a(b));
  return UniPoly(std::move(c));
}

UniPoly content_y(const BiPoly& f) {
  if (f.is_zero()) throw DomainError("content_y: zero polynomial");
  UniPoly g;
  for (const auto& a : f.y_coefficients()) {
    g = gcd(g, a);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly primitive_part_y(const BiPoly& f) {
  const UniPoly c = content_y(f);
  if (c.degree() == 0) return f;
  std::vector<UniPoly> y;
  y.reserve(f.y_coefficients().size());
  for (const auto& a : f.y_coefficients()) y.push_back(exact_quotient(a, c));
  return BiPoly(std::move(y));
}

std::optional<BiPoly> try_divide(const BiPoly& f, const BiPoly& g) {
  if (g.is_zero()) throw DomainError("try_divide: zero divisor");
  std::vector<UniPoly> r = f.y_coefficients();
  const auto& gc = g.y_coefficients();
  const std::size_t dg = gc.size() - 1;
  if (r.empty()) return BiPoly{};
  if (r.size() < gc.size()) return std::nullopt;
  std::vector<UniPoly> q(r.size() - dg);
  for (std::size_t k = r.size(); k-- > dg;) {
    if (r[k].is_zero()) continue;
    auto t = try_divide(r[k], gc.back());
    if (!t) return std::nullopt;
    for (std::size_t i = 0; i <= dg; ++i) r[k - dg + i] -= *t * gc[i];
    q[k - dg] = std::move(*t);
  }
  for (std::size_t i = 0; i < dg; ++i) {
    if (!r[i].is_zero()) return std::nullopt;
  }
  return BiPoly(std::move(q));
}

BiPoly pseudo_remainder(const BiPoly& f, const BiPoly& g) {
  if (g.is_zero()) throw DomainError("pseudo_remainder: zero divisor");
  std::vector<UniPoly> r = f.y_coefficients();
  const auto& gc = g.y_coefficients();
  const UniPoly& lg = gc.back();
  const std::size_t dg = gc.size() - 1;
  int steps = f.degree_y() - g.degree_y() + 1;
  while (r.size() >= gc.size()) {
    UniPoly lr = r.back();
    const std::size_t shift = r.size() - gc.size();
    for (auto& c : r) c *= lg;
    for (std::size_t i = 0; i <= dg; ++i) r[i + shift] -= lr * gc[i];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    --steps;
  }
  BiPoly rem(std::move(r));
  // Keep the classical normalization lc^(deg f - deg g + 1).
  if (steps > 0) rem *= pow(lg, static_cast<unsigned>(steps));
  return rem;
}

Rational normalize_leading(BiPoly& f) {
  if (f.is_zero()) return Rational(1);
  Rational lc = f.leading().leading();
  f = f * Rational(1 / lc);
  return lc;
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) {
    BiPoly r = b;
    normalize_leading(r);
    return r;
  }
  if (b.is_zero()) {
    BiPoly r = a;
    normalize_leading(r);
    return r;
  }
  const UniPoly cont = gcd(content_y(a), content_y(b));
  BiPoly x = primitive_part_y(a);
  BiPoly y = primitive_part_y(b);
  if (x.degree_y() < y.degree_y()) std::swap(x, y);
  while (y.degree_y() > 0) {
    BiPoly r = pseudo_remainder(x, y);
    if (r.is_zero()) break;
    x = std::move(y);
    y = primitive_part_y(r);
  }
  BiPoly g = y.degree_y() > 0 ? y : BiPoly::from_x(UniPoly::constant(1));
  g *= cont;
  normalize_leading(g);
  return g;
}

std::vector<std::pair<BiPoly, unsigned>> squarefree_decomposition_y(const BiPoly& f) {
  std::vector<std::pair<BiPoly, unsigned>> out;
  if (f.degree_y() < 1) return out;
  BiPoly fp = f.derivative_y();
  BiPoly a = gcd(f, fp);
  BiPoly b = *try_divide(f, a);
  BiPoly c = *try_divide(fp, a);
  BiPoly d = c - b.derivative_y();
  for (unsigned i = 1; b.degree_y() > 0; ++i) {
    BiPoly ai = gcd(b, d);
    BiPoly bn = *try_divide(b, ai);
    BiPoly cn = *try_divide(d, ai);
    d = cn - bn.derivative_y();
    if (ai.degree_y() > 0) out.emplace_back(std::move(ai), i);
    b = std::move(bn);
  }
  return out;
}

}  // namespace hilbertia
