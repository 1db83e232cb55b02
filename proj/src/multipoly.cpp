#include "hilbertia/multipoly.hpp"

#include <algorithm>
#include <string>

namespace hilbertia {

MultiPoly MultiPoly::constant(std::size_t variable_count, const Rational& c) {
  MultiPoly p(variable_count);
  p.add_term(Exponent(variable_count, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t variable_count, std::size_t index) {
  if (index < 1 || index > variable_count) throw DomainError("variable index out of range");
  MultiPoly p(variable_count);
  Exponent e(variable_count, 0);
  e[index - 1] = 1;
  p.add_term(e, Rational(1));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponent(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& exponent, const Rational& c) {
  if (exponent.size() != nvars_) throw DomainError("exponent length does not match variable count");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int MultiPoly::degree_in(std::size_t index) const {
  if (index < 1 || index > nvars_) throw DomainError("variable index out of range");
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[index - 1]));
  return d;
}

int MultiPoly::max_variable_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    for (unsigned x : e) d = std::max(d, static_cast<int>(x));
  }
  return d;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DomainError("evaluation point has wrong dimension");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) t *= qpow(point[i], e[i]);
    }
    acc += t;
  }
  return acc;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (o.nvars_ != nvars_) {
    throw DomainError("variable count mismatch: " + std::to_string(nvars_) + " vs " +
                      std::to_string(o.nvars_));
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, Rational(ca * cb));
    }
  }
  return r;
}

MultiPoly specialize_multi(const MultiPoly& f, std::size_t index, const Rational& b) {
  const std::size_t k = f.variable_count();
  if (index < 1 || index > k) throw DomainError("specialize_multi: index out of range");
  MultiPoly r(k - 1);
  Exponent e(k - 1);
  for (const auto& [ex, c] : f.terms()) {
    for (std::size_t i = 0, j = 0; i < k; ++i) {
      if (i != index - 1) e[j++] = ex[i];
    }
    r.add_term(e, Rational(c * qpow(b, ex[index - 1])));
  }
  return r;
}

}  // namespace hilbertia
