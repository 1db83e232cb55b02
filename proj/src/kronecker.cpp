#include "hilbertia/kronecker.hpp"

#include "hilbertia/hilbert.hpp"

namespace hilbertia {

namespace {

UniPoly to_unipoly(const MultiPoly& f) {
  if (f.variable_count() != 1) throw DomainError("expected a polynomial in one variable");
  std::vector<Rational> c(static_cast<std::size_t>(std::max(f.degree_in(1), 0)) + 1);
  for (const auto& [e, x] : f.terms()) c[e[0]] = x;
  return UniPoly(std::move(c));
}

MultiPoly x1_poly(const UniPoly& a, std::size_t k) {
  MultiPoly r(k);
  Exponent e(k, 0);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    e[0] = static_cast<unsigned>(i);
    r.add_term(e, a.coefficients()[i]);
  }
  return r;
}

}  // namespace

KroneckerParams::KroneckerParams(unsigned base, std::size_t variables) : d(base), k(variables) {
  if (d < 2) throw DomainError("Kronecker base d must be at least 2");
  if (k < 3) throw DomainError("Kronecker map needs k >= 3 variables");
}

unsigned long KroneckerParams::y_degree_bound() const {
  unsigned long bound = 1;
  for (std::size_t i = 1; i < k; ++i) bound *= d;
  return bound;
}

BiPoly kronecker_forward(const MultiPoly& f, const KroneckerParams& params) {
  if (f.variable_count() != params.k) {
    throw DomainError("kronecker_forward: polynomial has " + std::to_string(f.variable_count()) +
                      " variables, expected " + std::to_string(params.k));
  }
  BiPoly out;
  for (const auto& [e, c] : f.terms()) {
    unsigned long y_exp = 0, weight = 1;
    for (std::size_t j = 1; j < params.k; ++j) {
      y_exp += e[j] * weight;
      weight *= params.d;
    }
    out += BiPoly::monomial(c, e[0], y_exp);
  }
  return out;
}

bool in_Vd(const MultiPoly& f, const KroneckerParams& params) {
  if (f.variable_count() != params.k) return false;
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t j = 1; j < params.k; ++j) {
      if (e[j] >= params.d) return false;
    }
  }
  return true;
}

bool in_Wd(const BiPoly& g, const KroneckerParams& params) {
  return g.degree_y() < static_cast<long>(params.y_degree_bound());
}

MultiPoly kronecker_inverse(const BiPoly& g, const KroneckerParams& params) {
  if (!in_Wd(g, params)) throw DomainError("kronecker_inverse: Y-degree reaches d^(k-1)");
  MultiPoly out(params.k);
  Exponent e(params.k, 0);
  const auto& ys = g.y_coefficients();
  for (std::size_t s = 0; s < ys.size(); ++s) {
    unsigned long rest = s;
    for (std::size_t j = 1; j < params.k; ++j) {
      e[j] = static_cast<unsigned>(rest % params.d);
      rest /= params.d;
    }
    const auto& xs = ys[s].coefficients();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      e[0] = static_cast<unsigned>(i);
      out.add_term(e, xs[i]);
    }
  }
  return out;
}

BiPoly to_bipoly(const MultiPoly& f) {
  if (f.variable_count() != 2) throw DomainError("expected a polynomial in two variables");
  BiPoly out;
  for (const auto& [e, c] : f.terms()) out += BiPoly::monomial(c, e[0], e[1]);
  return out;
}

MultiPoly from_bipoly(const BiPoly& g) {
  MultiPoly out(2);
  const auto& ys = g.y_coefficients();
  for (std::size_t j = 0; j < ys.size(); ++j) {
    const auto& xs = ys[j].coefficients();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j)}, xs[i]);
    }
  }
  return out;
}

bool certify_irreducible_multi(const MultiPoly& f, int budget) {
  const std::size_t m = f.variable_count();
  if (m == 0 || f.degree_in(m) <= 0) return false;
  if (m == 1) return is_irreducible_uni(to_unipoly(f));
  if (m == 2) {
    try {
      return is_irreducible_bi(to_bipoly(f), budget).verdict == BiVerdict::Irreducible;
    } catch (const DomainError&) {
      return false;
    }
  }
  // Coefficients with respect to the last variable.
  const auto top = static_cast<unsigned>(f.degree_in(m));
  std::vector<MultiPoly> coeffs(top + 1, MultiPoly(m - 1));
  for (const auto& [e, c] : f.terms()) {
    coeffs[e[m - 1]].add_term(Exponent(e.begin(), e.end() - 1), c);
  }
  bool trivial_content = false;
  for (const auto& c : coeffs) {
    if (!c.is_zero() && c.is_constant()) trivial_content = true;
  }
  if (!trivial_content && m - 1 == 2) {
    BiPoly g;
    for (const auto& c : coeffs) g = gcd(g, to_bipoly(c));
    trivial_content = g.degree_y() == 0 && g.degree_x() == 0;
  }
  if (!trivial_content) return false;
  // With trivial content, a split keeps positive last-variable degree on both
  // sides and survives any substitution that keeps the leading coefficient.
  const MultiPoly& lead = coeffs.back();
  for (long c = 0; c < budget; ++c) {
    if (specialize_multi(lead, 1, Rational(c)).is_zero()) continue;
    if (certify_irreducible_multi(specialize_multi(f, 1, Rational(c)), budget)) return true;
  }
  return false;
}

FirstVarSpecialization specialize_first_var_irreducible(const MultiPoly& f, int budget,
                                                        std::optional<unsigned> d_override) {
  const std::size_t k = f.variable_count();
  if (k < 3) throw DomainError("specialize_first_var_irreducible: needs k >= 3 variables");
  if (budget < 1) throw DomainError("specialize_first_var_irreducible: budget must be positive");
  if (f.degree_in(k) <= 0) throw DomainError("specialize_first_var_irreducible: degree in X_k must be positive");

  FirstVarSpecialization run;
  run.d = d_override.value_or(static_cast<unsigned>(f.max_variable_degree()) + 1);
  const KroneckerParams params(run.d, k);
  if (!in_Vd(f, params)) throw DomainError("specialize_first_var_irreducible: f is not in V_d");
  run.image = kronecker_forward(f, params);
  run.factorization = factor_bipoly_small(run.image);
  const auto& fa = run.factorization;

  if (fa.x_part.degree() > 0) {
    throw ReducibleInput("input is reducible: it has a factor in X_1 alone", x1_poly(fa.x_part, k));
  }
  // A split of f maps to a split of the g_i; every split has a side
  // holding g_0, so only those subsets are tried.
  const std::size_t r = fa.factors.size();
  for (unsigned long mask = 1; mask + 1 < (1UL << r); mask += 2) {
    BiPoly u = BiPoly::from_x(UniPoly::constant(1));
    for (std::size_t i = 0; i < r; ++i) {
      if ((mask >> i) & 1UL) u = u * fa.factors[i];
    }
    auto v = try_divide(run.image, u);
    if (!v || !in_Wd(u, params) || !in_Wd(*v, params)) continue;
    MultiPoly uf = kronecker_inverse(u, params);
    if (uf * kronecker_inverse(*v, params) == f) {
      throw ReducibleInput("input is reducible", std::move(uf));
    }
  }

  CandidateSequence candidates({StrategyKind::IntegersByHeight, budget, Rational(0)});
  while (auto b = candidates.next()) {
    ++run.tested;
    if (sgn(fa.x_part(*b)) == 0) {
      ++run.rejected_x_part;
      continue;
    }
    bool all_irreducible = true;
    for (const auto& g : fa.factors) {
      const UniPoly gb = specialize(g, *b);
      if (gb.degree() != g.degree_y() || !is_irreducible_uni(gb)) {
        all_irreducible = false;
        break;
      }
    }
    if (!all_irreducible) {
      ++run.rejected_factor;
      continue;
    }
    if (!certify_irreducible_multi(specialize_multi(f, 1, *b))) {
      ++run.rejected_certificate;
      continue;
    }
    run.values.push_back(*b);
  }
  if (run.values.empty()) {
    throw DomainError("specialize_first_var_irreducible: budget exhausted (tested " + std::to_string(run.tested) +
                      ", g(b)=0: " + std::to_string(run.rejected_x_part) +
                      ", factor check failed: " + std::to_string(run.rejected_factor) +
                      ", certificate failed: " + std::to_string(run.rejected_certificate) + ")");
  }
  return run;
}

std::vector<Rational> full_specialization(const MultiPoly& f, const MultiPoly& p, int budget) {
  const std::size_t k = f.variable_count();
  if (k < 2) throw DomainError("full_specialization: needs k >= 2 variables");
  if (p.variable_count() != k - 1) throw DomainError("full_specialization: p must have k-1 variables");
  if (p.is_zero()) throw DomainError("full_specialization: p must be nonzero");
  if (budget < 1) throw DomainError("full_specialization: budget must be positive");

  std::vector<Rational> values;
  MultiPoly cur = f;
  MultiPoly pc = p;
  for (std::size_t stage = 1; stage < k; ++stage) {
    auto p_survives = [&](const Rational& b) { return !specialize_multi(pc, 1, b).is_zero(); };
    std::optional<Rational> chosen;
    if (cur.variable_count() >= 3) {
      for (const auto& b : specialize_first_var_irreducible(cur, budget).values) {
        if (p_survives(b)) {
          chosen = b;
          break;
        }
      }
    } else {
      HilbertStream stream(to_bipoly(cur), {StrategyKind::IntegersByHeight, budget, Rational(0)});
      while (auto b = stream.next()) {
        if (p_survives(*b)) {
          chosen = *b;
          break;
        }
      }
    }
    if (!chosen) {
      throw DomainError("full_specialization: budget exhausted at stage " + std::to_string(stage));
    }
    values.push_back(*chosen);
    cur = specialize_multi(cur, 1, *chosen);
    pc = specialize_multi(pc, 1, *chosen);
  }
  if (sgn(p.evaluate(values)) == 0 || !is_irreducible_uni(to_unipoly(cur))) {
    throw DomainError("full_specialization: final verification failed");
  }
  return values;
}

}  // namespace hilbertia
