#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbertia/bipoly.hpp"
#include "hilbertia/factorize.hpp"
#include "hilbertia/multipoly.hpp"

namespace hilbertia {

/// Base d and variable count k of the Kronecker map S_d: X_1 -> X,
/// X_j -> Y^(d^(j-2)) for j >= 2. Requires d >= 2, k >= 3.
struct KroneckerParams {
  unsigned d = 2;
  std::size_t k = 3;

  KroneckerParams(unsigned base, std::size_t variables);
  /// d^(k-1), the exclusive Y-degree bound of W_d.
  unsigned long y_degree_bound() const;
};

BiPoly kronecker_forward(const MultiPoly& f, const KroneckerParams& params);

/// Degree < d in each of X_2, ..., X_k.
bool in_Vd(const MultiPoly& f, const KroneckerParams& params);
/// Y-degree < d^(k-1).
bool in_Wd(const BiPoly& g, const KroneckerParams& params);

/// The unique f in V_d with S_d(f) = g, reading Y-exponents in base d.
MultiPoly kronecker_inverse(const BiPoly& g, const KroneckerParams& params);

/// Thrown when the input to the specialization pipeline factors; carries a
/// nontrivial factor.
class ReducibleInput : public DomainError {
 public:
  ReducibleInput(const std::string& what, MultiPoly factor)
      : DomainError(what), factor_(std::move(factor)) {}
  const MultiPoly& factor() const { return factor_; }

 private:
  MultiPoly factor_;
};

/// Diagnostics and output of the first-variable specialization pipeline.
struct FirstVarSpecialization {
  unsigned d = 0;
  BiPoly image;                // S_d(f)
  BiFactorization factorization;
  std::vector<Rational> values;  // emitted b, canonical order
  int tested = 0;
  int rejected_x_part = 0;       // g(b) = 0
  int rejected_factor = 0;       // some g_i(b, Y) reducible or degree drop
  int rejected_certificate = 0;  // direct certificate failed
};

/// Emits b (candidates 1, 2, 3, ..., budget of them) such that g(b) != 0 and
/// every g_i(b, Y) is irreducible, where S_d(f) = g(X) prod g_i(X, Y) with
/// d = 1 + max variable degree (or d_override). Each b is re-checked by
/// certify_irreducible_multi on f(b, X_2, ..., X_k). Throws ReducibleInput
/// if f factors and DomainError when nothing is emitted.
FirstVarSpecialization specialize_first_var_irreducible(const MultiPoly& f, int budget,
                                                        std::optional<unsigned> d_override = std::nullopt);

/// Sound irreducibility certificate for a polynomial with positive degree in
/// its last variable, independent of Kronecker factorization. False means
/// "not certified", not "reducible".
bool certify_irreducible_multi(const MultiPoly& f, int budget = 50);

/// (b_1, ..., b_{k-1}) with p(b) != 0 and f(b_1, ..., b_{k-1}, X_k) irreducible,
/// chosen stage by stage; budget bounds the candidates per stage.
std::vector<Rational> full_specialization(const MultiPoly& f, const MultiPoly& p, int budget);

/// View of a 2-variable MultiPoly as Q[X_1][X_2] and back.
BiPoly to_bipoly(const MultiPoly& f);
MultiPoly from_bipoly(const BiPoly& g);

}  // namespace hilbertia
