#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hilbertia/bipoly.hpp"
#include "hilbertia/unipoly.hpp"

namespace hilbertia {

struct Factor {
  UniPoly poly;  // monic, irreducible over Q
  unsigned multiplicity = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// unit * prod factor^multiplicity; factors ordered by degree, then by
/// coefficients from the constant term upward.
struct Factorization {
  Rational unit;
  std::vector<Factor> factors;

  UniPoly expand() const;
};

/// All rational roots of f, ascending, each listed once.
std::vector<Rational> rational_roots(const UniPoly& f);

/// Complete factorization over Q: squarefree decomposition, then
/// factorization modulo the least admissible prime >= 5, quadratic Hensel
/// lifting and exhaustive recombination.
Factorization factor_unipoly(const UniPoly& f);

bool is_irreducible_uni(const UniPoly& f);

enum class BiVerdict { Irreducible, Reducible, NotApplicable };

struct BiIrredCertificate {
  BiVerdict verdict = BiVerdict::NotApplicable;
  std::optional<Rational> witness_b;
  bool content_ok = false;
  std::optional<std::pair<BiPoly, BiPoly>> reducible_witness;
};

/// Irreducibility in Q[X][Y] with positive Y-degree. A witness b is sound:
/// with trivial content and a_n(b) != 0, any split of f would survive in f_b.
/// Witness candidates are b = 0, 1, 2, ... (search_budget of them).
BiIrredCertificate is_irreducible_bi(const BiPoly& f, int search_budget);

/// f = x_part * prod factors, each factor irreducible with positive
/// Y-degree and leading Y-coefficient monic in X. Repeated factors repeat.
struct BiFactorization {
  UniPoly x_part;
  std::vector<BiPoly> factors;

  BiPoly expand() const;
};

inline constexpr int kBiFactorMaxDegreeY = 6;
inline constexpr int kBiFactorMaxDegreeX = 12;

/// Desk-scale bivariate factorization (deg_Y <= 6, deg_X <= 12): lifts the
/// factorization of one regular specialization (X - b)-adically, then
/// recombines lifted factors by trial division.
BiFactorization factor_bipoly_small(const BiPoly& f);

/// Thrown by factor_bipoly_small outside its degree bounds.
class DegreeBoundExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace hilbertia
