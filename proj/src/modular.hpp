#pragma once

// Polynomial arithmetic over F_p and Z/(p^k), used by the Zassenhaus
// factorizer. Internal to the library.

#include <cstdint>
#include <random>
#include <vector>

#include "hilbertia/rational.hpp"

namespace hilbertia::modular {

using FpPoly = std::vector<std::uint64_t>;
using ZPoly = std::vector<Integer>;

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {}
  std::uint64_t modulus() const { return p_; }

  std::uint64_t reduce(const Integer& z) const;
  std::uint64_t inv(std::uint64_t a) const;

  FpPoly from_integers(const ZPoly& f) const;
  FpPoly add(const FpPoly& a, const FpPoly& b) const;
  FpPoly sub(const FpPoly& a, const FpPoly& b) const;
  FpPoly mul(const FpPoly& a, const FpPoly& b) const;
  void divmod(const FpPoly& a, const FpPoly& b, FpPoly* q, FpPoly* r) const;
  FpPoly rem(const FpPoly& a, const FpPoly& b) const;
  FpPoly monic(const FpPoly& a) const;
  FpPoly gcd(FpPoly a, FpPoly b) const;
  FpPoly derivative(const FpPoly& a) const;
  FpPoly powmod(FpPoly base, const Integer& exp, const FpPoly& mod) const;
  /// s, t with s*a + t*b = 1 for coprime a, b.
  void bezout(const FpPoly& a, const FpPoly& b, FpPoly* s, FpPoly* t) const;

  /// Monic irreducible factors of a monic squarefree f.
  std::vector<FpPoly> factor_squarefree(const FpPoly& f, std::mt19937_64& rng) const;

 private:
  void equal_degree_split(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>* out) const;
  std::uint64_t p_;
};

inline int degree(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }
void trim(FpPoly& a);
void trim(ZPoly& a);

/// Arithmetic in (Z/m)[X] with representatives in [0, m).
class ResidueRing {
 public:
  explicit ResidueRing(Integer m) : m_(std::move(m)) {}
  const Integer& modulus() const { return m_; }

  ZPoly reduce(const ZPoly& a) const;
  ZPoly add(const ZPoly& a, const ZPoly& b) const;
  ZPoly sub(const ZPoly& a, const ZPoly& b) const;
  ZPoly mul(const ZPoly& a, const ZPoly& b) const;
  ZPoly scale(const ZPoly& a, const Integer& c) const;
  /// Division by a monic divisor.
  void divmod_monic(const ZPoly& a, const ZPoly& b, ZPoly* q, ZPoly* r) const;
  /// Symmetric representatives in (-m/2, m/2].
  ZPoly symmetric(const ZPoly& a) const;

 private:
  Integer m_;
};

/// Lifts f = lc(f) * prod factors (mod p) to a factorization modulo
/// p^(2^levels); the returned factors are monic.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FpPoly>& factors, std::uint64_t p,
                               unsigned levels);

}  // namespace hilbertia::modular
