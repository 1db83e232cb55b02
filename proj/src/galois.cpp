#include "hilbertia/galois.hpp"

#include <random>
#include <vector>

#include "hilbertia/bipoly.hpp"
#include "hilbertia/factorize.hpp"
#include "hilbertia/resultant.hpp"

namespace hilbertia {

namespace {

bool squarefree(const UniPoly& f) { return gcd(f, f.derivative()).degree() == 0; }

// f(x - s t) as a polynomial in t over Q[x].
BiPoly shifted_in_t(const UniPoly& f, const Rational& s) {
  const BiPoly lin(std::vector<UniPoly>{UniPoly{Rational(0), Rational(1)}, UniPoly::constant(-s)});
  BiPoly acc;
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lin + BiPoly::from_x(UniPoly::constant(*it));
  return acc;
}

// Whether an irreducible quartic stays irreducible over Q(sqrt(disc)); read
// off the degree-8 norm Res_t(t^2 - disc, f(x - s t)) once it is squarefree.
bool irreducible_over_quadratic(const UniPoly& f, const Rational& disc) {
  const BiPoly quad(std::vector<UniPoly>{UniPoly::constant(-disc), UniPoly{}, UniPoly::constant(1)});
  for (long s = 1; s <= 64; ++s) {
    const UniPoly norm = resultant_y(quad, shifted_in_t(f, Rational(s)));
    if (!squarefree(norm)) continue;
    return is_irreducible_uni(norm);
  }
  throw DomainError("galois: C4/D4 undecided, no squarefree norm found");
}

}  // namespace

GroupLabel GroupLabel::of(GroupName name) {
  static constexpr int kOrders[] = {1, 2, 3, 6, 4, 4, 8, 12, 24};
  return {name, kOrders[static_cast<int>(name)]};
}

std::string to_string(GroupName name) {
  static const char* const kNames[] = {"C1", "C2", "C3", "S3", "C4", "V4", "D4", "A4", "S4"};
  return kNames[static_cast<int>(name)];
}

UniPoly resolvent_cubic(const UniPoly& quartic) {
  if (quartic.degree() != 4 || !quartic.is_monic()) throw DomainError("resolvent_cubic: needs a monic quartic");
  const Rational a = quartic.coeff(3), b = quartic.coeff(2), c = quartic.coeff(1), d = quartic.coeff(0);
  return UniPoly{Rational(-(a * a * d - 4 * b * d + c * c)), Rational(a * c - 4 * d), Rational(-b), Rational(1)};
}

GroupLabel galois_group_deg_le4(const UniPoly& f) {
  const int n = f.degree();
  if (n < 1 || n > 4) throw DomainError("galois_group_deg_le4: degree must be between 1 and 4");
  if (!squarefree(f)) throw DomainError("galois_group_deg_le4: polynomial is not squarefree");
  if (!is_irreducible_uni(f)) throw DomainError("galois_group_deg_le4: polynomial is reducible");
  switch (n) {
    case 1:
      return GroupLabel::of(GroupName::C1);
    case 2:
      return GroupLabel::of(GroupName::C2);
    case 3:
      return GroupLabel::of(is_square(discriminant(f)) ? GroupName::C3 : GroupName::S3);
    default:
      break;
  }
  const UniPoly m = f.monic();
  const Rational disc = discriminant(m);
  const auto roots = rational_roots(resolvent_cubic(m));
  if (roots.empty()) return GroupLabel::of(is_square(disc) ? GroupName::A4 : GroupName::S4);
  if (roots.size() == 3) return GroupLabel::of(GroupName::V4);
  return GroupLabel::of(irreducible_over_quadratic(m, disc) ? GroupName::D4 : GroupName::C4);
}

bool transitive_action_check(const UniPoly& f) {
  if (f.degree() < 1) throw DomainError("transitive_action_check: degree must be at least 1");
  if (!squarefree(f)) throw DomainError("transitive_action_check: polynomial is not squarefree");
  return is_irreducible_uni(f);
}

long ExperimentTable::count(GroupName name) const {
  auto it = counts.find(GroupLabel::of(name));
  return it == counts.end() ? 0 : it->second;
}

UniPoly general_polynomial_at(std::span<const long> tuple) {
  const std::size_t n = tuple.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  for (std::size_t i = 1; i <= n; ++i) c[n - i] = (i % 2 == 0) ? Rational(tuple[i - 1]) : Rational(-tuple[i - 1]);
  return UniPoly(std::move(c));
}

ExperimentTable specialization_group_experiment(int degree, long box, long samples, std::uint64_t seed,
                                                const std::function<bool()>& stop) {
  if (degree < 1 || degree > 4) throw DomainError("experiment: degree must be between 1 and 4");
  if (samples < 1) throw DomainError("experiment: samples must be positive");
  if (box < 0) throw DomainError("experiment: box must be nonnegative");
  ExperimentTable table;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-box, box);
  std::vector<long> tuple(static_cast<std::size_t>(degree));
  for (long s = 0; s < samples; ++s) {
    if (stop && stop()) {
      table.interrupted = true;
      break;
    }
    for (auto& x : tuple) x = coord(rng);
    const UniPoly f = general_polynomial_at(tuple);
    ++table.samples;
    if (!squarefree(f) || !is_irreducible_uni(f)) {
      ++table.discarded;
      continue;
    }
    ++table.counts[galois_group_deg_le4(f)];
  }
  return table;
}

}  // namespace hilbertia
