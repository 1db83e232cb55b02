#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>

#include "hilbertia/unipoly.hpp"

namespace hilbertia {

enum class GroupName { C1, C2, C3, S3, C4, V4, D4, A4, S4 };

struct GroupLabel {
  GroupName name = GroupName::C1;
  int order = 1;

  static GroupLabel of(GroupName name);
  friend bool operator==(const GroupLabel&, const GroupLabel&) = default;
  friend auto operator<=>(const GroupLabel& a, const GroupLabel& b) { return a.name <=> b.name; }
};

std::string to_string(GroupName name);

/// Resolvent cubic y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2) of the
/// monic quartic x^4 + a x^3 + b x^2 + c x + d.
UniPoly resolvent_cubic(const UniPoly& quartic);

/// Galois group of an irreducible squarefree f of degree 1..4.
GroupLabel galois_group_deg_le4(const UniPoly& f);

/// Transitivity of the Galois action on the roots of a squarefree f, read
/// through irreducibility.
bool transitive_action_check(const UniPoly& f);

struct ExperimentTable {
  std::map<GroupLabel, long> counts;
  long discarded = 0;  // reducible or non-squarefree specializations
  long samples = 0;
  bool interrupted = false;

  long count(GroupName name) const;
};

/// Specializes Y^n - X_1 Y^(n-1) + X_2 Y^(n-2) - ... + (-1)^n X_n at integer
/// tuples drawn uniformly from [-box, box]^n by a seeded generator and
/// tabulates the Galois groups of the irreducible squarefree results.
ExperimentTable specialization_group_experiment(int degree, long box, long samples, std::uint64_t seed,
                                                const std::function<bool()>& stop = {});

/// The specialization of the general polynomial at one tuple.
UniPoly general_polynomial_at(std::span<const long> tuple);

}  // namespace hilbertia
