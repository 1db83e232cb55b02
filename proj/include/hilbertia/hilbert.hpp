#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hilbertia/bipoly.hpp"

namespace hilbertia {

enum class StrategyKind { IntegersByHeight, RationalsByHeight, ShiftedReciprocal };

/// Candidate order for Hilbert-set searches.
///  - IntegersByHeight: 1, 2, 3, ...
///  - RationalsByHeight: p/q in lowest terms, q >= 1, ordered by
///    max(|p|, q) and then lexicographically on (p, q).
///  - ShiftedReciprocal: s0 + 1/t for t = 1, 2, 3, ...
/// budget counts candidates tested, not values yielded.
struct SearchStrategy {
  StrategyKind kind = StrategyKind::IntegersByHeight;
  int budget = 100;
  Rational s0;
};

/// Lazy enumeration of the candidates of a strategy, budget included.
class CandidateSequence {
 public:
  explicit CandidateSequence(const SearchStrategy& strategy);
  std::optional<Rational> next();

 private:
  SearchStrategy strategy_;
  int produced_ = 0;
  // RationalsByHeight state: current height band, buffered in order.
  long height_ = 0;
  std::vector<Rational> band_;
  std::size_t band_pos_ = 0;
};

/// Thrown when a search spends its whole budget without a single yield.
class NoSpecializationFound : public DomainError {
 public:
  using DomainError::DomainError;
};

/// b in strategy order with f_b irreducible over Q of full Y-degree. Each
/// candidate is first screened for regularity (a_n(b) != 0, Disc(b) != 0).
class HilbertStream {
 public:
  /// Throws DomainError unless f is certified irreducible, and for
  /// ShiftedReciprocal unless s0 is a regular value.
  HilbertStream(BiPoly f, SearchStrategy strategy);

  /// Next yield; nullopt at budget exhaustion. Throws NoSpecializationFound
  /// when the budget ends before anything was yielded.
  std::optional<Rational> next();

  int tested() const { return tested_; }
  int yielded() const { return yielded_; }
  int nonregular() const { return nonregular_; }

 private:
  BiPoly f_;
  UniPoly disc_;
  CandidateSequence candidates_;
  int tested_ = 0;
  int yielded_ = 0;
  int nonregular_ = 0;
};

struct HilbertStats {
  long tested = 0;
  long irreducible_count = 0;
  long nonregular_count = 0;
  std::vector<Rational> examples;  // first few irreducible b
  bool interrupted = false;
};

inline constexpr std::size_t kHilbertStatsExamples = 10;

/// Exact counts over every integer b in [lo, hi]; an empty range gives zeros.
/// stop is polled once per b; a true answer ends the count early.
HilbertStats hilbert_count(const BiPoly& f, long lo, long hi, const std::function<bool()>& stop = {});

struct TSearchRow {
  long t = 0;
  Rational b;
  bool irreducible = false;
};

/// Irreducibility of f at b = s0 + 1/t for t = 1..t_max; s0 must be regular.
std::vector<TSearchRow> t_search(const BiPoly& f, const Rational& s0, long t_max);

/// True when b is regular for f and f_b is irreducible of full Y-degree.
bool specializes_irreducibly(const BiPoly& f, const UniPoly& disc, const Rational& b);

}  // namespace hilbertia
