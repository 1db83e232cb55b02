#include "hilbertia/hilbert.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "hilbertia/factorize.hpp"
#include "hilbertia/resultant.hpp"

namespace hilbertia {

namespace {

constexpr int kPreconditionWitnessBudget = 50;

void require_irreducible(const BiPoly& f) {
  if (f.degree_y() < 1) throw DomainError("f must have positive degree in Y");
  if (is_irreducible_bi(f, kPreconditionWitnessBudget).verdict != BiVerdict::Irreducible) {
    throw DomainError("f is not irreducible in Q[X][Y]");
  }
}

}  // namespace

CandidateSequence::CandidateSequence(const SearchStrategy& strategy) : strategy_(strategy) {
  if (strategy.budget < 1) throw DomainError("search budget must be at least 1");
}

std::optional<Rational> CandidateSequence::next() {
  if (produced_ >= strategy_.budget) return std::nullopt;
  ++produced_;
  switch (strategy_.kind) {
    case StrategyKind::IntegersByHeight:
      return Rational(produced_);
    case StrategyKind::ShiftedReciprocal:
      return Rational(strategy_.s0 + Rational(1, produced_));
    case StrategyKind::RationalsByHeight:
      while (band_pos_ >= band_.size()) {
        ++height_;
        band_.clear();
        band_pos_ = 0;
        // max(|p|, q) == height_, gcd(p, q) = 1, sorted by (p, q).
        for (long p = -height_; p <= height_; ++p) {
          for (long q = 1; q <= height_; ++q) {
            if (std::max(std::labs(p), q) != height_) continue;
            if (Integer(std::gcd(std::labs(p), q)) != 1) continue;
            band_.emplace_back(p, q);
          }
        }
      }
      return band_[band_pos_++];
  }
  return std::nullopt;
}

bool specializes_irreducibly(const BiPoly& f, const UniPoly& disc, const Rational& b) {
  if (!is_regular_value(f, disc, b).is_regular) return false;
  return is_irreducible_uni(specialize(f, b));
}

HilbertStream::HilbertStream(BiPoly f, SearchStrategy strategy)
    : f_(std::move(f)), candidates_(strategy) {
  require_irreducible(f_);
  disc_ = discriminant_y(f_);
  if (strategy.kind == StrategyKind::ShiftedReciprocal &&
      !is_regular_value(f_, disc_, strategy.s0).is_regular) {
    throw DomainError("s0 is not a regular value of f");
  }
}

std::optional<Rational> HilbertStream::next() {
  while (auto b = candidates_.next()) {
    ++tested_;
    if (!is_regular_value(f_, disc_, *b).is_regular) {
      ++nonregular_;
      continue;
    }
    if (is_irreducible_uni(specialize(f_, *b))) {
      ++yielded_;
      return b;
    }
  }
  if (yielded_ == 0) throw NoSpecializationFound("search budget exhausted with no irreducible specialization");
  return std::nullopt;
}

HilbertStats hilbert_count(const BiPoly& f, long lo, long hi, const std::function<bool()>& stop) {
  require_irreducible(f);
  HilbertStats stats;
  if (lo > hi) return stats;
  const UniPoly disc = discriminant_y(f);
  for (long b = lo; b <= hi; ++b) {
    if (stop && stop()) {
      stats.interrupted = true;
      break;
    }
    ++stats.tested;
    const Rational q(b);
    if (!is_regular_value(f, disc, q).is_regular) {
      ++stats.nonregular_count;
      continue;
    }
    if (is_irreducible_uni(specialize(f, q))) {
      ++stats.irreducible_count;
      if (stats.examples.size() < kHilbertStatsExamples) stats.examples.push_back(q);
    }
  }
  return stats;
}

std::vector<TSearchRow> t_search(const BiPoly& f, const Rational& s0, long t_max) {
  if (f.degree_y() < 1) throw DomainError("t_search: f must have positive degree in Y");
  const UniPoly disc = discriminant_y(f);
  if (!is_regular_value(f, disc, s0).is_regular) throw DomainError("t_search: s0 is not a regular value");
  std::vector<TSearchRow> rows;
  for (long t = 1; t <= t_max; ++t) {
    TSearchRow row;
    row.t = t;
    row.b = s0 + Rational(1, t);
    row.b.canonicalize();
    row.irreducible = specializes_irreducibly(f, disc, row.b);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hilbertia
