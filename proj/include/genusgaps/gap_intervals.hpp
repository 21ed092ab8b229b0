#pragma once

#include <vector>

#include "genusgaps/genus_bounds.hpp"

namespace genusgaps {

/// Closed integer interval [lo, hi] of genera, lo <= hi.
struct GenusInterval {
  Integer lo;
  Integer hi;

  GenusInterval() = default;
  /// Throws DomainError when lo > hi or lo < 0.
  GenusInterval(Integer lo, Integer hi);

  bool contains(const Integer& g) const { return lo <= g && g <= hi; }
  Integer size() const { return hi - lo + 1; }
  friend bool operator==(const GenusInterval&, const GenusInterval&) = default;
};

/// J_n = [p(d, e, n - 1), p(d, e, n)].
GenusInterval interval_for(const PolarizedSurface& s, const Integer& n);

/// Sorted, maximal, pairwise disjoint intervals covering the same integers;
/// intervals that overlap or touch (hi + 1 == next.lo) are joined.
std::vector<GenusInterval> merge(std::vector<GenusInterval> intervals);

/// True when every integer in [lo, hi] lies in the union of `intervals`.
bool covers(const std::vector<GenusInterval>& intervals, const Integer& lo, const Integer& hi);

/// Finite verified prefix of the non-gap chain J_{n0_star}, J_{n0_star + 1}, ...
struct CoverageCertificate {
  PolarizedSurface surface;
  Integer start_n;
  std::vector<GenusInterval> intervals;
  Integer threshold;
  Integer verified_up_to;
};

/// Builds J_n for n0_star <= n <= horizon and checks that consecutive intervals share an
/// endpoint. Throws PreconditionError when horizon < n0_star, OverlapError on a broken chain.
CoverageCertificate certify_coverage(const PolarizedSurface& s, const Integer& horizon);

}  // namespace genusgaps
