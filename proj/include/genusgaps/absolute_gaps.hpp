#pragma once

// Every genus g >= 0 is realized by a nodal curve on some smooth degree-d surface in P^3.
// The planner emits the numeric witness behind that statement; the geometry (Severi
// varieties, very general surfaces) is an external dependency recorded on the witness.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "genusgaps/gap_intervals.hpp"

namespace genusgaps {

/// l_{d,n} = dim |O_S(n)| for a smooth surface S of degree d in P^3:
///   n(n^2 + 6n + 11)/6                              if n < d
///   d(3n^2 - 3n(d-4) + (d^2 - 6d + 11))/6 - 1       if n >= d
Integer ell(const Integer& d, const Integer& n);

/// p_{d,n} = dn(d + n - 4)/2 + 1, the arithmetic genus of a complete intersection of type (d, n).
Integer pnd(const Integer& d, const Integer& n);

/// The two formulas the planner and audit evaluate; replaceable for negative-control tests.
struct GapFormulas {
  std::function<Integer(const Integer&, const Integer&)> ell;
  std::function<Integer(const Integer&, const Integer&)> pnd;
};
GapFormulas default_formulas();

/// J_{d-1}(n) and J_d(n) for an auxiliary surface of degree n; lower ends clamped at 0.
struct ChainEntry {
  Integer n;
  GenusInterval interval_dm1;
  GenusInterval interval_d;
};
std::vector<ChainEntry> severi_chain(const Integer& d);

struct ContiguityResult {
  Integer lower;          // p_{n,d} - l_{n,d}
  Integer middle;         // p_{n,d-1} + 1
  Integer upper;          // p_{n,d}
  Integer reduced_value;  // 3d(d - n + 2) + n^2 - 9n + 26
  bool direct = false;
  bool reduced = false;
  bool holds() const { return direct && reduced; }
};

/// p_{n,d} - l_{n,d} <= p_{n,d-1} + 1 < p_{n,d}, checked directly and in reduced polynomial
/// form; IntegrityError if the two disagree. DomainError unless 4 <= n <= d - 2.
ContiguityResult contiguity_check(const Integer& n, const Integer& d);

/// p_{d,d-2} - l_{d,d-2}: every g at or above it is a non-gap on a very general surface.
Integer high_range_threshold(const Integer& d, const GapFormulas& f = default_formulas());

/// d - 1 >= cbrt(12 d^2), i.e. (d - 1)^3 >= 12 d^2, the hypothesis of the very general bound.
bool high_range_side_condition(const Integer& d);

enum class WitnessMode {
  SmallDegree,     // d <= 4: classical
  Severi,          // nodal complete intersection on a general surface of degree 4 <= n <= d - 2
  HighRange,       // very general surface of degree d
  RationalSeveri,  // nodal complete intersection on a smooth surface of degree n <= 3
};
std::string to_string(WitnessMode mode);

struct RealizationWitness {
  Integer d;
  Integer g;
  WitnessMode mode = WitnessMode::SmallDegree;
  std::optional<Integer> aux_degree;  // n
  std::optional<Integer> nodes;       // delta = p_{n,d} - g
  Integer interval_lo;
  std::optional<Integer> interval_hi;  // empty for the unbounded high range
  bool side_condition = true;          // high range only
  std::string dependency;
};

/// Severi witness with the largest admissible n, else high range, else a rational auxiliary
/// surface; CoverageError when none applies.
RealizationWitness plan_realization(const Integer& d, const Integer& g,
                                    const GapFormulas& f = default_formulas());

/// Re-derives the witness interval from `f` and checks membership and node bounds.
bool verify_witness(const RealizationWitness& w, const GapFormulas& f = default_formulas());

struct AuditResult {
  Integer d;
  Integer g_max;
  std::vector<GenusInterval> merged;
  bool side_condition = true;
};

/// Merges every witness interval and checks [0, g_max] is covered; CoverageError names the
/// smallest uncovered genus. Needs d >= 5.
AuditResult full_coverage_audit(const Integer& d, const Integer& g_max,
                                const GapFormulas& f = default_formulas());

}  // namespace genusgaps
