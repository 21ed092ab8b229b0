#pragma once

// Specialization to smooth surfaces of degree d >= 4 in P^3 with L = O_S(1).

#include <array>
#include <string>
#include <vector>

#include "genusgaps/gap_intervals.hpp"
#include "genusgaps/genus_bounds.hpp"

namespace genusgaps {

/// (d, d(d-4), (d-1)(d-2)(d-3)/6, 0, d-3); DomainError for d < 4.
PolarizedSurface derive_invariants(const Integer& d);

/// The six thresholds as closed forms in d (the printed P^3 specializations).
struct ClosedForms {
  Integer n1_0, n1_1;
  Integer n2_0, n2_1;
  Integer n3_0, n3_1;
};
ClosedForms closed_form_thresholds(const Integer& d);

/// A closed form that disagrees with the general formula it specializes.
struct Discrepancy {
  std::string quantity;
  Integer d;
  Integer printed;
  Integer computed;
};

/// Compares the closed forms with n1, n2 and n3 of the general surface formulas.
std::vector<Discrepancy> closed_form_discrepancies(const Integer& d);

struct CdBound {
  Integer n0_star;          // from the general profile (n4 = d - 3)
  Integer value;            // phi(d, d(d-4), n0_star)
  Integer alt_n0;           // d - 4, the value quoted for large d
  Integer value_at_alt_n0;  // phi(d, d(d-4), d - 4)
  Integer display_value;    // d(d-5)(2d-9)/2, which omits the trailing +1
};
CdBound cd_bound(const Integer& d);

/// Known gap set on a very general surface of degree d: empty for d = 4, {0, 1, 2} for
/// d = 5, contained in [0, d(d-1)(5d-19)/6 - 1] for d >= 6.
std::vector<GenusInterval> known_gap_containment(const Integer& d);

/// Delta(eps)/d for P^3 surfaces: -(1/3) x^3 + 12 x^2 - (1/3)(104 - 24 eps) x + 8.
RationalCubic discriminant_cubic(Parity eps);

struct SignRow {
  Integer d;
  Integer delta0, delta1;
  int sign0 = 0, sign1 = 0;
};

struct RootTable {
  std::array<std::vector<RootBracket>, 2> roots;
  std::vector<SignRow> signs;
};

/// Positive roots of both cubics (bracket width <= 1/10^4) and exact discriminant signs for
/// d_from <= d <= d_to.
RootTable root_table(const Integer& d_from, const Integer& d_to);

struct P3Report {
  PolarizedSurface surface;
  BoundProfile profile;
  ClosedForms closed_forms;
  std::vector<Discrepancy> discrepancies;
  CdBound cd;
  std::vector<GenusInterval> known_gaps;
};
P3Report p3_report(const Integer& d);

}  // namespace genusgaps
