#pragma once

// Numerical model of a polarized surface (S, L) and the thresholds beyond which every
// genus is realized by a nodal curve in some |nL|.

#include <string>

#include "genusgaps/exact_arith.hpp"

namespace genusgaps {

/// d = L^2, e = K.L, p = p_g, q = irregularity, n4 = first n with h^1(nL) = h^2(nL) = 0.
struct PolarizedSurface {
  Integer d;
  Integer e;
  Integer p;
  Integer q;
  Integer n4;

  friend bool operator==(const PolarizedSurface&, const PolarizedSurface&) = default;
};

/// Throws DomainError for d < 1, n4 < 1, p < 0 or q < 0, IntegrityError when d and e
/// have different parity (L^2 + K.L is always even).
void validate(const PolarizedSurface& s);

std::string describe(const PolarizedSurface& s);

/// Parity selector for the two threshold families.
enum class Parity : int { Even = 0, Odd = 1 };

inline Parity parity_of(const Integer& n) { return mpz_odd_p(n.get_mpz_t()) ? Parity::Odd : Parity::Even; }
inline int to_int(Parity eps) { return static_cast<int>(eps); }

/// Arithmetic genus of curves in |nL|: n(nd + e)/2 + 1.
Integer arithmetic_genus(const Integer& d, const Integer& e, const Integer& n);
Integer arithmetic_genus(const PolarizedSurface& s, const Integer& n);

/// dim |nL| = n(nd - e)/2 + p - q, certified only for n >= n4.
Integer system_dimension(const PolarizedSurface& s, const Integer& n);

/// p(n) - p(n-1) - 1 = nd - (d - e)/2 - 1.
Integer genus_step(const Integer& d, const Integer& e, const Integer& n);
Integer genus_step(const PolarizedSurface& s, const Integer& n);

/// 4(3 + 2 eps) d^2 + 12 de + e^2 - 8d(p - q).
Integer discriminant(const PolarizedSurface& s, Parity eps);

/// 2 when the discriminant is negative, else ceil(4 + eps + e/d + sqrt(disc / d^2)).
Integer n1(const PolarizedSurface& s, Parity eps);

/// ceil((6(p-q) + d(1+eps) + e(2 eps - 1) - 12) / (e + 2d(1+eps))).
/// Not clamped; may be <= 0. Only meaningful as a threshold when the denominator is positive.
Integer n2(const PolarizedSurface& s, Parity eps);

/// Left-hand side of the reducibility test: floor(n/2)^2 d > nd - (d - e)/2 - 1.
bool splitting_inequality(const PolarizedSurface& s, const Integer& n);

/// Least positive n satisfying splitting_inequality (ascending search).
Integer n3(const PolarizedSurface& s);

struct BoundProfile {
  Integer delta0, delta1;
  Integer n1_0, n1_1;
  Integer n2_0, n2_1;
  Integer n3;
  Integer n0_0, n0_1;
  Integer n0_star;
  Integer phi;

  const Integer& n0(Parity eps) const { return eps == Parity::Even ? n0_0 : n0_1; }
  friend bool operator==(const BoundProfile&, const BoundProfile&) = default;
};

/// Both parities of n0 = max{n1, n2, n3, n4}; phi = p(d, e, n0_star - 1) with n0_star the max.
BoundProfile bound_profile(const PolarizedSurface& s);

/// phi(d, e, n0) = (n0 - 1)((n0 - 1)d + e)/2 + 1.
Integer phi(const Integer& d, const Integer& e, const Integer& n0);

/// l(n) >= 3(delta(n) - 1); needs n >= n4.
bool check_bound(const PolarizedSurface& s, const Integer& n);
/// l(floor(n/2)) >= delta(n) + 1; needs floor(n/2) >= n4.
bool check_bound1(const PolarizedSurface& s, const Integer& n);

// Expanded polynomial forms of the two inequalities (each ">= 0").

/// t^2 d - t(4d + e) + 2(p - q) - e + (1 - 2 eps) d, with n = 2t + eps.
Integer bound1_in_half(const PolarizedSurface& s, const Integer& t, Parity eps);
/// n^2 d - 8nd - 2ne + 8(p - q) + 4(d - e) + eps(eps d - 2nd + 2e); four times the above.
Integer bound1_in_n(const PolarizedSurface& s, const Integer& n, Parity eps);
/// n^2 d - n(6d + e) + 2(p - q) + 3(d - e) + 12.
Integer bound_in_n(const PolarizedSurface& s, const Integer& n);

/// check_bound1 evaluated through bound1_in_half; asserts agreement with the direct form.
bool check_bound1_expanded(const PolarizedSurface& s, const Integer& n);
/// check_bound evaluated through bound_in_n; asserts agreement with the direct form.
bool check_bound_expanded(const PolarizedSurface& s, const Integer& n);

/// r >= (m + 1)(k + 1): the projective-dimension hypothesis for non-defectivity with
/// k + 1 tangency points on an m-dimensional variety in P^r.
bool terracini_condition(const Integer& r, const Integer& m, const Integer& k);

}  // namespace genusgaps
