#pragma once

// Genus threshold for hypersurface sections of an n-fold X with very ample L, computed from
// the Hilbert polynomials of h^0(w_X + mL) and h^0(mL).

#include <istream>
#include <string>

#include "genusgaps/exact_arith.hpp"

namespace genusgaps {

struct HilbertData {
  int dim = 2;                  // n = dim X
  RationalPolynomial p_can;     // m -> h^0(w_X (x) O(mL)), exact for m >= 1
  RationalPolynomial p_lin;     // m -> h^0(O(mL)), exact for m >= plin_valid_from
  Integer q;                    // q(X)
  Integer pg;                   // p_g(X)
  Integer plin_valid_from = 1;
};

/// Throws DomainError/IntegrityError for malformed data and CertificationError when the two
/// polynomials do not share degree dim and a positive leading coefficient.
void validate(const HilbertData& h);

/// p_m = P_can(m) + q - p_g, the genus of a smooth member of |mL|.
Integer genus_pm(const HilbertData& h, const Integer& m);
/// delta_m = p_m - p_{m-1} - 1 (m >= 2).
Integer delta_m(const HilbertData& h, const Integer& m);

/// delta_m <= dim |nu L| - n with m = n nu + mu, 0 <= mu < n.
/// PreconditionError when m < n or nu is below plin_valid_from.
bool separation_condition(const HilbertData& h, const Integer& m);

/// n m^{n-1} < nu^n with nu = floor(m / n).
bool asymptotic_condition(int dim, const Integer& m);

/// Least M such that every m >= M is certified by root bounds on the per-residue
/// difference polynomials nu -> (P_lin(nu) - 1 - n) - delta_{n nu + mu}.
Integer tail_certificate(const HilbertData& h);

struct NfoldBoundResult {
  Integer m_XL;
  Integer p_XL;
  Integer tail_certified_from;
};

/// Minimal m_XL >= n with separation_condition on [m_XL, oo); p_XL = p_{m_XL - 1}.
NfoldBoundResult find_threshold(const HilbertData& h);

/// Line-oriented format:
///   dim n
///   pcan c0 c1 ... cn
///   plin c0 c1 ... cn
///   q v
///   pg v
///   plin-valid-from m
/// Rationals as a or a/b; '#' starts a comment. ParseError carries the line number.
HilbertData parse_hilbert_data(std::istream& in);

/// Inverse of parse_hilbert_data.
std::string format_hilbert_data(const HilbertData& h);

}  // namespace genusgaps
