#include "genusgaps/genus_bounds.hpp"

#include <algorithm>
#include <initializer_list>

namespace genusgaps {

void validate(const PolarizedSurface& s) {
  if (s.d < 1) throw DomainError("polarization degree d must be >= 1, got " + s.d.get_str());
  if (s.n4 < 1) throw DomainError("n4 must be >= 1, got " + s.n4.get_str());
  if (s.p < 0) throw DomainError("p_g must be >= 0, got " + s.p.get_str());
  if (s.q < 0) throw DomainError("q must be >= 0, got " + s.q.get_str());
  if (mpz_odd_p(Integer(s.d - s.e).get_mpz_t())) {
    throw IntegrityError("d and e must have the same parity (d = " + s.d.get_str() +
                         ", e = " + s.e.get_str() + ")");
  }
}

std::string describe(const PolarizedSurface& s) {
  return "(d=" + s.d.get_str() + ", e=" + s.e.get_str() + ", p=" + s.p.get_str() +
         ", q=" + s.q.get_str() + ", n4=" + s.n4.get_str() + ")";
}

Integer arithmetic_genus(const Integer& d, const Integer& e, const Integer& n) {
  return exact_quotient(Integer(n * (n * d + e)), Integer(2), "arithmetic genus n(nd+e)/2") + 1;
}

Integer arithmetic_genus(const PolarizedSurface& s, const Integer& n) {
  return arithmetic_genus(s.d, s.e, n);
}

Integer system_dimension(const PolarizedSurface& s, const Integer& n) {
  if (n < s.n4) {
    throw PreconditionError("dim |nL| is only certified for n >= n4 = " + s.n4.get_str() +
                            ", got n = " + n.get_str());
  }
  return exact_quotient(Integer(n * (n * s.d - s.e)), Integer(2), "dim |nL|") + s.p - s.q;
}

Integer genus_step(const Integer& d, const Integer& e, const Integer& n) {
  return n * d - exact_quotient(Integer(d - e), Integer(2), "(d - e)/2") - 1;
}

Integer genus_step(const PolarizedSurface& s, const Integer& n) { return genus_step(s.d, s.e, n); }

Integer discriminant(const PolarizedSurface& s, Parity eps) {
  const int k = to_int(eps);
  return 4 * (3 + 2 * k) * s.d * s.d + 12 * s.d * s.e + s.e * s.e - 8 * s.d * (s.p - s.q);
}

Integer n1(const PolarizedSurface& s, Parity eps) {
  Integer delta = discriminant(s, eps);
  if (delta < 0) return Integer(2);
  QuadraticExpr x{Rational(4 + to_int(eps)) + ratio(s.e, s.d), ratio(delta, Integer(s.d * s.d))};
  return ceil_quadratic(x);
}

Integer n2(const PolarizedSurface& s, Parity eps) {
  const int k = to_int(eps);
  Integer den = s.e + 2 * s.d * (1 + k);
  if (den == 0) throw DomainError("n2: e + 2d(1+eps) vanishes for " + describe(s));
  Integer num = 6 * (s.p - s.q) + s.d * (1 + k) + s.e * (2 * k - 1) - 12;
  return ceil(ratio(num, den));
}

bool splitting_inequality(const PolarizedSurface& s, const Integer& n) {
  Integer half = n / 2;
  return half * half * s.d > genus_step(s, n);
}

Integer n3(const PolarizedSurface& s) {
  if (s.d < 1) throw DomainError("n3 needs d >= 1");
  Integer n = 1;
  while (!splitting_inequality(s, n)) ++n;
  return n;
}

Integer phi(const Integer& d, const Integer& e, const Integer& n0) {
  Integer m = n0 - 1;
  Integer twice = m * (m * d + e);
  if (twice < 0) {
    throw IntegrityError("phi below 1: (n0-1)((n0-1)d+e) < 0 for d=" + d.get_str() + ", e=" +
                         e.get_str() + ", n0=" + n0.get_str());
  }
  return exact_quotient(twice, Integer(2), "phi") + 1;
}

BoundProfile bound_profile(const PolarizedSurface& s) {
  validate(s);
  BoundProfile b;
  b.delta0 = discriminant(s, Parity::Even);
  b.delta1 = discriminant(s, Parity::Odd);
  b.n1_0 = n1(s, Parity::Even);
  b.n1_1 = n1(s, Parity::Odd);
  b.n2_0 = n2(s, Parity::Even);
  b.n2_1 = n2(s, Parity::Odd);
  b.n3 = n3(s);
  b.n0_0 = std::max({b.n1_0, b.n2_0, b.n3, s.n4});
  b.n0_1 = std::max({b.n1_1, b.n2_1, b.n3, s.n4});
  b.n0_star = std::max(b.n0_0, b.n0_1);
  b.phi = phi(s.d, s.e, b.n0_star);
  if (b.phi != arithmetic_genus(s, Integer(b.n0_star - 1))) {
    throw IntegrityError("phi disagrees with p(d, e, n0 - 1) for " + describe(s));
  }
  return b;
}

bool check_bound(const PolarizedSurface& s, const Integer& n) {
  return system_dimension(s, n) >= 3 * (genus_step(s, n) - 1);
}

bool check_bound1(const PolarizedSurface& s, const Integer& n) {
  Integer half = n / 2;
  if (half < s.n4) {
    throw PreconditionError("bound at floor(n/2) needs floor(n/2) >= n4; n = " + n.get_str());
  }
  return system_dimension(s, half) >= genus_step(s, n) + 1;
}

Integer bound1_in_half(const PolarizedSurface& s, const Integer& t, Parity eps) {
  const int k = to_int(eps);
  return t * t * s.d - t * (4 * s.d + s.e) + 2 * (s.p - s.q) - s.e + (1 - 2 * k) * s.d;
}

Integer bound1_in_n(const PolarizedSurface& s, const Integer& n, Parity eps) {
  const int k = to_int(eps);
  return n * n * s.d - 8 * n * s.d - 2 * n * s.e + 8 * (s.p - s.q) + 4 * (s.d - s.e) +
         k * (k * s.d - 2 * n * s.d + 2 * s.e);
}

Integer bound_in_n(const PolarizedSurface& s, const Integer& n) {
  return n * n * s.d - n * (6 * s.d + s.e) + 2 * (s.p - s.q) + 3 * (s.d - s.e) + 12;
}

bool check_bound1_expanded(const PolarizedSurface& s, const Integer& n) {
  const Parity eps = parity_of(n);
  Integer t = (n - to_int(eps)) / 2;
  Integer half_form = bound1_in_half(s, t, eps);
  Integer n_form = bound1_in_n(s, n, eps);
  if (n_form != 4 * half_form) throw IntegrityError("expanded bound forms disagree at n = " + n.get_str());
  bool expanded = half_form >= 0;
  if (expanded != check_bound1(s, n)) {
    throw IntegrityError("expanded and direct half-level bound disagree at n = " + n.get_str());
  }
  return expanded;
}

bool check_bound_expanded(const PolarizedSurface& s, const Integer& n) {
  bool expanded = bound_in_n(s, n) >= 0;
  if (expanded != check_bound(s, n)) {
    throw IntegrityError("expanded and direct bound disagree at n = " + n.get_str());
  }
  return expanded;
}

bool terracini_condition(const Integer& r, const Integer& m, const Integer& k) {
  if (m < 1) throw DomainError("terracini_condition: m must be >= 1");
  if (k < 0) throw DomainError("terracini_condition: k must be >= 0");
  return r >= (m + 1) * (k + 1);
}

}  // namespace genusgaps
