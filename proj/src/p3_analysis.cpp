#include "genusgaps/p3_analysis.hpp"

namespace genusgaps {

namespace {

void require_degree(const Integer& d) {
  if (d < 4) throw DomainError("surface degree must be >= 4, got " + d.get_str());
}

}  // namespace

PolarizedSurface derive_invariants(const Integer& d) {
  require_degree(d);
  Integer pg = exact_quotient(Integer((d - 1) * (d - 2) * (d - 3)), Integer(6), "p_g of a degree-d surface");
  return {d, d * (d - 4), pg, Integer(0), Integer(d - 3)};
}

ClosedForms closed_form_thresholds(const Integer& d) {
  PolarizedSurface s = derive_invariants(d);
  const Integer d2 = d * d;
  ClosedForms c;
  c.n1_0 = d >= 33 ? Integer(2)
                   : ceil_quadratic({Rational(d), ratio(discriminant(s, Parity::Even), d2)});
  c.n1_1 = d >= 34 ? Integer(2)
                   : ceil_quadratic({Rational(d + 1), ratio(discriminant(s, Parity::Odd), d2)});
  c.n2_0 = ceil(Rational(d - 5) + ratio(Integer(6 * (d - 3)), Integer(d * (d - 2))));
  c.n2_1 = ceil(Rational(d - 5) + ratio(Integer(9 * (d - 2)), d2));
  c.n3_0 = 3 + floor_quadratic({Rational(0), Rational(2 * d - 6) - ratio(Integer(4), d)});
  c.n3_1 = 4 + floor_quadratic({Rational(0), Rational(2 * d - 2) - ratio(Integer(4), d)});
  return c;
}

std::vector<Discrepancy> closed_form_discrepancies(const Integer& d) {
  PolarizedSurface s = derive_invariants(d);
  ClosedForms c = closed_form_thresholds(d);
  const Integer general_n3 = n3(s);
  std::vector<Discrepancy> out;
  auto check = [&](const char* name, const Integer& printed, const Integer& computed) {
    if (printed != computed) out.push_back({name, d, printed, computed});
  };
  check("n1(0)", c.n1_0, n1(s, Parity::Even));
  check("n1(1)", c.n1_1, n1(s, Parity::Odd));
  check("n2(0)", c.n2_0, n2(s, Parity::Even));
  check("n2(1)", c.n2_1, n2(s, Parity::Odd));
  check("n3(0)", c.n3_0, general_n3);
  check("n3(1)", c.n3_1, general_n3);
  return out;
}

CdBound cd_bound(const Integer& d) {
  PolarizedSurface s = derive_invariants(d);
  BoundProfile b = bound_profile(s);
  CdBound c;
  c.n0_star = b.n0_star;
  c.value = b.phi;
  c.alt_n0 = d - 4;
  c.value_at_alt_n0 = phi(s.d, s.e, c.alt_n0);
  c.display_value = exact_quotient(Integer(d * (d - 5) * (2 * d - 9)), Integer(2), "d(d-5)(2d-9)/2");
  return c;
}

std::vector<GenusInterval> known_gap_containment(const Integer& d) {
  require_degree(d);
  if (d == 4) return {};
  if (d == 5) return {GenusInterval(Integer(0), Integer(2))};
  Integer top = exact_quotient(Integer(d * (d - 1) * (5 * d - 19)), Integer(6), "d(d-1)(5d-19)/6") - 1;
  return {GenusInterval(Integer(0), top)};
}

RationalCubic discriminant_cubic(Parity eps) {
  return RationalCubic(Rational(-1, 3), Rational(12), ratio(Integer(-(104 - 24 * to_int(eps))), Integer(3)), Rational(8));
}

RootTable root_table(const Integer& d_from, const Integer& d_to) {
  RootTable t;
  const Rational precision(1, 10000);
  t.roots[0] = isolate_positive_roots(discriminant_cubic(Parity::Even), precision);
  t.roots[1] = isolate_positive_roots(discriminant_cubic(Parity::Odd), precision);
  for (Integer d = d_from; d <= d_to; ++d) {
    PolarizedSurface s = derive_invariants(d);
    SignRow row{d, discriminant(s, Parity::Even), discriminant(s, Parity::Odd)};
    row.sign0 = sgn(row.delta0);
    row.sign1 = sgn(row.delta1);
    t.signs.push_back(std::move(row));
  }
  return t;
}

P3Report p3_report(const Integer& d) {
  P3Report r;
  r.surface = derive_invariants(d);
  r.profile = bound_profile(r.surface);
  r.closed_forms = closed_form_thresholds(d);
  r.discrepancies = closed_form_discrepancies(d);
  r.cd = cd_bound(d);
  r.known_gaps = known_gap_containment(d);
  return r;
}

}  // namespace genusgaps
