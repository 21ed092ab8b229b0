#include <doctest.h>

#include <cmath>

#include "genusgaps/p3_analysis.hpp"

using namespace genusgaps;

namespace {

// Delta(eps) for the P^3 invariants, evaluated from the general definition with plain integers.
long delta_p3(long d, int eps) {
  long e = d * (d - 4), p = (d - 1) * (d - 2) * (d - 3) / 6;
  return 4 * (3 + 2 * eps) * d * d + 12 * d * e + e * e - 8 * d * p;
}

}  // namespace

TEST_CASE("derived invariants") {
  CHECK(derive_invariants(5) == PolarizedSurface{5, 5, 4, 0, 2});
  CHECK(derive_invariants(4) == PolarizedSurface{4, 0, 1, 0, 1});
  CHECK(derive_invariants(6) == PolarizedSurface{6, 12, 10, 0, 3});
  CHECK_THROWS_AS(derive_invariants(3), DomainError);
  for (long d = 4; d <= 200; ++d) {
    PolarizedSurface s = derive_invariants(d);
    REQUIRE(6 * s.p == Integer((d - 1) * (d - 2) * (d - 3)));
    REQUIRE(s.e == d * (d - 4));
    REQUIRE(s.n4 == d - 3);
  }
}

TEST_CASE("closed forms: examples") {
  ClosedForms c = closed_form_thresholds(5);
  CHECK(c.n1_0 == 10);
  CHECK(c.n2_0 == 1);
  CHECK(c.n3_0 == 4);
  CHECK(c.n3_1 == 6);
  CHECK(closed_form_thresholds(33).n1_0 == 2);

  ClosedForms big = closed_form_thresholds(100);
  CHECK(big.n1_0 == 2);
  CHECK(big.n1_1 == 2);
  // d - 5 plus a small positive fraction, so the ceiling is d - 4.
  CHECK(big.n2_0 == 96);
  CHECK(big.n2_1 == 96);
  CHECK(big.n3_0 == 3 + static_cast<long>(std::sqrt(200.0 - 6 - 0.04)));
}

TEST_CASE("closed forms against the general thresholds") {
  for (long d = 4; d <= 200; ++d) {
    PolarizedSurface s = derive_invariants(d);
    ClosedForms c = closed_form_thresholds(d);
    REQUIRE(c.n1_0 == n1(s, Parity::Even));
    REQUIRE(c.n1_1 == n1(s, Parity::Odd));
    REQUIRE(c.n2_0 == n2(s, Parity::Even));
    REQUIRE(c.n2_1 == n2(s, Parity::Odd));
    REQUIRE(n3(s) <= std::max(c.n3_0, c.n3_1));

    // Every disagreement with the general n3 is listed.
    auto diffs = closed_form_discrepancies(d);
    bool has0 = false, has1 = false;
    for (const auto& x : diffs) {
      REQUIRE(x.printed != x.computed);
      REQUIRE(x.d == d);
      has0 = has0 || x.quantity == "n3(0)";
      has1 = has1 || x.quantity == "n3(1)";
    }
    REQUIRE(has0 == (c.n3_0 != n3(s)));
    REQUIRE(has1 == (c.n3_1 != n3(s)));
  }
  // The even closed form undershoots at d = 6: floor(5/2)^2 * 6 = 24 > 32 fails, so n3 = 6.
  CHECK(closed_form_thresholds(6).n3_0 == 5);
  CHECK(n3(derive_invariants(6)) == 6);
  CHECK_FALSE(splitting_inequality(derive_invariants(6), 5));

  auto d5 = closed_form_discrepancies(5);
  REQUIRE(d5.size() == 1);
  CHECK(d5[0].quantity == "n3(1)");
  CHECK(d5[0].printed == 6);
  CHECK(d5[0].computed == 4);
}

TEST_CASE("c_d bound") {
  for (long d = 10; d <= 200; ++d) {
    CdBound b = cd_bound(d);
    Integer m = d - 5;
    Integer e = d * (d - 4);
    REQUIRE(b.alt_n0 == d - 4);
    REQUIRE(b.value_at_alt_n0 == m * (m * d + e) / 2 + 1);
    REQUIRE(b.value_at_alt_n0 == Integer(d) * (d - 5) * (2 * d - 9) / 2 + 1);
    REQUIRE(b.display_value + 1 == b.value_at_alt_n0);
    REQUIRE(b.n0_star == bound_profile(derive_invariants(d)).n0_star);
    Integer k = b.n0_star - 1;
    REQUIRE(b.value == k * (k * d + e) / 2 + 1);
  }
  CdBound b100 = cd_bound(100);
  CHECK(b100.n0_star == 97);
  CHECK(b100.value == Integer(96) * (96 * 100 + 9600) / 2 + 1);

  for (long d = 100; d <= 200; ++d) {
    double ratio = cd_bound(d).value.get_d() / std::pow(static_cast<double>(d), 3);
    REQUIRE(ratio >= 0.5);
    REQUIRE(ratio <= 1.5);
  }
  // n1 collapses to 2 between d = 33 and 34, so the bound drops once there.
  CHECK(cd_bound(34).value < cd_bound(33).value);
  for (long d = 34; d < 200; ++d) REQUIRE(cd_bound(d).value <= cd_bound(d + 1).value);
}

TEST_CASE("known gap containment") {
  CHECK(known_gap_containment(4).empty());
  CHECK(known_gap_containment(5) == std::vector<GenusInterval>{{0, 2}});
  CHECK(known_gap_containment(6) == std::vector<GenusInterval>{{0, 54}});
  CHECK_THROWS_AS(known_gap_containment(3), DomainError);
}

TEST_CASE("discriminant cubic and sign table") {
  for (long d = 4; d <= 200; ++d) {
    for (int eps = 0; eps <= 1; ++eps) {
      Rational v = discriminant_cubic(eps ? Parity::Odd : Parity::Even)(Rational(d));
      REQUIRE(v * d == delta_p3(d, eps));
    }
  }

  RootTable t = root_table(4, 200);
  REQUIRE(t.signs.size() == 197);
  REQUIRE(t.roots[0].size() == 3);
  REQUIRE(t.roots[1].size() == 3);
  const double r0[] = {0.25, 2.89, 32.86}, r1[] = {0.36, 2.0, 33.64};
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(t.roots[0][i].midpoint().get_d() - r0[i]) <= 0.01);
    CHECK(std::abs(t.roots[1][i].midpoint().get_d() - r1[i]) <= 0.01);
    CHECK(t.roots[0][i].width() <= Rational(1, 10000));
  }
  CHECK(t.roots[1][1].exact());
  CHECK(t.roots[1][1].lo == 2);

  for (const auto& row : t.signs) {
    long d = row.d.get_si();
    REQUIRE(row.delta0 == delta_p3(d, 0));
    REQUIRE(row.delta1 == delta_p3(d, 1));
    // above the largest root the leading -x^3/3 term wins
    for (int eps = 0; eps <= 1; ++eps) {
      const auto& top = t.roots[eps].back();
      int sign = eps ? row.sign1 : row.sign0;
      if (Rational(d) > top.hi) REQUIRE(sign < 0);
      if (Rational(d) < top.lo && Rational(d) > t.roots[eps][1].hi) REQUIRE(sign > 0);
    }
  }
  CHECK(t.signs[32 - 4].sign0 > 0);
  CHECK(t.signs[33 - 4].sign0 < 0);
  CHECK(t.signs[33 - 4].sign1 > 0);
  CHECK(t.signs[34 - 4].sign1 < 0);
}

TEST_CASE("p3 report bundles the pieces") {
  P3Report r = p3_report(5);
  CHECK(r.surface == derive_invariants(5));
  CHECK(r.profile.phi == 331);
  CHECK(r.discrepancies.size() == 1);
  CHECK(r.known_gaps == std::vector<GenusInterval>{{0, 2}});
}
