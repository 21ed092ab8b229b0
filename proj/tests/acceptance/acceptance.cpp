// Acceptance battery: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "genusgaps/absolute_gaps.hpp"
#include "genusgaps/gap_intervals.hpp"
#include "genusgaps/genus_bounds.hpp"
#include "genusgaps/nfold_bounds.hpp"
#include "genusgaps/p3_analysis.hpp"

using namespace genusgaps;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// Raw evaluations with machine integers, independent of the library code paths.
long raw_p(long d, long n) { return d * n * (d + n - 4) / 2 + 1; }

long raw_ell(long d, long n) {
  if (n < d) return n * (n * n + 6 * n + 11) / 6;
  return d * (3 * n * n - 3 * n * (d - 4) + (d * d - 6 * d + 11)) / 6 - 1;
}

long raw_delta(long d, int eps) {
  long e = d * (d - 4), p = (d - 1) * (d - 2) * (d - 3) / 6;
  return 4 * (3 + 2 * eps) * d * d + 12 * d * e + e * e - 8 * d * p;
}

Outcome sign_table() {
  Outcome o;
  for (long d = 4; d <= 200; ++d) {
    PolarizedSurface s = derive_invariants(d);
    Integer d0 = discriminant(s, Parity::Even), d1 = discriminant(s, Parity::Odd);
    if (d0 != raw_delta(d, 0) || d1 != raw_delta(d, 1)) o.fail("discriminant mismatch at d = " + std::to_string(d));
    if (d <= 32 && d0 < 0) o.fail("Delta(0) < 0 at d = " + std::to_string(d));
    if (d >= 33 && d0 > 0) o.fail("Delta(0) > 0 at d = " + std::to_string(d));
    if (d <= 33 && d1 < 0) o.fail("Delta(1) < 0 at d = " + std::to_string(d));
  }
  RootTable t = root_table(4, 200);
  for (const auto& row : t.signs) {
    if (row.sign0 != sgn(row.delta0) || row.sign1 != sgn(row.delta1)) o.fail("sign row inconsistent");
  }
  if (o.ok) o.detail = "Delta(0) >= 0 on 4..32, <= 0 on 33..200; Delta(1) >= 0 on 4..33";
  return o;
}

Outcome root_table_check() {
  Outcome o;
  RootTable t = root_table(4, 4);
  const double expected[2][3] = {{0.25, 2.89, 32.86}, {0.36, 2.0, 33.64}};
  std::ostringstream shown;
  for (int eps = 0; eps <= 1; ++eps) {
    if (t.roots[eps].size() != 3) {
      o.fail("expected three positive roots for eps = " + std::to_string(eps));
      return o;
    }
    shown << (eps ? "; eps=1:" : "eps=0:");
    for (int i = 0; i < 3; ++i) {
      const RootBracket& b = t.roots[eps][i];
      double mid = b.midpoint().get_d();
      shown << ' ' << to_decimal_string(b.midpoint(), 2);
      if (std::abs(mid - expected[eps][i]) > 0.01) o.fail("root " + std::to_string(mid) + " off the expected value");
      RationalCubic c = discriminant_cubic(eps ? Parity::Odd : Parity::Even);
      if (!b.exact() && sgn(c(b.lo)) * sgn(c(b.hi)) > 0) o.fail("bracket without sign change");
    }
  }
  const RootBracket& mid = t.roots[1][1];
  if (!mid.exact() || mid.lo != 2 || discriminant_cubic(Parity::Odd)(Rational(2)) != 0) {
    o.fail("middle eps=1 root not certified equal to 2");
  }
  if (o.ok) o.detail = shown.str() + " (middle eps=1 root exactly 2)";
  return o;
}

Outcome p3_identities() {
  Outcome o;
  for (long d = 4; d <= 200; ++d) {
    PolarizedSurface s = derive_invariants(d);
    if (s.p != (d - 1) * (d - 2) * (d - 3) / 6 || s.e != d * (d - 4) || s.n4 != d - 3 || s.q != 0) {
      o.fail("invariants wrong at d = " + std::to_string(d));
    }
    long target = 2 * d * d + 1;
    if (pnd(4, d) != target || ell(4, d) != target || raw_p(4, d) != target || raw_ell(4, d) != target) {
      o.fail("p_{4,d} = l_{4,d} = 2d^2 + 1 fails at d = " + std::to_string(d));
    }
  }
  if (o.ok) o.detail = "p, e, n4, p_{4,d} = l_{4,d} = 2d^2+1 for 4 <= d <= 200";
  return o;
}

Outcome cd_asymptotics() {
  Outcome o;
  for (long d = 10; d <= 200; ++d) {
    Integer via_phi = phi(Integer(d), Integer(d * (d - 4)), Integer(d - 4));
    Integer closed = Integer(d) * (d - 5) * (2 * d - 9) / 2 + 1;
    CdBound b = cd_bound(d);
    if (via_phi != closed || b.value_at_alt_n0 != closed) o.fail("identity fails at d = " + std::to_string(d));
    if (closed - b.display_value != 1) o.fail("display offset is not 1 at d = " + std::to_string(d));
  }
  double lo = 10, hi = 0;
  for (long d = 100; d <= 200; ++d) {
    double r = cd_bound(d).value.get_d() / (static_cast<double>(d) * d * d);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  if (lo < 0.5 || hi > 1.5) o.fail("c_d / d^3 outside [0.5, 1.5]");
  char buf[160];
  std::snprintf(buf, sizeof buf, "identity on 10..200; display form is exactly 1 less; c_d/d^3 in [%.3f, %.3f]", lo, hi);
  if (o.ok) o.detail = buf;
  o.notes.push_back("logged: phi(d, d(d-4), d-4) = d(d-5)(2d-9)/2 + 1; the display form d(d-5)(2d-9)/2 drops the +1");
  return o;
}

Outcome lemma_grid() {
  Outcome o;
  long tuples = 0, checks = 0;
  for (long d = 1; d <= 50; ++d) {
    for (long e = -d - 2; e <= 3 * d; ++e) {
      if ((d - e) % 2 != 0 || e + 2 * d <= 0) continue;
      for (long p : {0L, 1L, d, d * d, 3 * d * d}) {
        for (long q : {0L, 2L}) {
          for (long n4 : {1L, 3L}) {
            PolarizedSurface s{d, e, p, q, n4};
            ++tuples;
            for (Parity eps : {Parity::Even, Parity::Odd}) {
              Integer start = std::max(n1(s, eps), Integer(2 * n4));
              if (parity_of(start) != eps) ++start;
              Integer n2e = n2(s, eps);
              for (int k = 0; k <= 5; ++k) {
                Integer n = start + 2 * k;
                bool b1 = check_bound1(s, n);
                ++checks;
                if (!b1) o.fail("half-level bound fails for " + describe(s) + " at n = " + n.get_str());
                if (b1 && n >= n2e) {
                  ++checks;
                  if (!check_bound(s, n)) o.fail("bound fails for " + describe(s) + " at n = " + n.get_str());
                }
              }
            }
          }
        }
      }
    }
  }
  if (tuples < 10000) o.fail("grid too small: " + std::to_string(tuples));
  if (o.ok) o.detail = std::to_string(tuples) + " tuples, " + std::to_string(checks) + " implications, 0 failures";
  return o;
}

Outcome n3_oracle() {
  Outcome o;
  std::map<std::string, std::vector<long>> mismatches;
  for (long d = 4; d <= 200; ++d) {
    PolarizedSurface s = derive_invariants(d);
    long e = d * (d - 4);
    long n = n3(s).get_si();
    auto holds = [&](long m) { return (m / 2) * (m / 2) * d > m * d - (d - e) / 2 - 1; };
    if (!holds(n) || (n > 1 && holds(n - 1))) o.fail("n3 not minimal at d = " + std::to_string(d));

    ClosedForms c = closed_form_thresholds(d);
    BoundProfile b = bound_profile(s);
    std::map<std::string, std::pair<Integer, Integer>> expected = {
        {"n1(0)", {c.n1_0, b.n1_0}}, {"n1(1)", {c.n1_1, b.n1_1}}, {"n2(0)", {c.n2_0, b.n2_0}},
        {"n2(1)", {c.n2_1, b.n2_1}}, {"n3(0)", {c.n3_0, Integer(n)}}, {"n3(1)", {c.n3_1, Integer(n)}}};
    auto reported = closed_form_discrepancies(d);
    for (const auto& [name, values] : expected) {
      bool differs = values.first != values.second;
      bool listed = false;
      for (const auto& r : reported) listed = listed || (r.quantity == name && r.printed == values.first && r.computed == values.second);
      if (differs != listed) o.fail(name + " mismatch not reported at d = " + std::to_string(d));
      if (differs) mismatches[name].push_back(d);
    }
    if (reported.size() != static_cast<std::size_t>(std::count_if(expected.begin(), expected.end(), [](const auto& kv) {
          return kv.second.first != kv.second.second;
        }))) {
      o.fail("spurious discrepancy at d = " + std::to_string(d));
    }
  }
  for (const auto& [name, ds] : mismatches) {
    std::string list;
    for (std::size_t i = 0; i < ds.size() && i < 8; ++i) list += (i ? ", " : "") + std::to_string(ds[i]);
    if (ds.size() > 8) list += ", ...";
    o.notes.push_back("warning: printed " + name + " differs from the general value at " + std::to_string(ds.size()) +
                      " degrees (d = " + list + ")");
  }
  if (o.ok) o.detail = "n3 minimal by definition on 4..200; " + std::to_string(mismatches.size()) + " closed form(s) with reported mismatches";
  return o;
}

Outcome absolute_gap_audit() {
  Outcome o;
  long witnesses = 0, pairs = 0;
  for (long d = 5; d <= 30; ++d) {
    const long top = raw_p(d, d);
    const long high = raw_p(d, d - 2) - raw_ell(d, d - 2);
    for (long g = 0; g <= top; ++g) {
      RealizationWitness w = plan_realization(d, g);
      ++witnesses;
      bool in = false;
      switch (w.mode) {
        case WitnessMode::HighRange:
          in = g >= high && w.interval_lo == high;
          break;
        case WitnessMode::Severi:
        case WitnessMode::RationalSeveri: {
          long n = w.aux_degree ? w.aux_degree->get_si() : -1;
          bool range = w.mode == WitnessMode::Severi ? (4 <= n && n <= d - 2) : (1 <= n && n <= 3);
          long p = raw_p(n, d), l = raw_ell(n, d);
          in = range && g <= p && g >= p - l && w.nodes && *w.nodes == p - g;
          break;
        }
        case WitnessMode::SmallDegree:
          in = false;
          break;
      }
      if (!in) {
        o.fail("witness for d = " + std::to_string(d) + ", g = " + std::to_string(g) + " does not verify");
        return o;
      }
    }
    for (long n = 4; n <= d - 2; ++n) {
      ContiguityResult c = contiguity_check(n, d);
      ++pairs;
      bool raw = raw_p(n, d) - raw_ell(n, d) <= raw_p(n, d - 1) + 1 && raw_p(n, d - 1) + 1 < raw_p(n, d);
      if (c.direct != c.reduced || !c.holds() || raw != c.direct) {
        o.fail("contiguity fails at n = " + std::to_string(n) + ", d = " + std::to_string(d));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(witnesses) + " witnesses re-verified, " + std::to_string(pairs) + " contiguity pairs";
  return o;
}

Outcome cross_module() {
  Outcome o;
  std::istringstream in(
      "dim 2\n"
      "pcan 5 5/2 5/2\n"
      "plin 5 -5/2 5/2\n"
      "q 0\n"
      "pg 4\n"
      "plin-valid-from 2\n");
  HilbertData h = parse_hilbert_data(in);
  for (long m = 1; m <= 50; ++m) {
    if (genus_pm(h, m) != arithmetic_genus(Integer(5), Integer(5), Integer(m))) o.fail("p_m differs at m = " + std::to_string(m));
  }
  Integer M = tail_certificate(h);
  for (Integer m = M; m < M + 100; ++m) {
    if (!separation_condition(h, m)) o.fail("separation fails at m = " + m.get_str());
  }
  NfoldBoundResult r = find_threshold(h);
  if (o.ok) o.detail = "p_m = p(5,5,m) on 1..50; tail certified from m = " + M.get_str() + ", window of 100 true; m_XL = " +
                       r.m_XL.get_str() + ", p_XL = " + r.p_XL.get_str();
  return o;
}

Outcome certificate_structure() {
  Outcome o;
  std::mt19937_64 rng(20260418);
  std::uniform_int_distribution<long> dd(1, 60), pp(0, 2000), qq(0, 4), nn(1, 6), extra(0, 40);
  for (int i = 0; i < 20; ++i) {
    long d = dd(rng);
    std::uniform_int_distribution<long> ee(-d, 5 * d);
    long e = ee(rng);
    if ((d - e) % 2 != 0) ++e;
    PolarizedSurface s{d, e, pp(rng), qq(rng), nn(rng)};
    BoundProfile b = bound_profile(s);
    CoverageCertificate c = certify_coverage(s, b.n0_star + extra(rng));
    if (c.threshold != b.phi || c.intervals.front().lo != b.phi) o.fail("threshold != phi for " + describe(s));
    for (std::size_t k = 1; k < c.intervals.size(); ++k) {
      if (c.intervals[k].lo != c.intervals[k - 1].hi) o.fail("endpoints not shared for " + describe(s));
    }
  }
  if (o.ok) o.detail = "20 random surfaces, shared endpoints and threshold = phi";
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
  double time_limit;  // seconds, 0 for none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"discriminant sign table", sign_table, 1.0},
      {"discriminant root table", root_table_check, 1.0},
      {"P^3 invariant identities", p3_identities, 0.0},
      {"asymptotic c_d", cd_asymptotics, 0.0},
      {"inequality lemma grid", lemma_grid, 30.0},
      {"n3 oracle and closed forms", n3_oracle, 0.0},
      {"absolute-gap audit", absolute_gap_audit, 60.0},
      {"cross-module consistency", cross_module, 0.0},
      {"coverage-certificate structure", certificate_structure, 0.0},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0 && secs >= c.time_limit) o.fail("runtime " + std::to_string(secs) + " s over the limit");
    if (!o.ok) ++failures;
    std::printf("[%s] %d %s: %s (%.3f s)\n", o.ok ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), secs);
    for (const auto& n : o.notes) std::printf("       %s\n", n.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
