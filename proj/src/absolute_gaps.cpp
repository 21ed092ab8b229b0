#include "genusgaps/absolute_gaps.hpp"

#include <algorithm>

namespace genusgaps {

Integer ell(const Integer& d, const Integer& n) {
  if (d < 1 || n < 1) throw DomainError("ell needs d, n >= 1");
  if (n < d) return exact_quotient(Integer(n * (n * n + 6 * n + 11)), Integer(6), "ell, n < d");
  Integer inner = 3 * n * n - 3 * n * (d - 4) + (d * d - 6 * d + 11);
  return exact_quotient(Integer(d * inner), Integer(6), "ell, n >= d") - 1;
}

Integer pnd(const Integer& d, const Integer& n) {
  if (d < 1 || n < 1) throw DomainError("pnd needs d, n >= 1");
  return exact_quotient(Integer(d * n * (d + n - 4)), Integer(2), "p_{d,n}") + 1;
}

GapFormulas default_formulas() {
  return {[](const Integer& d, const Integer& n) { return ell(d, n); },
          [](const Integer& d, const Integer& n) { return pnd(d, n); }};
}

namespace {

// [max(0, p_{n,d} - l_{n,d}), p_{n,d}], or nothing if empty.
std::optional<GenusInterval> aux_interval(const Integer& n, const Integer& d, const GapFormulas& f) {
  Integer hi = f.pnd(n, d);
  Integer lo = hi - f.ell(n, d);
  if (lo < 0) lo = 0;
  if (lo > hi) return std::nullopt;
  return GenusInterval(std::move(lo), std::move(hi));
}

constexpr const char* kSeveriDependency = "nonempty Severi variety of nodal curves on a general surface";
constexpr const char* kHighDependency = "gap bound for a very general surface of degree d";
constexpr const char* kRationalDependency = "nonempty Severi variety of nodal curves on a smooth surface of degree <= 3";
constexpr const char* kSmallDependency = "classical: surfaces of degree <= 4 carry curves of every genus";

}  // namespace

std::vector<ChainEntry> severi_chain(const Integer& d) {
  std::vector<ChainEntry> out;
  const GapFormulas f = default_formulas();
  for (Integer n = 4; n <= d - 2; ++n) {
    auto dm1 = aux_interval(n, Integer(d - 1), f);
    auto dd = aux_interval(n, d, f);
    if (!dm1 || !dd) throw IntegrityError("empty chain interval at n = " + n.get_str());
    out.push_back({n, *dm1, *dd});
  }
  return out;
}

ContiguityResult contiguity_check(const Integer& n, const Integer& d) {
  if (n < 4 || n > d - 2) {
    throw DomainError("contiguity_check needs 4 <= n <= d - 2 (n = " + n.get_str() + ", d = " + d.get_str() + ")");
  }
  ContiguityResult r;
  r.upper = pnd(n, d);
  r.lower = r.upper - ell(n, d);
  r.middle = pnd(n, Integer(d - 1)) + 1;
  r.reduced_value = 3 * d * (d - n + 2) + (n * n - 9 * n + 26);
  const bool left = r.lower <= r.middle;
  r.direct = left && r.middle < r.upper;
  r.reduced = r.reduced_value >= 0;
  if (left != r.reduced) {
    throw IntegrityError("direct and reduced contiguity forms disagree at n = " + n.get_str() + ", d = " + d.get_str());
  }
  return r;
}

Integer high_range_threshold(const Integer& d, const GapFormulas& f) {
  return f.pnd(d, Integer(d - 2)) - f.ell(d, Integer(d - 2));
}

bool high_range_side_condition(const Integer& d) {
  Integer m = d - 1;
  return m * m * m >= 12 * d * d;
}

std::string to_string(WitnessMode mode) {
  switch (mode) {
    case WitnessMode::SmallDegree: return "small-degree";
    case WitnessMode::Severi: return "severi";
    case WitnessMode::HighRange: return "high-range";
    case WitnessMode::RationalSeveri: return "rational-severi";
  }
  return "unknown";
}

RealizationWitness plan_realization(const Integer& d, const Integer& g, const GapFormulas& f) {
  if (d < 1) throw DomainError("surface degree must be >= 1");
  if (g < 0) throw DomainError("genus must be >= 0");
  RealizationWitness w;
  w.d = d;
  w.g = g;
  if (d <= 4) {
    w.mode = WitnessMode::SmallDegree;
    w.interval_lo = 0;
    w.dependency = kSmallDependency;
    return w;
  }
  auto severi = [&](const Integer& n, WitnessMode mode, const char* dep) {
    auto iv = aux_interval(n, d, f);
    if (!iv || !iv->contains(g)) return false;
    w.mode = mode;
    w.aux_degree = n;
    w.nodes = iv->hi - g;
    w.interval_lo = iv->lo;
    w.interval_hi = iv->hi;
    w.dependency = dep;
    return true;
  };
  for (Integer n = d - 2; n >= 4; --n) {
    if (severi(n, WitnessMode::Severi, kSeveriDependency)) return w;
  }
  Integer threshold = high_range_threshold(d, f);
  if (g >= threshold) {
    w.mode = WitnessMode::HighRange;
    w.interval_lo = threshold;
    w.side_condition = high_range_side_condition(d);
    w.dependency = kHighDependency;
    return w;
  }
  for (Integer n = 3; n >= 1; --n) {
    if (severi(n, WitnessMode::RationalSeveri, kRationalDependency)) return w;
  }
  throw CoverageError("no realization witness for g = " + g.get_str() + " on degree " + d.get_str(), g);
}

bool verify_witness(const RealizationWitness& w, const GapFormulas& f) {
  if (w.g < 0) return false;
  switch (w.mode) {
    case WitnessMode::SmallDegree:
      return w.d <= 4;
    case WitnessMode::HighRange:
      return w.d >= 5 && w.g >= high_range_threshold(w.d, f) && w.interval_lo == high_range_threshold(w.d, f);
    case WitnessMode::Severi:
    case WitnessMode::RationalSeveri: {
      if (!w.aux_degree || !w.nodes || !w.interval_hi) return false;
      const Integer& n = *w.aux_degree;
      const bool range_ok = w.mode == WitnessMode::Severi ? (n >= 4 && n <= w.d - 2) : (n >= 1 && n <= 3);
      if (!range_ok) return false;
      Integer p = f.pnd(n, w.d);
      Integer l = f.ell(n, w.d);
      return *w.nodes == p - w.g && *w.nodes >= 0 && *w.nodes <= l && w.g <= p && w.g >= p - l;
    }
  }
  return false;
}

AuditResult full_coverage_audit(const Integer& d, const Integer& g_max, const GapFormulas& f) {
  if (d < 5) throw DomainError("full_coverage_audit needs d >= 5");
  if (g_max < 0) throw DomainError("g_max must be >= 0");
  std::vector<GenusInterval> pieces;
  for (Integer n = 1; n <= d - 2; ++n) {
    if (auto iv = aux_interval(n, d, f)) pieces.push_back(*iv);
  }
  Integer threshold = high_range_threshold(d, f);
  if (threshold <= g_max) pieces.emplace_back(std::max(threshold, Integer(0)), g_max);
  AuditResult r{d, g_max, merge(std::move(pieces)), high_range_side_condition(d)};
  Integer next = 0;
  for (const auto& iv : r.merged) {
    if (iv.lo > next) break;
    if (iv.hi + 1 > next) next = iv.hi + 1;
  }
  if (next <= g_max) {
    throw CoverageError("degree " + d.get_str() + ": genus " + next.get_str() + " has no witness", next);
  }
  return r;
}

}  // namespace genusgaps
