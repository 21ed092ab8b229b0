#include "genusgaps/gap_intervals.hpp"

#include <algorithm>
#include <utility>

namespace genusgaps {

GenusInterval::GenusInterval(Integer l, Integer h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw DomainError("empty genus interval [" + lo.get_str() + ", " + hi.get_str() + "]");
  if (lo < 0) throw DomainError("negative genus " + lo.get_str());
}

GenusInterval interval_for(const PolarizedSurface& s, const Integer& n) {
  if (n < 1) throw DomainError("J_n needs n >= 1");
  return {arithmetic_genus(s, Integer(n - 1)), arithmetic_genus(s, n)};
}

std::vector<GenusInterval> merge(std::vector<GenusInterval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const GenusInterval& a, const GenusInterval& b) { return a.lo < b.lo; });
  std::vector<GenusInterval> out;
  for (auto& iv : intervals) {
    if (!out.empty() && iv.lo <= out.back().hi + 1) {
      if (iv.hi > out.back().hi) out.back().hi = iv.hi;
    } else {
      out.push_back(std::move(iv));
    }
  }
  return out;
}

bool covers(const std::vector<GenusInterval>& intervals, const Integer& lo, const Integer& hi) {
  if (lo > hi) return true;
  for (const auto& iv : merge(intervals)) {
    if (iv.lo <= lo && hi <= iv.hi) return true;
  }
  return false;
}

CoverageCertificate certify_coverage(const PolarizedSurface& s, const Integer& horizon) {
  BoundProfile profile = bound_profile(s);
  if (horizon < profile.n0_star) {
    throw PreconditionError("horizon " + horizon.get_str() + " is below n0 = " + profile.n0_star.get_str());
  }
  CoverageCertificate cert{s, profile.n0_star, {}, profile.phi, horizon};
  for (Integer n = profile.n0_star; n <= horizon; ++n) {
    Integer lo = arithmetic_genus(s, Integer(n - 1));
    Integer hi = arithmetic_genus(s, n);
    if (hi < lo || lo < 0) {
      throw OverlapError("J_" + n.get_str() + " = [" + lo.get_str() + ", " + hi.get_str() + "] is not a genus interval", n);
    }
    GenusInterval j(std::move(lo), std::move(hi));
    if (!cert.intervals.empty() && j.lo != cert.intervals.back().hi) {
      throw OverlapError("J_" + n.get_str() + " does not start at the end of J_" + Integer(n - 1).get_str(), n);
    }
    cert.intervals.push_back(std::move(j));
  }
  if (cert.intervals.front().lo != cert.threshold) {
    throw OverlapError("threshold differs from min J_n0", profile.n0_star);
  }
  return cert;
}

}  // namespace genusgaps
