#include "genusgaps/report.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace genusgaps::report {

namespace {

std::string s(const Integer& x) { return x.get_str(); }

Json interval_list(const std::vector<GenusInterval>& ivs) {
  Json a = Json::array();
  for (const auto& iv : ivs) a.push_back(to_json(iv));
  return a;
}

Json roots_json(const RootTable& t) {
  Json out = Json::object();
  for (int eps = 0; eps < 2; ++eps) {
    Json a = Json::array();
    for (const auto& b : t.roots[static_cast<std::size_t>(eps)]) a.push_back(to_json(b));
    out["eps" + std::to_string(eps)] = a;
  }
  return out;
}

std::string roots_text(const RootTable& t) {
  std::ostringstream out;
  for (int eps = 0; eps < 2; ++eps) {
    out << "  Delta(" << eps << ")/d roots:";
    for (const auto& b : t.roots[static_cast<std::size_t>(eps)]) {
      out << ' ' << (b.exact() ? b.lo.get_str() : to_decimal_string(b.midpoint(), 2));
      if (b.exact()) out << " (exact)";
    }
    out << "\n";
  }
  return out.str();
}

Json discrepancy_json(const std::vector<Discrepancy>& ds) {
  Json a = Json::array();
  for (const auto& d : ds) {
    a.push_back({{"quantity", d.quantity}, {"d", s(d.d)}, {"printed", s(d.printed)}, {"computed", s(d.computed)}});
  }
  return a;
}

// cd / d^3 rendered to 4 decimals.
std::string cube_ratio(const Integer& value, const Integer& d) {
  return to_decimal_string(ratio(value, Integer(d * d * d)), 4);
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "table") return Format::Table;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw DomainError("unknown output format '" + std::string(name) + "' (expected table, json or csv)");
}

Format default_format(Format fallback) {
  if (const char* env = std::getenv("GENUSGAPS_FORMAT"); env != nullptr && *env != '\0') return parse_format(env);
  return fallback;
}

IntegerRange parse_range(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) throw DomainError("range must look like a..b, got '" + std::string(text) + "'");
  IntegerRange r{parse_integer(text.substr(0, dots)), parse_integer(text.substr(dots + 2))};
  if (r.from > r.to) throw DomainError("empty range '" + std::string(text) + "'");
  return r;
}

Json to_json(const GenusInterval& iv) { return Json::array({s(iv.lo), s(iv.hi)}); }

Json to_json(const RootBracket& b) {
  return {{"lo", b.lo.get_str()}, {"hi", b.hi.get_str()}, {"approx", to_decimal_string(b.midpoint(), 2)},
          {"exact", b.exact()}};
}

Json to_json(const RealizationWitness& w) {
  Json j = {{"d", s(w.d)}, {"g", s(w.g)}, {"mode", to_string(w.mode)}, {"dependency", w.dependency},
            {"interval_lo", s(w.interval_lo)}};
  j["interval_hi"] = w.interval_hi ? Json(s(*w.interval_hi)) : Json(nullptr);
  j["aux_degree"] = w.aux_degree ? Json(s(*w.aux_degree)) : Json(nullptr);
  j["nodes"] = w.nodes ? Json(s(*w.nodes)) : Json(nullptr);
  if (w.mode == WitnessMode::HighRange) j["side_condition"] = w.side_condition;
  return j;
}

// ---------------------------------------------------------------------------
// surface

std::string surface_conclusion(const PolarizedSurface& sf, const BoundProfile& b) {
  return "for every g >= " + s(b.phi) + " the surface " + describe(sf) +
         " carries a reduced irreducible nodal curve of geometric genus g";
}

Json surface_json(const PolarizedSurface& sf, const BoundProfile& b, const CoverageCertificate& c) {
  Json j;
  j["surface"] = {{"d", s(sf.d)}, {"e", s(sf.e)}, {"pg", s(sf.p)}, {"q", s(sf.q)}, {"n4", s(sf.n4)}};
  j["delta0"] = s(b.delta0);
  j["delta1"] = s(b.delta1);
  j["n1"] = Json::array({s(b.n1_0), s(b.n1_1)});
  j["n2"] = Json::array({s(b.n2_0), s(b.n2_1)});
  j["n3"] = s(b.n3);
  j["n0"] = Json::array({s(b.n0_0), s(b.n0_1)});
  j["n0_star"] = s(b.n0_star);
  j["phi"] = s(b.phi);
  j["intervals"] = interval_list(c.intervals);
  j["verified_up_to"] = s(c.verified_up_to);
  j["conclusion"] = surface_conclusion(sf, b);
  return j;
}

std::string surface_table(const PolarizedSurface& sf, const BoundProfile& b, const CoverageCertificate& c) {
  std::ostringstream out;
  out << "surface " << describe(sf) << "\n";
  out << "  eps   Delta        n1    n2    n0\n";
  out << "  0     " << std::left << std::setw(12) << s(b.delta0) << ' ' << std::setw(5) << s(b.n1_0) << ' '
      << std::setw(5) << s(b.n2_0) << ' ' << s(b.n0_0) << "\n";
  out << "  1     " << std::setw(12) << s(b.delta1) << ' ' << std::setw(5) << s(b.n1_1) << ' ' << std::setw(5)
      << s(b.n2_1) << ' ' << s(b.n0_1) << "\n";
  out << "  n3 = " << s(b.n3) << ", n4 = " << s(sf.n4) << ", n0 = " << s(b.n0_star) << ", phi = " << s(b.phi) << "\n";
  out << "  non-gap intervals J_n (n = " << s(c.start_n) << ".." << s(c.verified_up_to) << "):\n";
  Integer n = c.start_n;
  for (const auto& iv : c.intervals) {
    out << "    J_" << s(n) << " = [" << s(iv.lo) << ", " << s(iv.hi) << "]\n";
    ++n;
  }
  out << surface_conclusion(sf, b) << "\n";
  return out.str();
}

std::string surface_csv(const CoverageCertificate& c) {
  std::ostringstream out;
  out << "n,lo,hi\n";
  Integer n = c.start_n;
  for (const auto& iv : c.intervals) {
    out << s(n) << ',' << s(iv.lo) << ',' << s(iv.hi) << "\n";
    ++n;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// p3

namespace {

Json p3_row_json(const P3Report& r) {
  const auto& sf = r.surface;
  const auto& cf = r.closed_forms;
  Json j;
  j["d"] = s(sf.d);
  j["e"] = s(sf.e);
  j["pg"] = s(sf.p);
  j["q"] = s(sf.q);
  j["n4"] = s(sf.n4);
  j["delta0"] = s(r.profile.delta0);
  j["delta1"] = s(r.profile.delta1);
  j["sign_delta0"] = sgn(r.profile.delta0);
  j["sign_delta1"] = sgn(r.profile.delta1);
  j["profile"] = {{"n1", {s(r.profile.n1_0), s(r.profile.n1_1)}},
                  {"n2", {s(r.profile.n2_0), s(r.profile.n2_1)}},
                  {"n3", s(r.profile.n3)},
                  {"n0", {s(r.profile.n0_0), s(r.profile.n0_1)}},
                  {"n0_star", s(r.profile.n0_star)},
                  {"phi", s(r.profile.phi)}};
  j["closed_forms"] = {{"n1", {s(cf.n1_0), s(cf.n1_1)}},
                       {"n2", {s(cf.n2_0), s(cf.n2_1)}},
                       {"n3", {s(cf.n3_0), s(cf.n3_1)}}};
  j["discrepancies"] = discrepancy_json(r.discrepancies);
  j["cd_bound"] = {{"n0_star", s(r.cd.n0_star)},
                   {"value", s(r.cd.value)},
                   {"alt_n0", s(r.cd.alt_n0)},
                   {"value_at_alt_n0", s(r.cd.value_at_alt_n0)},
                   {"display_value", s(r.cd.display_value)},
                   {"ratio_over_d3", cube_ratio(r.cd.value, sf.d)}};
  j["known_gaps"] = interval_list(r.known_gaps);
  return j;
}

}  // namespace

Json p3_json(const P3Report& r, const RootTable& roots) {
  Json j = p3_row_json(r);
  j["roots"] = roots_json(roots);
  return j;
}

std::string p3_table(const P3Report& r, const RootTable& roots) {
  const auto& sf = r.surface;
  const auto& cf = r.closed_forms;
  std::ostringstream out;
  out << "degree-" << s(sf.d) << " surface in P^3: e = " << s(sf.e) << ", p_g = " << s(sf.p) << ", q = " << s(sf.q)
      << ", n4 = " << s(sf.n4) << "\n";
  out << "  Delta(0) = " << s(r.profile.delta0) << ", Delta(1) = " << s(r.profile.delta1) << "\n";
  out << "  general:      n1 = " << s(r.profile.n1_0) << "/" << s(r.profile.n1_1) << "  n2 = " << s(r.profile.n2_0)
      << "/" << s(r.profile.n2_1) << "  n3 = " << s(r.profile.n3) << "\n";
  out << "  closed forms: n1 = " << s(cf.n1_0) << "/" << s(cf.n1_1) << "  n2 = " << s(cf.n2_0) << "/" << s(cf.n2_1)
      << "  n3 = " << s(cf.n3_0) << "/" << s(cf.n3_1) << "\n";
  for (const auto& d : r.discrepancies) {
    out << "  warning: closed form " << d.quantity << " = " << s(d.printed) << " differs from general value "
        << s(d.computed) << "\n";
  }
  out << "  c_d <= " << s(r.cd.value) << " (n0 = " << s(r.cd.n0_star) << ", c_d/d^3 = " << cube_ratio(r.cd.value, sf.d)
      << ")\n";
  out << "  phi at n0 = d-4: " << s(r.cd.value_at_alt_n0) << " (display form " << s(r.cd.display_value) << ")\n";
  out << "  known gaps on a very general surface:";
  if (r.known_gaps.empty()) out << " none";
  for (const auto& iv : r.known_gaps) out << " within [" << s(iv.lo) << ", " << s(iv.hi) << "]";
  out << "\n" << roots_text(roots);
  return out.str();
}

std::string p3_csv_header() {
  return "d,e,pg,q,n4,delta0,delta1,n1_0,n1_1,n2_0,n2_1,n3,n3_0_closed,n3_1_closed,n0_star,cd_bound,"
         "known_gap_hi,discrepancies\n";
}

std::string p3_csv_row(const P3Report& r) {
  const auto& sf = r.surface;
  const auto& b = r.profile;
  std::ostringstream out;
  out << s(sf.d) << ',' << s(sf.e) << ',' << s(sf.p) << ',' << s(sf.q) << ',' << s(sf.n4) << ',' << s(b.delta0) << ','
      << s(b.delta1) << ',' << s(b.n1_0) << ',' << s(b.n1_1) << ',' << s(b.n2_0) << ',' << s(b.n2_1) << ','
      << s(b.n3) << ',' << s(r.closed_forms.n3_0) << ',' << s(r.closed_forms.n3_1) << ',' << s(b.n0_star) << ','
      << s(r.cd.value) << ',';
  if (!r.known_gaps.empty()) out << s(r.known_gaps.back().hi);
  out << ',';
  for (std::size_t i = 0; i < r.discrepancies.size(); ++i) {
    if (i) out << ';';
    out << r.discrepancies[i].quantity;
  }
  out << "\n";
  return out.str();
}

Json p3_range_json(const std::vector<P3Report>& rows, const RootTable& roots) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(p3_row_json(r));
  return {{"rows", a}, {"roots", roots_json(roots)}};
}

std::string p3_range_table(const std::vector<P3Report>& rows, const RootTable& roots) {
  std::ostringstream out;
  out << "   d   sgnD0 sgnD1  n1(0) n1(1) n2(0) n2(1)  n3  n0  c_d bound\n";
  for (const auto& r : rows) {
    const auto& b = r.profile;
    out << std::right << std::setw(4) << s(r.surface.d) << std::setw(7) << sgn(b.delta0) << std::setw(6)
        << sgn(b.delta1) << std::setw(7) << s(b.n1_0) << std::setw(6) << s(b.n1_1) << std::setw(6) << s(b.n2_0)
        << std::setw(6) << s(b.n2_1) << std::setw(5) << s(b.n3) << std::setw(4) << s(b.n0_star) << "  "
        << s(r.cd.value) << "\n";
  }
  out << roots_text(roots);
  return out.str();
}

// ---------------------------------------------------------------------------
// abs-gaps

std::string witness_table(const RealizationWitness& w) {
  std::ostringstream out;
  out << "d = " << s(w.d) << ", g = " << s(w.g) << ": " << to_string(w.mode);
  switch (w.mode) {
    case WitnessMode::SmallDegree:
      out << " (curves of every genus are classical for d <= 4)";
      break;
    case WitnessMode::HighRange:
      out << ", g >= " << s(w.interval_lo) << " on a very general surface";
      if (!w.side_condition) out << " [warning: (d-1)^3 >= 12 d^2 fails for this d]";
      break;
    case WitnessMode::Severi:
    case WitnessMode::RationalSeveri:
      out << ", auxiliary degree n = " << s(*w.aux_degree) << ", nodes = " << s(*w.nodes) << ", interval ["
          << s(w.interval_lo) << ", " << s(*w.interval_hi) << "]";
      break;
  }
  out << "\n  relies on: " << w.dependency << "\n";
  return out.str();
}

std::string witness_csv_header() { return "d,g,mode,aux_degree,nodes,interval_lo,interval_hi,side_condition\n"; }

std::string witness_csv_row(const RealizationWitness& w) {
  std::ostringstream out;
  out << s(w.d) << ',' << s(w.g) << ',' << to_string(w.mode) << ',' << (w.aux_degree ? s(*w.aux_degree) : "") << ','
      << (w.nodes ? s(*w.nodes) : "") << ',' << s(w.interval_lo) << ',' << (w.interval_hi ? s(*w.interval_hi) : "")
      << ',' << (w.side_condition ? "true" : "false") << "\n";
  return out.str();
}

Json audit_json(const AuditResult& a) {
  return {{"d", s(a.d)}, {"g_max", s(a.g_max)}, {"covered", true}, {"merged", interval_list(a.merged)},
          {"side_condition", a.side_condition}};
}

std::string audit_table(const AuditResult& a) {
  std::ostringstream out;
  out << "degree " << s(a.d) << ": every genus in [0, " << s(a.g_max) << "] has a witness\n";
  for (const auto& iv : a.merged) out << "  covered [" << s(iv.lo) << ", " << s(iv.hi) << "]\n";
  if (!a.side_condition) out << "  warning: (d-1)^3 >= 12 d^2 fails; high range is not backed for this d\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// nfold

Json nfold_json(const NfoldBoundResult& r) {
  return {{"m_XL", s(r.m_XL)}, {"p_XL", s(r.p_XL)}, {"tail_from", s(r.tail_certified_from)}};
}

std::string nfold_table(const HilbertData& h, const NfoldBoundResult& r) {
  std::ostringstream out;
  out << "dim " << h.dim << ", P_can(m) = " << h.p_can.to_string("m") << ", P_lin(m) = " << h.p_lin.to_string("m")
      << ", q = " << s(h.q) << ", p_g = " << s(h.pg) << "\n";
  out << "  m_XL = " << s(r.m_XL) << ", p_XL = " << s(r.p_XL) << "\n";
  out << "  separation condition certified by root bounds for all m >= " << s(r.tail_certified_from)
      << ", checked exactly below\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// audit

DegreeAudit audit_degree(const Integer& d) {
  DegreeAudit a;
  a.d = d;
  PolarizedSurface sf = derive_invariants(d);
  Integer m = n3(sf);
  a.n3_oracle = splitting_inequality(sf, m) && (m == 1 || !splitting_inequality(sf, Integer(m - 1)));
  a.discrepancies = closed_form_discrepancies(d);
  a.side_condition = high_range_side_condition(d);
  for (Integer n = 4; n <= d - 2; ++n) {
    if (!contiguity_check(n, d).holds()) {
      a.contiguity = false;
      a.failure = "contiguity fails at n = " + s(n);
    }
  }
  if (d >= 5) {
    try {
      full_coverage_audit(d, pnd(d, d));
    } catch (const CoverageError& e) {
      a.coverage = false;
      a.failure = e.what();
    }
  }
  return a;
}

Json degree_audit_json(const std::vector<DegreeAudit>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) {
    a.push_back({{"d", s(r.d)},
                 {"contiguity", r.contiguity},
                 {"coverage", r.coverage},
                 {"n3_oracle", r.n3_oracle},
                 {"side_condition", r.side_condition},
                 {"passed", r.passed()},
                 {"failure", r.failure},
                 {"discrepancies", discrepancy_json(r.discrepancies)}});
  }
  return {{"rows", a}};
}

std::string degree_audit_csv(const std::vector<DegreeAudit>& rows) {
  std::ostringstream out;
  out << "d,contiguity,coverage,n3_oracle,side_condition,discrepancies,passed\n";
  for (const auto& r : rows) {
    out << s(r.d) << ',' << r.contiguity << ',' << r.coverage << ',' << r.n3_oracle << ',' << r.side_condition << ','
        << r.discrepancies.size() << ',' << r.passed() << "\n";
  }
  return out.str();
}

std::string degree_audit_table(const std::vector<DegreeAudit>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << "d = " << std::setw(3) << s(r.d) << "  " << (r.passed() ? "PASS" : "FAIL") << "  contiguity "
        << (r.contiguity ? "ok" : "FAIL") << ", coverage " << (r.coverage ? "ok" : "FAIL") << ", n3 "
        << (r.n3_oracle ? "ok" : "FAIL") << ", closed-form mismatches " << r.discrepancies.size();
    if (!r.side_condition) out << ", high-range side condition fails";
    if (!r.failure.empty()) out << "  (" << r.failure << ")";
    out << "\n";
  }
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace genusgaps::report
