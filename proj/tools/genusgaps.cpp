// genusgaps: effective genus-gap bounds from the command line.
//
// Exit status: 0 success, 2 input error, 3 certification or audit failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "genusgaps/report.hpp"

namespace {

using namespace genusgaps;
using report::Format;

constexpr int kInputError = 2;
constexpr int kCertificationError = 3;

struct Options {
  std::string format;
  std::string output;

  // surface
  std::string d, e, pg, q = "0", n4;
  std::string horizon;

  // p3 / audit
  std::string p3_d;
  std::string d_range;

  // abs-gaps
  std::string g, g_range;
  bool audit = false;

  // nfold
  std::string hilbert_file;
};

Format resolve_format(const Options& o, Format fallback) {
  if (!o.format.empty()) return report::parse_format(o.format);
  return report::default_format(fallback);
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw DomainError("cannot open output file " + o.output);
  out << text;
}

int run_surface(const Options& o) {
  PolarizedSurface s{parse_integer(o.d), parse_integer(o.e), parse_integer(o.pg), parse_integer(o.q),
                     parse_integer(o.n4)};
  BoundProfile b = bound_profile(s);
  Integer horizon = o.horizon.empty() ? Integer(b.n0_star + 10) : parse_integer(o.horizon);
  CoverageCertificate c = certify_coverage(s, horizon);
  switch (resolve_format(o, Format::Table)) {
    case Format::Json: emit(o, report::dump(report::surface_json(s, b, c))); break;
    case Format::Csv: emit(o, report::surface_csv(c)); break;
    case Format::Table: emit(o, report::surface_table(s, b, c)); break;
  }
  return 0;
}

int run_p3(const Options& o) {
  if (o.p3_d.empty() == o.d_range.empty()) throw DomainError("p3 needs exactly one of --d or --d-range");
  if (!o.p3_d.empty()) {
    Integer d = parse_integer(o.p3_d);
    P3Report r = p3_report(d);
    RootTable roots = root_table(d, d);
    switch (resolve_format(o, Format::Table)) {
      case Format::Json: emit(o, report::dump(report::p3_json(r, roots))); break;
      case Format::Csv: emit(o, report::p3_csv_header() + report::p3_csv_row(r)); break;
      case Format::Table: emit(o, report::p3_table(r, roots)); break;
    }
    return 0;
  }
  auto range = report::parse_range(o.d_range);
  std::vector<P3Report> rows;
  for (Integer d = range.from; d <= range.to; ++d) rows.push_back(p3_report(d));
  RootTable roots = root_table(range.from, range.to);
  switch (resolve_format(o, Format::Csv)) {
    case Format::Json: emit(o, report::dump(report::p3_range_json(rows, roots))); break;
    case Format::Table: emit(o, report::p3_range_table(rows, roots)); break;
    case Format::Csv: {
      std::string text = report::p3_csv_header();
      for (const auto& r : rows) text += report::p3_csv_row(r);
      emit(o, text);
      break;
    }
  }
  return 0;
}

int run_absgaps(const Options& o) {
  Integer d = parse_integer(o.d);
  if (o.g.empty() == o.g_range.empty()) throw DomainError("abs-gaps needs exactly one of --g or --g-range");
  const Format fmt = resolve_format(o, Format::Table);
  if (o.audit) {
    Integer g_max = o.g.empty() ? report::parse_range(o.g_range).to : parse_integer(o.g);
    if (!o.g_range.empty() && report::parse_range(o.g_range).from < 0) throw DomainError("genus must be >= 0");
    AuditResult a = full_coverage_audit(d, g_max);
    if (fmt == Format::Json) {
      emit(o, report::dump(report::audit_json(a)));
    } else {
      emit(o, report::audit_table(a));
    }
    return 0;
  }
  std::vector<RealizationWitness> ws;
  if (!o.g.empty()) {
    ws.push_back(plan_realization(d, parse_integer(o.g)));
  } else {
    auto range = report::parse_range(o.g_range);
    for (Integer g = range.from; g <= range.to; ++g) ws.push_back(plan_realization(d, g));
  }
  std::string text;
  switch (fmt) {
    case Format::Json: {
      if (ws.size() == 1) {
        text = report::dump(report::to_json(ws.front()));
      } else {
        report::Json a = report::Json::array();
        for (const auto& w : ws) a.push_back(report::to_json(w));
        text = report::dump(a);
      }
      break;
    }
    case Format::Csv:
      text = report::witness_csv_header();
      for (const auto& w : ws) text += report::witness_csv_row(w);
      break;
    case Format::Table:
      for (const auto& w : ws) text += report::witness_table(w);
      break;
  }
  emit(o, text);
  return 0;
}

int run_nfold(const Options& o) {
  std::ifstream in(o.hilbert_file);
  if (!in) throw DomainError("cannot open Hilbert data file " + o.hilbert_file);
  HilbertData h = parse_hilbert_data(in);
  NfoldBoundResult r = find_threshold(h);
  switch (resolve_format(o, Format::Table)) {
    case Format::Json: emit(o, report::dump(report::nfold_json(r))); break;
    case Format::Csv:
      emit(o, "m_XL,p_XL,tail_from\n" + r.m_XL.get_str() + "," + r.p_XL.get_str() + "," +
                  r.tail_certified_from.get_str() + "\n");
      break;
    case Format::Table: emit(o, report::nfold_table(h, r)); break;
  }
  return 0;
}

int run_audit(const Options& o) {
  auto range = report::parse_range(o.d_range);
  if (range.from < 4) throw DomainError("audit needs degrees >= 4");
  std::vector<report::DegreeAudit> rows;
  bool ok = true;
  for (Integer d = range.from; d <= range.to; ++d) {
    rows.push_back(report::audit_degree(d));
    ok = ok && rows.back().passed();
  }
  switch (resolve_format(o, Format::Table)) {
    case Format::Json: emit(o, report::dump(report::degree_audit_json(rows))); break;
    case Format::Csv: emit(o, report::degree_audit_csv(rows)); break;
    case Format::Table: emit(o, report::degree_audit_table(rows)); break;
  }
  return ok ? 0 : kCertificationError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Effective bounds on geometric genus gaps for curves on polarized surfaces"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "table, json or csv (default from GENUSGAPS_FORMAT)");
    sub->add_option("--output,-o", o.output, "write to this file instead of standard output");
  };

  auto* surface = app.add_subcommand("surface", "thresholds and non-gap intervals for a polarized surface");
  surface->add_option("--d", o.d, "L^2")->required();
  surface->add_option("--e", o.e, "K.L")->required();
  surface->add_option("--pg", o.pg, "geometric genus p_g(S)")->required();
  surface->add_option("--q", o.q, "irregularity q(S)");
  surface->add_option("--n4", o.n4, "least n with h^1(nL) = h^2(nL) = 0")->required();
  surface->add_option("--horizon", o.horizon, "last n of the certified interval chain (default n0 + 10)");
  add_common(surface);

  auto* p3 = app.add_subcommand("p3", "smooth surfaces of degree d in P^3");
  p3->add_option("--d", o.p3_d, "surface degree");
  p3->add_option("--d-range", o.d_range, "degree range a..b (CSV rows by default)");
  add_common(p3);

  auto* absgaps = app.add_subcommand("abs-gaps", "realization witnesses on smooth surfaces in P^3");
  absgaps->add_option("--d", o.d, "surface degree")->required();
  absgaps->add_option("--g", o.g, "target genus");
  absgaps->add_option("--g-range", o.g_range, "genus range a..b");
  absgaps->add_flag("--audit", o.audit, "check coverage of the whole range instead of listing witnesses");
  add_common(absgaps);

  auto* nfold = app.add_subcommand("nfold", "genus threshold from Hilbert polynomial data");
  nfold->add_option("hilbert-file", o.hilbert_file, "Hilbert data file")->required();
  add_common(nfold);

  auto* audit = app.add_subcommand("audit", "certification battery for P^3 degrees");
  audit->add_option("--d-range", o.d_range, "degree range a..b")->required();
  add_common(audit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*surface) return run_surface(o);
    if (*p3) return run_p3(o);
    if (*absgaps) return run_absgaps(o);
    if (*nfold) return run_nfold(o);
    if (*audit) return run_audit(o);
  } catch (const CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return kCertificationError;
  } catch (const ParseError& e) {
    std::cerr << o.hilbert_file << ": " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
