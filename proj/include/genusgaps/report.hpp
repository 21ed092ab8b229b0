#pragma once

// Serialization of results for the command line front end. Certified integers are emitted as
// decimal strings; object keys are sorted so JSON output is canonical.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "genusgaps/absolute_gaps.hpp"
#include "genusgaps/gap_intervals.hpp"
#include "genusgaps/genus_bounds.hpp"
#include "genusgaps/nfold_bounds.hpp"
#include "genusgaps/p3_analysis.hpp"

namespace genusgaps::report {

using Json = nlohmann::json;

enum class Format { Table, Json, Csv };

/// "table", "json" or "csv"; DomainError otherwise.
Format parse_format(std::string_view name);
/// GENUSGAPS_FORMAT if set, else `fallback`.
Format default_format(Format fallback);

struct IntegerRange {
  Integer from;
  Integer to;
};
/// "a..b" with a <= b.
IntegerRange parse_range(std::string_view text);

Json to_json(const GenusInterval& iv);
Json to_json(const RootBracket& b);
Json to_json(const RealizationWitness& w);

// surface
Json surface_json(const PolarizedSurface& s, const BoundProfile& b, const CoverageCertificate& c);
std::string surface_table(const PolarizedSurface& s, const BoundProfile& b, const CoverageCertificate& c);
std::string surface_csv(const CoverageCertificate& c);
std::string surface_conclusion(const PolarizedSurface& s, const BoundProfile& b);

// p3
Json p3_json(const P3Report& r, const RootTable& roots);
std::string p3_table(const P3Report& r, const RootTable& roots);
std::string p3_csv_header();
std::string p3_csv_row(const P3Report& r);
Json p3_range_json(const std::vector<P3Report>& rows, const RootTable& roots);
std::string p3_range_table(const std::vector<P3Report>& rows, const RootTable& roots);

// abs-gaps
std::string witness_table(const RealizationWitness& w);
std::string witness_csv_header();
std::string witness_csv_row(const RealizationWitness& w);
Json audit_json(const AuditResult& a);
std::string audit_table(const AuditResult& a);

// nfold
Json nfold_json(const NfoldBoundResult& r);
std::string nfold_table(const HilbertData& h, const NfoldBoundResult& r);

// audit command
struct DegreeAudit {
  Integer d;
  bool contiguity = true;
  bool coverage = true;
  bool n3_oracle = true;
  bool side_condition = true;
  std::vector<Discrepancy> discrepancies;
  std::string failure;
  bool passed() const { return contiguity && coverage && n3_oracle; }
};
DegreeAudit audit_degree(const Integer& d);
Json degree_audit_json(const std::vector<DegreeAudit>& rows);
std::string degree_audit_csv(const std::vector<DegreeAudit>& rows);
std::string degree_audit_table(const std::vector<DegreeAudit>& rows);

/// Canonical text form: 2-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);

}  // namespace genusgaps::report
