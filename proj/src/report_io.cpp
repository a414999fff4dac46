#include "orbitfusion/report_io.hpp"

#include <chrono>
#include <ostream>

namespace orbitfusion {

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "unknown";
}

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  return std::nullopt;
}

nlohmann::json expansion_to_json(const ProductExpansion& expansion) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [label, count] : expansion.coefficients()) out[format_label(label)] = count;
  return out;
}

namespace {

nlohmann::json violation_to_json(const Violation& v) {
  nlohmann::json out = {{"k", v.k}, {"a", v.a}, {"b", v.b}, {"c", v.c},
                        {"lhs", v.lhs}, {"rhs", v.rhs}};
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

nlohmann::json tally_to_json(const ScanTally& tally) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : tally.violations) violations.push_back(violation_to_json(v));
  return {{"cases_checked", tally.cases_checked}, {"violations", violations}};
}

std::string joined(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

void write_csv_rows(std::ostream& out, const ScanTally& tally, std::string_view status) {
  for (const auto& v : tally.violations) {
    out << v.k << ",\"" << joined(v.a) << "\",\"" << joined(v.b) << "\",\"" << joined(v.c)
        << "\"," << v.lhs << ',' << v.rhs << ',' << status << '\n';
  }
}

}  // namespace

nlohmann::json report_to_json(const Report& report) {
  const auto& spec = report.spec;
  nlohmann::json out = tally_to_json(report.proven);
  out["kind"] = std::string(to_string(spec.kind));
  out["modulus"] = spec.modulus;
  out["kmax"] = spec.k_max;
  out["include_nonrow_b"] = spec.include_nonrow_b;
  out["witness"] = uses_weights(spec.kind) ? "weight" : "orbit-label";
  out["status"] = report.passed() ? "pass" : "fail";
  out["elapsed_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count();
  if (report.evidence) {
    auto evidence = tally_to_json(*report.evidence);
    evidence["scope"] = "non-row b; evidence only, excluded from status";
    out["evidence"] = std::move(evidence);
  }
  return out;
}

void write_report_csv(std::ostream& out, const Report& report) {
  out << "k,a,b,c,lhs,rhs,status\n";
  write_csv_rows(out, report.proven, "violation");
  if (report.evidence) write_csv_rows(out, *report.evidence, "evidence");
  out << "summary,,,," << report.proven.cases_checked << ','
      << report.proven.violations.size() << ',' << (report.passed() ? "pass" : "fail") << '\n';
}

void write_report_text(std::ostream& out, const Report& report) {
  const auto& spec = report.spec;
  const bool weights = uses_weights(spec.kind);
  out << "scan " << to_string(spec.kind) << " N=" << spec.modulus << " k<=" << spec.k_max
      << '\n';
  out << "cases checked: " << report.proven.cases_checked << '\n';
  out << "violations: " << report.proven.violations.size() << '\n';
  for (const auto& v : report.proven.violations) {
    out << "  k=" << v.k << (weights ? " mu=" : " a=") << format_tuple(v.a)
        << (weights ? " lambda=" : " b=") << format_tuple(v.b) << (weights ? " nu=" : " c=")
        << format_tuple(v.c) << " lhs=" << v.lhs << " rhs=" << v.rhs;
    if (!v.note.empty()) out << " (" << v.note << ')';
    out << '\n';
  }
  if (report.evidence) {
    out << "evidence (non-row b, not part of status): " << report.evidence->cases_checked
        << " cases, " << report.evidence->violations.size() << " violations\n";
  }
  out << "status: " << (report.passed() ? "pass" : "fail") << '\n';
}

void write_report(std::ostream& out, const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: out << report_to_json(report).dump(2) << '\n'; break;
    case OutputFormat::csv: write_report_csv(out, report); break;
    case OutputFormat::text: write_report_text(out, report); break;
  }
}

}  // namespace orbitfusion
