#pragma once

// Wire formats. Orbit labels travel as multiplicity vectors, weights as
// fundamental-weight coefficient lists. Output never contains floating point
// unless a caller asks for raw oracle values explicitly.

#include <iosfwd>
#include <optional>
#include <string_view>

#include "json.hpp"

#include "orbitfusion/orbit_product.hpp"
#include "orbitfusion/verifier.hpp"

namespace orbitfusion {

enum class OutputFormat { json, csv, text };

std::string_view to_string(OutputFormat format);
std::optional<OutputFormat> parse_output_format(std::string_view name);

/// {"(c_0,...)": M, ...} with keys in sorted order.
nlohmann::json expansion_to_json(const ProductExpansion& expansion);

nlohmann::json report_to_json(const Report& report);

void write_report(std::ostream& out, const Report& report, OutputFormat format);

/// Header `k,a,b,c,lhs,rhs,status`, one row per violation, then a summary
/// row `summary,,,,<cases_checked>,<violation count>,<pass|fail>`.
void write_report_csv(std::ostream& out, const Report& report);

void write_report_text(std::ostream& out, const Report& report);

}  // namespace orbitfusion
