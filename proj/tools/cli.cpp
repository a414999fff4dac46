#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "orbitfusion/error.hpp"
#include "orbitfusion/fusion_oracle.hpp"
#include "orbitfusion/orbit_product.hpp"
#include "orbitfusion/report_io.hpp"
#include "orbitfusion/verifier.hpp"
#include "orbitfusion/weight_bridge.hpp"

namespace orbitfusion::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + text + "' is not a comma-separated integer list");
    }
  }
  if (!text.empty() && text.back() == ',') {
    throw UsageError(flag + ": trailing comma in '" + text + "'");
  }
  return out;
}

OutputFormat parse_format(const std::string& name) {
  auto format = parse_output_format(name);
  if (!format) throw UsageError("--format: unknown format '" + name + "'");
  return *format;
}

std::uint64_t cap() { return enumeration_cap_from_environment(); }

// "1,0,2" quoted for a CSV cell.
std::string csv_cell(std::span<const int> values) {
  const auto text = format_tuple(values);
  return '"' + text.substr(1, text.size() - 2) + '"';
}

nlohmann::json size_json(uint128 size) {
  if (size <= static_cast<uint128>(UINT64_MAX)) return static_cast<std::uint64_t>(size);
  return to_decimal(size);
}

struct CommonOptions {
  int modulus = 0;
  int level = 0;
  std::string format = "json";
};

int cmd_orbits(const CommonOptions& common, const std::string& label_text, std::ostream& out) {
  const Params params(common.modulus, common.level);
  const auto format = parse_format(common.format);

  if (!label_text.empty()) {
    const auto label = make_label(params, parse_int_list(label_text, "--label"));
    const auto elements = enumerate_orbit(label, cap());
    switch (format) {
      case OutputFormat::json: {
        nlohmann::json doc = {{"label", std::vector<int>(label.mults().begin(), label.mults().end())},
                              {"size", size_json(orbit_size(label))},
                              {"elements", elements}};
        out << doc.dump(2) << '\n';
        break;
      }
      case OutputFormat::csv:
        out << "element\n";
        for (const auto& t : elements) out << csv_cell(t) << '\n';
        break;
      case OutputFormat::text:
        out << "orbit " << format_label(label) << " standard form "
            << format_tuple(standard_form(label)) << ", " << elements.size() << " elements\n";
        for (const auto& t : elements) out << "  " << format_tuple(t) << '\n';
        break;
    }
    return kSuccess;
  }

  const auto labels = enumerate_labels(params);
  switch (format) {
    case OutputFormat::json: {
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& l : labels) {
        doc.push_back({{"label", std::vector<int>(l.mults().begin(), l.mults().end())},
                       {"size", size_json(orbit_size(l))}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "label,size\n";
      for (const auto& l : labels) {
        out << csv_cell(l.mults()) << ',' << to_decimal(orbit_size(l)) << '\n';
      }
      break;
    case OutputFormat::text:
      out << "N=" << params.modulus() << " k=" << params.level() << ": " << labels.size()
          << " orbits\n";
      for (const auto& l : labels) {
        out << "  " << format_label(l) << "  standard form " << format_tuple(standard_form(l))
            << "  size " << to_decimal(orbit_size(l)) << '\n';
      }
      break;
  }
  return kSuccess;
}

int cmd_product(const CommonOptions& common, const std::string& a_text,
                const std::string& b_text, const std::string& method_name, std::ostream& out) {
  const Params params(common.modulus, common.level);
  const auto format = parse_format(common.format);
  const auto method = parse_method(method_name);
  if (!method) throw UsageError("--method: unknown method '" + method_name + "'");
  const auto a = make_label(params, parse_int_list(a_text, "--a"));
  const auto b = make_label(params, parse_int_list(b_text, "--b"));
  const auto expansion = product(a, b, *method, cap());

  switch (format) {
    case OutputFormat::json: out << expansion_to_json(expansion).dump() << '\n'; break;
    case OutputFormat::csv:
      out << "c,coefficient\n";
      for (const auto& [c, m] : expansion.coefficients()) {
        out << csv_cell(c.mults()) << ',' << m << '\n';
      }
      break;
    case OutputFormat::text: {
      bool first = true;
      out << format_label(a) << " x " << format_label(b) << " = ";
      for (const auto& [c, m] : expansion.coefficients()) {
        if (!first) out << " + ";
        first = false;
        out << m << "*[" << format_tuple(standard_form(c)) << "]";
      }
      if (first) out << "0";
      out << '\n';
      break;
    }
  }
  return kSuccess;
}

int cmd_fusion(const CommonOptions& common, const std::string& lambda_text,
               const std::string& mu_text, const std::string& nu_text, bool debug_raw,
               std::ostream& out) {
  const Params params(common.modulus, common.level);
  const auto format = parse_format(common.format);
  const FusionQuery query{make_weight(params, parse_int_list(lambda_text, "--lambda")),
                          make_weight(params, parse_int_list(mu_text, "--mu")),
                          make_weight(params, parse_int_list(nu_text, "--nu"))};
  const auto result = evaluate_fusion(query);

  switch (format) {
    case OutputFormat::json:
      if (debug_raw) {
        nlohmann::json doc = {{"value", result.value},
                              {"raw_real", result.raw.real()},
                              {"raw_imag", result.raw.imag()}};
        out << doc.dump() << '\n';
      } else {
        out << nlohmann::json(result.value).dump() << '\n';
      }
      break;
    case OutputFormat::csv:
      out << (debug_raw ? "value,raw_real,raw_imag\n" : "value\n") << result.value;
      if (debug_raw) {
        out.precision(17);
        out << ',' << result.raw.real() << ',' << result.raw.imag();
      }
      out << '\n';
      break;
    case OutputFormat::text:
      out << "N_{" << format_weight(query.mu) << "," << format_weight(query.lambda) << "}^{"
          << format_weight(query.nu) << "} = " << result.value;
      if (debug_raw) {
        out.precision(17);
        out << "  (raw " << result.raw.real() << (result.raw.imag() < 0 ? "" : "+")
            << result.raw.imag() << "i)";
      }
      out << '\n';
      break;
  }
  return kSuccess;
}

int cmd_verify(const std::string& kind_name, int modulus, int k_max, bool include_nonrow_b,
               const std::string& format_name, const std::string& out_path, int threads,
               std::ostream& out) {
  const auto kind = parse_scan_kind(kind_name);
  if (!kind) throw UsageError("--kind: unknown scan kind '" + kind_name + "'");
  const auto format = parse_format(format_name);

  ScanSpec spec;
  spec.kind = *kind;
  spec.modulus = modulus;
  spec.k_max = k_max;
  spec.include_nonrow_b = include_nonrow_b;
  spec.threads = threads;
  spec.enumeration_cap = cap();
  const auto report = run_scan(spec);

  if (out_path.empty() || out_path == "-") {
    write_report(out, report, format);
  } else {
    std::ofstream file(out_path);
    if (!file) throw UsageError("--out: cannot open '" + out_path + "' for writing");
    write_report(file, report, format);
  }
  return report.passed() ? kSuccess : kViolations;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit algebra of Z_N^k under S_k and su(N)_k fusion checks", "orbit_fusion"};
  app.require_subcommand(1);

  CommonOptions common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--modulus,-N", common.modulus, "modulus N >= 2")->required();
    sub->add_option("--level,-k", common.level, "level k >= 1")->required();
    sub->add_option("--format", common.format, "json | csv | text")->capture_default_str();
  };

  std::string label_text;
  auto* orbits = app.add_subcommand("orbits", "list orbit labels, or the elements of one orbit");
  add_common(orbits);
  orbits->add_option("--label", label_text, "multiplicity vector a0,a1,...");

  std::string a_text, b_text, method_name = "blockwise";
  auto* prod = app.add_subcommand("product", "expand [a] x [b] over orbits");
  add_common(prod);
  prod->add_option("--a", a_text, "multiplicity vector of a")->required();
  prod->add_option("--b", b_text, "multiplicity vector of b")->required();
  prod->add_option("--method", method_name, "definition | list | blockwise")
      ->capture_default_str();

  std::string lambda_text, mu_text, nu_text;
  bool debug_raw = false;
  auto* fusion = app.add_subcommand("fusion", "su(N) level-k fusion coefficient N_{mu,lambda}^nu");
  add_common(fusion);
  fusion->add_option("--lambda", lambda_text, "coefficients c1,...,c_{N-1}")->required();
  fusion->add_option("--mu", mu_text, "coefficients c1,...,c_{N-1}")->required();
  fusion->add_option("--nu", nu_text, "coefficients c1,...,c_{N-1}")->required();
  fusion->add_flag("--debug-raw", debug_raw, "also print the raw Verlinde sum");

  std::string kind_name, verify_format = "json", out_path = "-";
  int verify_modulus = 0, k_max = 0, threads = 0;
  bool include_nonrow_b = false;
  auto* verify = app.add_subcommand("verify", "run an exhaustive verification scan");
  verify->add_option("--kind", kind_name,
                     "multiplicity-free | orbit-monotone | orbit-fusion-equality | "
                     "fusion-monotone | algorithm-equivalence")
      ->required();
  verify->add_option("--modulus,-N", verify_modulus, "modulus N >= 2")->required();
  verify->add_option("--kmax", k_max, "largest level scanned")->required();
  verify->add_flag("--include-nonrow-b", include_nonrow_b,
                   "also scan non-row b (reported as evidence only)");
  verify->add_option("--format", verify_format, "json | csv | text")->capture_default_str();
  verify->add_option("--out", out_path, "output path, - for stdout")->capture_default_str();
  verify->add_option("--threads", threads, "worker threads, 0 for all available")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (orbits->parsed()) return cmd_orbits(common, label_text, out);
    if (prod->parsed()) return cmd_product(common, a_text, b_text, method_name, out);
    if (fusion->parsed()) {
      return cmd_fusion(common, lambda_text, mu_text, nu_text, debug_raw, out);
    }
    if (verify->parsed()) {
      return cmd_verify(kind_name, verify_modulus, k_max, include_nonrow_b, verify_format,
                        out_path, threads, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_validation_error(e.code()) ? kUsageError : kInternalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace orbitfusion::cli
