#include "orbitfusion/verifier.hpp"

#include <exception>
#include <functional>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "orbitfusion/error.hpp"
#include "orbitfusion/fusion_oracle.hpp"
#include "orbitfusion/orbit_product.hpp"
#include "orbitfusion/weight_bridge.hpp"

namespace orbitfusion {

std::string_view to_string(ScanKind kind) {
  switch (kind) {
    case ScanKind::multiplicity_free: return "multiplicity-free";
    case ScanKind::orbit_monotone: return "orbit-monotone";
    case ScanKind::orbit_fusion_equality: return "orbit-fusion-equality";
    case ScanKind::fusion_monotone: return "fusion-monotone";
    case ScanKind::algorithm_equivalence: return "algorithm-equivalence";
  }
  return "unknown";
}

std::optional<ScanKind> parse_scan_kind(std::string_view name) {
  for (auto kind : {ScanKind::multiplicity_free, ScanKind::orbit_monotone,
                    ScanKind::orbit_fusion_equality, ScanKind::fusion_monotone,
                    ScanKind::algorithm_equivalence}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

bool uses_weights(ScanKind kind) {
  return kind == ScanKind::orbit_fusion_equality || kind == ScanKind::fusion_monotone;
}

void validate(const ScanSpec& spec) {
  if (spec.modulus < 2) {
    throw Error(ErrorCode::InvalidParams, "modulus must be >= 2");
  }
  if (spec.k_max < 1) {
    throw Error(ErrorCode::InvalidParams, "kmax must be >= 1");
  }
  if (spec.threads < 0) {
    throw Error(ErrorCode::InvalidParams, "threads must be >= 0");
  }
}

void ScanTally::merge(ScanTally&& other) {
  cases_checked += other.cases_checked;
  violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                    std::make_move_iterator(other.violations.end()));
}

int resolve_threads(const ScanSpec& spec) {
#ifdef _OPENMP
  return spec.threads > 0 ? spec.threads : omp_get_max_threads();
#else
  (void)spec;
  return 1;
#endif
}

namespace {

std::vector<int> to_vector(std::span<const int> values) {
  return std::vector<int>(values.begin(), values.end());
}

// One unit of work: everything with a fixed level and outer index. Units are
// independent, so they may run in any order; results are merged by index.
struct UnitResult {
  ScanTally proven;
  ScanTally evidence;
};

using UnitFn = std::function<UnitResult(std::size_t)>;

std::vector<UnitResult> run_units_serial(std::size_t count, const UnitFn& fn) {
  std::vector<UnitResult> results(count);
  for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
  return results;
}

std::vector<UnitResult> run_units_parallel(std::size_t count, const UnitFn& fn, int threads) {
  std::vector<UnitResult> results(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    try {
      results[u] = fn(u);
    } catch (...) {
      errors[u] = std::current_exception();
    }
  }
  // Report the failure the serial reference would have hit first.
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

class Scanner {
 public:
  Scanner(const ScanSpec& spec, bool parallel)
      : spec_(spec), parallel_(parallel), threads_(resolve_threads(spec)) {}

  Report run() {
    validate(spec_);
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.spec = spec_;
    const bool evidence = spec_.include_nonrow_b && (spec_.kind == ScanKind::multiplicity_free ||
                                                     spec_.kind == ScanKind::orbit_monotone);
    ScanTally evidence_tally;
    for (int k = 1; k <= spec_.k_max; ++k) {
      const Params params(spec_.modulus, k);
      for (auto& unit : scan_level(params)) {
        report.proven.merge(std::move(unit.proven));
        evidence_tally.merge(std::move(unit.evidence));
      }
    }
    if (evidence) report.evidence = std::move(evidence_tally);
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
  }

 private:
  std::vector<UnitResult> dispatch(std::size_t count, const UnitFn& fn) const {
    if (parallel_ && threads_ > 1) return run_units_parallel(count, fn, threads_);
    return run_units_serial(count, fn);
  }

  std::vector<UnitResult> scan_level(const Params& params) {
    switch (spec_.kind) {
      case ScanKind::multiplicity_free: return multiplicity_free(params);
      case ScanKind::orbit_monotone: return orbit_monotone(params);
      case ScanKind::orbit_fusion_equality: return orbit_fusion_equality(params);
      case ScanKind::fusion_monotone: return fusion_monotone(params);
      case ScanKind::algorithm_equivalence: return algorithm_equivalence(params);
    }
    return {};
  }

  // Row labels first, in order m = 0..k, then (evidence only) the rest.
  std::vector<OrbitLabel> b_labels(const Params& params,
                                   const std::vector<OrbitLabel>& labels) const {
    std::vector<OrbitLabel> out;
    for (int m = 0; m <= params.level(); ++m) out.push_back(row_label(params, m));
    if (spec_.include_nonrow_b) {
      for (const auto& b : labels)
        if (!b.is_row()) out.push_back(b);
    }
    return out;
  }

  static Violation orbit_violation(const OrbitLabel& a, const OrbitLabel& b, const OrbitLabel& c,
                                   std::uint64_t lhs, std::uint64_t rhs) {
    return {a.level(), to_vector(a.mults()), to_vector(b.mults()), to_vector(c.mults()),
            lhs, rhs, {}};
  }

  std::vector<UnitResult> multiplicity_free(const Params& params) {
    const auto labels = enumerate_labels(params);
    const auto bs = b_labels(params, labels);
    return dispatch(labels.size(), [&](std::size_t i) {
      UnitResult out;
      const auto& a = labels[i];
      for (const auto& b : bs) {
        ScanTally& tally = b.is_row() ? out.proven : out.evidence;
        const auto expansion = product(a, b, Method::blockwise);
        for (const auto& c : labels) {
          ++tally.cases_checked;
          const auto m = expansion.coefficient(c);
          if (m > 1) tally.violations.push_back(orbit_violation(a, b, c, m, 1));
        }
      }
      return out;
    });
  }

  std::vector<UnitResult> orbit_monotone(const Params& params) {
    const auto labels = enumerate_labels(params);
    const auto bs = b_labels(params, labels);
    return dispatch(labels.size(), [&](std::size_t i) {
      UnitResult out;
      const auto& a = labels[i];
      for (const auto& b : bs) {
        ScanTally& tally = b.is_row() ? out.proven : out.evidence;
        const auto lower = product(a, b, Method::blockwise);
        const auto upper = product(append_zero(a), append_zero(b), Method::blockwise);
        for (const auto& c : labels) {
          ++tally.cases_checked;
          const auto lhs = lower.coefficient(c);
          const auto rhs = upper.coefficient(append_zero(c));
          if (lhs > rhs) tally.violations.push_back(orbit_violation(a, b, c, lhs, rhs));
        }
      }
      return out;
    });
  }

  std::vector<UnitResult> orbit_fusion_equality(const Params& params) {
    const FusionOracle oracle(params);
    const auto& weights = oracle.weights();
    std::vector<Weight> rows;
    for (int m = 0; m <= params.level(); ++m) rows.push_back(row_weight(params, m));

    return dispatch(weights.size(), [&](std::size_t i) {
      UnitResult out;
      const auto& mu = weights[i];
      const auto mu_orbit = weight_to_orbit(mu);
      for (const auto& lambda : rows) {
        const auto expansion = product(mu_orbit, weight_to_orbit(lambda), Method::blockwise);
        for (const auto& nu : weights) {
          ++out.proven.cases_checked;
          const auto lhs = oracle.coefficient(lambda, mu, nu);
          const auto rhs = expansion.coefficient(weight_to_orbit(nu));
          if (lhs != rhs) {
            out.proven.violations.push_back({params.level(), to_vector(mu.coeffs()),
                                             to_vector(lambda.coeffs()), to_vector(nu.coeffs()),
                                             lhs, rhs, {}});
          }
        }
      }
      return out;
    });
  }

  std::vector<UnitResult> fusion_monotone(const Params& params) {
    const FusionOracle lower(params);
    const FusionOracle upper(params.next_level());
    const auto& weights = lower.weights();
    std::vector<Weight> rows;
    for (int m = 0; m <= params.level(); ++m) rows.push_back(row_weight(params, m));

    return dispatch(weights.size(), [&](std::size_t i) {
      UnitResult out;
      const auto& mu = weights[i];
      const auto mu_up = lift_level(mu);
      for (const auto& lambda : rows) {
        const auto lambda_up = lift_level(lambda);
        for (const auto& nu : weights) {
          ++out.proven.cases_checked;
          const auto lhs = lower.coefficient(lambda, mu, nu);
          const auto rhs = upper.coefficient(lambda_up, mu_up, lift_level(nu));
          if (lhs > rhs) {
            out.proven.violations.push_back({params.level(), to_vector(mu.coeffs()),
                                             to_vector(lambda.coeffs()), to_vector(nu.coeffs()),
                                             lhs, rhs, {}});
          }
        }
      }
      return out;
    });
  }

  // One case per label pair (a, b); a mismatch records every c where the
  // methods disagree, lhs from the definition method.
  std::vector<UnitResult> algorithm_equivalence(const Params& params) {
    const auto labels = enumerate_labels(params);
    const auto cap = spec_.enumeration_cap;
    return dispatch(labels.size(), [&](std::size_t i) {
      UnitResult out;
      const auto& a = labels[i];
      for (const auto& b : labels) {
        ++out.proven.cases_checked;
        const auto def = product(a, b, Method::definition, cap);
        const auto lst = product(a, b, Method::list, cap);
        const auto blk = product(a, b, Method::blockwise, cap);
        if (def == lst && def == blk) continue;
        std::set<OrbitLabel> keys;
        for (const auto* e : {&def, &lst, &blk})
          for (const auto& [c, count] : e->coefficients()) keys.insert(c);
        for (const auto& c : keys) {
          const auto d = def.coefficient(c);
          const auto l = lst.coefficient(c);
          const auto w = blk.coefficient(c);
          if (d != l) {
            auto v = orbit_violation(a, b, c, d, l);
            v.note = "definition vs list";
            out.proven.violations.push_back(std::move(v));
          }
          if (d != w) {
            auto v = orbit_violation(a, b, c, d, w);
            v.note = "definition vs blockwise";
            out.proven.violations.push_back(std::move(v));
          }
        }
      }
      return out;
    });
  }

  ScanSpec spec_;
  bool parallel_;
  int threads_;
};

}  // namespace

Report run_scan(const ScanSpec& spec) { return Scanner(spec, true).run(); }

Report run_scan_serial(const ScanSpec& spec) { return Scanner(spec, false).run(); }

}  // namespace orbitfusion
