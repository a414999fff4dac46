#pragma once

// Exhaustive scans over all cases up to a level bound.
//
// Every scan compares a left-hand value with a right-hand value per case
// (k, a, b, c) and records the cases where the claimed relation fails:
//
//   multiplicity-free       M_{a,b}^c                 <= 1           (b a row)
//   orbit-monotone          M_{a,b}^c (level k)       <= M_{[a,0],[b,0]}^{[c,0]} (level k+1)
//   orbit-fusion-equality   N_{μ,λ}^ν (Verlinde)      == M_{[μ],[λ]}^{[ν]}      (λ = mλ_1)
//   fusion-monotone         N_{μ,λ}^ν (level k)       <= N_{μ,λ}^ν (level k+1)
//   algorithm-equivalence   definition == list == blockwise, coefficient by coefficient
//
// run_scan distributes cases over OpenMP threads; run_scan_serial is the
// single-threaded reference. Both produce identical reports.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitfusion/orbit_core.hpp"

namespace orbitfusion {

enum class ScanKind {
  multiplicity_free,
  orbit_monotone,
  orbit_fusion_equality,
  fusion_monotone,
  algorithm_equivalence,
};

std::string_view to_string(ScanKind kind);
std::optional<ScanKind> parse_scan_kind(std::string_view name);

/// Whether a scan's witnesses are orbit labels or fundamental-weight coefficients.
bool uses_weights(ScanKind kind);

struct ScanSpec {
  ScanKind kind = ScanKind::multiplicity_free;
  int modulus = 2;
  int k_max = 1;
  /// Also scan non-row b; those cases are reported as evidence only.
  bool include_nonrow_b = false;
  /// 0 means all available.
  int threads = 0;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

/// Throws InvalidParams unless modulus >= 2 and k_max >= 1.
void validate(const ScanSpec& spec);

struct Violation {
  int k = 0;
  std::vector<int> a, b, c;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  std::string note;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ScanTally {
  std::uint64_t cases_checked = 0;
  std::vector<Violation> violations;

  void merge(ScanTally&& other);
  friend bool operator==(const ScanTally&, const ScanTally&) = default;
};

struct Report {
  ScanSpec spec;
  ScanTally proven;                   // cases covered by the claim being checked
  std::optional<ScanTally> evidence;  // non-row b, present iff include_nonrow_b applies
  std::chrono::nanoseconds elapsed{0};

  bool passed() const noexcept { return proven.violations.empty(); }
};

Report run_scan(const ScanSpec& spec);
Report run_scan_serial(const ScanSpec& spec);

/// Number of threads run_scan would use for this spec.
int resolve_threads(const ScanSpec& spec);

}  // namespace orbitfusion
