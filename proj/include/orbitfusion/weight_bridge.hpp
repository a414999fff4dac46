#pragma once

// Dominant weights a_1 λ_1 + ... + a_{N-1} λ_{N-1} of A_{N-1} at level k, and
// their orbits ((N-1)^{a_{N-1}}, ..., 1^{a_1}, 0^{k - Σ a_i}) in Z_N^k.

#include <span>
#include <string>
#include <vector>

#include "orbitfusion/orbit_core.hpp"

namespace orbitfusion {

class Weight {
 public:
  const Params& params() const noexcept { return params_; }
  int modulus() const noexcept { return params_.modulus(); }
  int level() const noexcept { return params_.level(); }

  /// Fundamental-weight coefficients (a_1, ..., a_{N-1}).
  std::span<const int> coeffs() const noexcept { return coeffs_; }
  int coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i - 1)); }

  /// Σ a_i.
  int height() const noexcept;
  /// Σ i a_i, the size of the associated partition.
  int partition_size() const noexcept;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  friend Weight make_weight(const Params& params, std::span<const int> coeffs);
  Weight(Params params, std::vector<int> coeffs) : params_(params), coeffs_(std::move(coeffs)) {}

  Params params_;
  std::vector<int> coeffs_;
};

/// Throws ArityMismatch for a coefficient count other than N-1,
/// EntryOutOfRange for negative entries, LevelExceeded when Σ a_i > k.
Weight make_weight(const Params& params, std::span<const int> coeffs);
inline Weight make_weight(const Params& params, std::initializer_list<int> coeffs) {
  return make_weight(params, std::span<const int>(coeffs.begin(), coeffs.size()));
}

/// m λ_1.
Weight row_weight(const Params& params, int m);

OrbitLabel weight_to_orbit(const Weight& w);
Weight orbit_to_weight(const OrbitLabel& label);

bool is_row_weight(const Weight& w);

/// Same coefficients viewed at level k + 1.
Weight lift_level(const Weight& w);

/// Partition parts p_1 >= ... >= p_{N-1} >= p_N = 0 with p_j = Σ_{i>=j} a_i.
std::vector<int> partition_parts(const Weight& w);

/// e.g. "λ1+2λ2", "0" for the vacuum.
std::string format_weight(const Weight& w);
/// "(a_1,...,a_{N-1})".
std::string format_coeffs(const Weight& w);

}  // namespace orbitfusion
