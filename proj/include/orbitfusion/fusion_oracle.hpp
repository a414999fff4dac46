#pragma once

// su(N) level-k fusion coefficients N_{μ,λ}^{(k)ν} from the Verlinde formula,
// written with Weyl characters evaluated at the alcove points so that no
// S-matrix normalization constant enters:
//
//   N_{λμ}^ν = Σ_σ χ_λ(σ) χ_μ(σ) conj(χ_ν(σ)) / Σ_ρ |χ_ρ(σ)|²
//
// This module is an independent check on the orbit algebra and shares no code
// path with orbit_product.

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "orbitfusion/weight_bridge.hpp"

namespace orbitfusion {

/// Largest accepted distance of a raw Verlinde sum from a nonnegative integer.
inline constexpr double kFusionTolerance = 1e-6;

/// All weights with Σ a_i <= k, ascending lexicographically on (a_1, ..., a_{N-1}).
std::vector<Weight> enumerate_level_weights(const Params& params);

struct FusionQuery {
  Weight lambda;
  Weight mu;
  Weight nu;
};

struct FusionValue {
  std::uint64_t value = 0;
  std::complex<double> raw;
};

/// Character table for one (N, k), built once and read-only afterwards.
class FusionOracle {
 public:
  explicit FusionOracle(const Params& params);

  const Params& params() const noexcept { return params_; }
  const std::vector<Weight>& weights() const noexcept { return weights_; }
  std::size_t index_of(const Weight& w) const;

  /// χ_ρ(σ) for weights indexed as in weights().
  std::complex<double> character(std::size_t rho, std::size_t sigma) const {
    return characters_[rho * weights_.size() + sigma];
  }

  /// Throws NumericalDrift when the raw sum is not within kFusionTolerance of
  /// a nonnegative integer.
  FusionValue evaluate(const Weight& lambda, const Weight& mu, const Weight& nu) const;
  std::uint64_t coefficient(const Weight& lambda, const Weight& mu, const Weight& nu) const {
    return evaluate(lambda, mu, nu).value;
  }

 private:
  Params params_;
  std::vector<Weight> weights_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::complex<double>> characters_;  // row-major [rho][sigma]
  std::vector<double> sigma_factor_;              // 1 / Σ_ρ |χ_ρ(σ)|²
};

FusionValue evaluate_fusion(const FusionQuery& query);
std::uint64_t fusion_coefficient(const FusionQuery& query);

/// Truncated Clebsch-Gordan rule for su(2)_k with weights a λ_1, b λ_1, c λ_1.
/// Throws RangeError unless 0 <= a, b, c <= k.
int su2_fusion_closed_form(int a, int b, int c, int k);

/// Leibniz expansion; intended for the small (N <= ~6) matrices used here.
std::complex<double> determinant(const std::vector<std::complex<double>>& matrix, int size);

}  // namespace orbitfusion
