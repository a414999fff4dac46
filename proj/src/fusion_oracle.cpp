#include "orbitfusion/fusion_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "orbitfusion/error.hpp"

namespace orbitfusion {

std::vector<Weight> enumerate_level_weights(const Params& params) {
  const int rank = params.modulus() - 1;
  std::vector<Weight> out;
  std::vector<int> coeffs(static_cast<std::size_t>(rank), 0);
  auto fill = [&](auto&& self, int i, int remaining) -> void {
    if (i == rank) {
      out.push_back(make_weight(params, coeffs));
      return;
    }
    for (int a = 0; a <= remaining; ++a) {
      coeffs[static_cast<std::size_t>(i)] = a;
      self(self, i + 1, remaining - a);
    }
  };
  fill(fill, 0, params.level());
  return out;
}

std::complex<double> determinant(const std::vector<std::complex<double>>& matrix, int size) {
  std::vector<int> perm(static_cast<std::size_t>(size));
  std::iota(perm.begin(), perm.end(), 0);
  std::complex<double> det = 0.0;
  do {
    // Sign from the inversion count.
    int inversions = 0;
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    std::complex<double> term = (inversions % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i < size; ++i) {
      term *= matrix[static_cast<std::size_t>(i * size + perm[static_cast<std::size_t>(i)])];
    }
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

namespace {

// Alcove point of σ: x_a = exp(-2πi φ_a / (k + N)), with
// φ_a = p_a + N - a - (|p| + N(N-1)/2) / N, a = 1..N.
std::vector<std::complex<double>> alcove_point(const Weight& sigma) {
  const int n = sigma.modulus();
  const auto parts = partition_parts(sigma);
  const double shift =
      (static_cast<double>(sigma.partition_size()) + n * (n - 1) / 2.0) / static_cast<double>(n);
  const double period = static_cast<double>(sigma.level() + n);
  std::vector<std::complex<double>> x(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    const double phi = parts[static_cast<std::size_t>(a - 1)] + n - a - shift;
    x[static_cast<std::size_t>(a - 1)] =
        std::polar(1.0, -2.0 * std::numbers::pi * phi / period);
  }
  return x;
}

// det(x_b^{e_a}) for exponents e_a, rows a, columns b.
std::complex<double> alternant(const std::vector<std::complex<double>>& x,
                               const std::vector<int>& exponents) {
  const int n = static_cast<int>(x.size());
  std::vector<std::complex<double>> m(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      m[static_cast<std::size_t>(a * n + b)] =
          std::pow(x[static_cast<std::size_t>(b)], exponents[static_cast<std::size_t>(a)]);
  return determinant(m, n);
}

std::vector<int> shifted_exponents(const Weight& w) {
  const int n = w.modulus();
  auto parts = partition_parts(w);
  for (int a = 1; a <= n; ++a) parts[static_cast<std::size_t>(a - 1)] += n - a;
  return parts;
}

}  // namespace

FusionOracle::FusionOracle(const Params& params)
    : params_(params), weights_(enumerate_level_weights(params)) {
  const std::size_t count = weights_.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto c = weights_[i].coeffs();
    index_.emplace(std::vector<int>(c.begin(), c.end()), i);
  }

  const int n = params.modulus();
  std::vector<int> vandermonde_exponents(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) vandermonde_exponents[static_cast<std::size_t>(a - 1)] = n - a;

  std::vector<std::vector<int>> exponents;
  exponents.reserve(count);
  for (const auto& w : weights_) exponents.push_back(shifted_exponents(w));

  characters_.resize(count * count);
  sigma_factor_.resize(count);
  for (std::size_t s = 0; s < count; ++s) {
    const auto x = alcove_point(weights_[s]);
    const auto denominator = alternant(x, vandermonde_exponents);
    double norm = 0.0;
    for (std::size_t r = 0; r < count; ++r) {
      const auto chi = alternant(x, exponents[r]) / denominator;
      characters_[r * count + s] = chi;
      norm += std::norm(chi);
    }
    sigma_factor_[s] = 1.0 / norm;
  }
}

std::size_t FusionOracle::index_of(const Weight& w) const {
  if (w.params() != params_) {
    throw Error(ErrorCode::ParamsMismatch,
                "weight " + format_weight(w) + " is not at (N, k) of this oracle");
  }
  const auto c = w.coeffs();
  return index_.at(std::vector<int>(c.begin(), c.end()));
}

FusionValue FusionOracle::evaluate(const Weight& lambda, const Weight& mu, const Weight& nu) const {
  const std::size_t l = index_of(lambda);
  const std::size_t m = index_of(mu);
  const std::size_t v = index_of(nu);
  const std::size_t count = weights_.size();

  std::complex<double> raw = 0.0;
  for (std::size_t s = 0; s < count; ++s) {
    raw += characters_[l * count + s] * characters_[m * count + s] *
           std::conj(characters_[v * count + s]) * sigma_factor_[s];
  }

  const double rounded = std::round(raw.real());
  if (rounded < 0.0 || std::abs(raw.real() - rounded) > kFusionTolerance ||
      std::abs(raw.imag()) > kFusionTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "Verlinde sum for λ=" << format_weight(lambda) << " μ=" << format_weight(mu)
        << " ν=" << format_weight(nu) << " is " << raw.real() << (raw.imag() < 0 ? "" : "+")
        << raw.imag() << "i";
    throw Error(ErrorCode::NumericalDrift, msg.str());
  }
  return {static_cast<std::uint64_t>(rounded), raw};
}

FusionValue evaluate_fusion(const FusionQuery& query) {
  if (query.mu.params() != query.lambda.params() || query.nu.params() != query.lambda.params()) {
    throw Error(ErrorCode::ParamsMismatch, "fusion query weights live at different (N, k)");
  }
  return FusionOracle(query.lambda.params()).evaluate(query.lambda, query.mu, query.nu);
}

std::uint64_t fusion_coefficient(const FusionQuery& query) { return evaluate_fusion(query).value; }

int su2_fusion_closed_form(int a, int b, int c, int k) {
  for (int v : {a, b, c}) {
    if (v < 0 || v > k) {
      throw Error(ErrorCode::RangeError, "su(2) weight " + std::to_string(v) + " outside [0, " +
                                             std::to_string(k) + "]");
    }
  }
  const bool in_range = std::abs(a - b) <= c && c <= std::min(a + b, 2 * k - a - b);
  return (in_range && (a + b + c) % 2 == 0) ? 1 : 0;
}

}  // namespace orbitfusion
