#pragma once

// Structure constants M_{[a],[b]}^{[c]} of the orbit algebra: the number of
// S_k-orbits of {(x, y, z) in [a] x [b] x [c] : x + y = z}.

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "orbitfusion/orbit_core.hpp"

namespace orbitfusion {

enum class Method {
  definition,  // orbits of triples, by column multisets
  list,        // x fixed at its standard form, y reduced under the stabilizer
  blockwise,   // stabilizer orbits counted directly, no tuple enumeration
};

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

class ProductExpansion {
 public:
  explicit ProductExpansion(Params params) : params_(params) {}

  const Params& params() const noexcept { return params_; }
  const std::map<OrbitLabel, std::uint64_t>& coefficients() const& noexcept { return coeffs_; }
  std::map<OrbitLabel, std::uint64_t> coefficients() && { return std::move(coeffs_); }

  std::uint64_t coefficient(const OrbitLabel& c) const;

  /// Number of non-redundant equations, i.e. the sum of all coefficients.
  std::uint64_t total() const;

  void add(const OrbitLabel& c, std::uint64_t count);

  friend bool operator==(const ProductExpansion&, const ProductExpansion&) = default;

 private:
  Params params_;
  std::map<OrbitLabel, std::uint64_t> coeffs_;  // zero coefficients are never stored
};

/// [a] x [b] expanded over orbits. `cap` bounds orbit enumeration for the
/// definition and list methods (the definition method enumerates both [a] and [b]).
ProductExpansion product(const OrbitLabel& a, const OrbitLabel& b, Method method,
                         std::uint64_t cap = kDefaultEnumerationCap);

std::uint64_t structure_constant(const OrbitLabel& a, const OrbitLabel& b, const OrbitLabel& c,
                                 Method method, std::uint64_t cap = kDefaultEnumerationCap);

/// [a] at level k to [a, 0] at level k + 1.
OrbitLabel append_zero(const OrbitLabel& label);

/// Reduces y under the stabilizer of the standard form x̂: entries of y are
/// sorted weakly decreasing inside each constant block of x̂.
Tuple stabilizer_canonical_form(std::span<const int> standard, std::span<const int> y);

}  // namespace orbitfusion
