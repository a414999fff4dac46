#pragma once

// Orbits of Z_N^k under the coordinate-permuting action of S_k.
//
// An orbit is named by its multiplicity vector (a_0, ..., a_{N-1}): a_j counts
// how often residue j occurs in any element of the orbit. The weakly
// decreasing element ((N-1)^{a_{N-1}}, ..., 1^{a_1}, 0^{a_0}) is the orbit's
// standard form.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace orbitfusion {

using Tuple = std::vector<int>;
using uint128 = unsigned __int128;

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

class Params {
 public:
  /// Throws InvalidParams unless modulus >= 2 and level >= 1.
  Params(int modulus, int level);

  int modulus() const noexcept { return modulus_; }
  int level() const noexcept { return level_; }

  /// Same modulus, level + 1.
  Params next_level() const { return Params(modulus_, level_ + 1); }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  int modulus_;
  int level_;
};

class OrbitLabel {
 public:
  const Params& params() const noexcept { return params_; }
  int modulus() const noexcept { return params_.modulus(); }
  int level() const noexcept { return params_.level(); }

  std::span<const int> mults() const noexcept { return mults_; }
  int mult(int residue) const { return mults_.at(static_cast<std::size_t>(residue)); }

  /// True iff the standard form is (1^m, 0^{k-m}) for some m, m = 0 included.
  bool is_row() const noexcept;

  /// Ordered by level, then modulus, then multiplicity vector.
  friend std::strong_ordering operator<=>(const OrbitLabel& lhs, const OrbitLabel& rhs);
  friend bool operator==(const OrbitLabel& lhs, const OrbitLabel& rhs) = default;

 private:
  friend OrbitLabel make_label(const Params& params, std::span<const int> mults);
  friend OrbitLabel label_of_tuple(const Params& params, std::span<const int> tuple);
  OrbitLabel(Params params, std::vector<int> mults) : params_(params), mults_(std::move(mults)) {}

  Params params_;
  std::vector<int> mults_;
};

/// Validates a multiplicity vector: N nonnegative entries summing to k.
OrbitLabel make_label(const Params& params, std::span<const int> mults);
inline OrbitLabel make_label(const Params& params, std::initializer_list<int> mults) {
  return make_label(params, std::span<const int>(mults.begin(), mults.size()));
}

Tuple standard_form(const OrbitLabel& label);

/// Counts residues; throws EntryOutOfRange for entries outside [0, N) and
/// ArityMismatch when the length differs from k.
OrbitLabel label_of_tuple(const Params& params, std::span<const int> tuple);

/// Multinomial k! / (a_0! ... a_{N-1}!). Throws Overflow past 128 bits.
uint128 orbit_size(const OrbitLabel& label);

std::string to_decimal(uint128 value);

/// Visits every element of the orbit once, in lexicographically decreasing
/// order starting from the standard form. Returning false from `visit` stops.
void for_each_orbit_element(const OrbitLabel& label,
                            const std::function<bool(std::span<const int>)>& visit);

/// Materialized orbit. Throws BoundExceeded when orbit_size exceeds `cap`.
std::vector<Tuple> enumerate_orbit(const OrbitLabel& label,
                                   std::uint64_t cap = kDefaultEnumerationCap);

/// All weak compositions of k into N parts, C(k+N-1, N-1) of them, ordered
/// lexicographically decreasing on (a_{N-1}, ..., a_0). Equivalently the
/// standard forms come out in lexicographically decreasing order.
std::vector<OrbitLabel> enumerate_labels(const Params& params);

/// The m-th row label (k-m, m, 0, ..., 0), 0 <= m <= k.
OrbitLabel row_label(const Params& params, int m);

/// Exact binomial coefficient; throws Overflow past 64 bits.
std::uint64_t binomial(int n, int r);

/// "(a_0,a_1,...)" as used for JSON keys and diagnostics.
std::string format_label(const OrbitLabel& label);
std::string format_tuple(std::span<const int> tuple);

/// Reads ORBIT_FUSION_ENUM_CAP, falling back to kDefaultEnumerationCap.
std::uint64_t enumeration_cap_from_environment();

}  // namespace orbitfusion
