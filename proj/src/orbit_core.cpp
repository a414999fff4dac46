#include "orbitfusion/orbit_core.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "orbitfusion/error.hpp"

namespace orbitfusion {

Params::Params(int modulus, int level) : modulus_(modulus), level_(level) {
  if (modulus < 2) {
    throw Error(ErrorCode::InvalidParams, "modulus must be >= 2, got " + std::to_string(modulus));
  }
  if (level < 1) {
    throw Error(ErrorCode::InvalidParams, "level must be >= 1, got " + std::to_string(level));
  }
}

bool OrbitLabel::is_row() const noexcept {
  return std::all_of(mults_.begin() + 2, mults_.end(), [](int m) { return m == 0; });
}

std::strong_ordering operator<=>(const OrbitLabel& lhs, const OrbitLabel& rhs) {
  if (auto c = lhs.level() <=> rhs.level(); c != 0) return c;
  if (auto c = lhs.modulus() <=> rhs.modulus(); c != 0) return c;
  return std::lexicographical_compare_three_way(lhs.mults_.begin(), lhs.mults_.end(),
                                                rhs.mults_.begin(), rhs.mults_.end());
}

OrbitLabel make_label(const Params& params, std::span<const int> mults) {
  if (static_cast<int>(mults.size()) != params.modulus()) {
    throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(params.modulus()) +
                                              " multiplicities, got " +
                                              std::to_string(mults.size()));
  }
  long long sum = 0;
  for (int m : mults) {
    if (m < 0) throw Error(ErrorCode::EntryOutOfRange, "negative multiplicity");
    sum += m;
  }
  if (sum != params.level()) {
    throw Error(ErrorCode::SumMismatch, "multiplicities sum to " + std::to_string(sum) +
                                            ", level is " + std::to_string(params.level()));
  }
  return OrbitLabel(params, std::vector<int>(mults.begin(), mults.end()));
}

Tuple standard_form(const OrbitLabel& label) {
  Tuple out;
  out.reserve(static_cast<std::size_t>(label.level()));
  for (int v = label.modulus() - 1; v >= 0; --v) {
    out.insert(out.end(), static_cast<std::size_t>(label.mult(v)), v);
  }
  return out;
}

OrbitLabel label_of_tuple(const Params& params, std::span<const int> tuple) {
  if (static_cast<int>(tuple.size()) != params.level()) {
    throw Error(ErrorCode::ArityMismatch, "tuple has length " + std::to_string(tuple.size()) +
                                              ", level is " + std::to_string(params.level()));
  }
  std::vector<int> mults(static_cast<std::size_t>(params.modulus()), 0);
  for (int x : tuple) {
    if (x < 0 || x >= params.modulus()) {
      throw Error(ErrorCode::EntryOutOfRange,
                  "entry " + std::to_string(x) + " outside [0, " +
                      std::to_string(params.modulus()) + ")");
    }
    ++mults[static_cast<std::size_t>(x)];
  }
  return OrbitLabel(params, std::move(mults));
}

namespace {

uint128 checked_binomial128(int n, int r) {
  // C(n, r) built as C(n-r+i, i); each intermediate is itself a binomial.
  r = std::min(r, n - r);
  uint128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    uint128 next;
    if (__builtin_mul_overflow(acc, static_cast<uint128>(n - r + i), &next)) {
      throw Error(ErrorCode::Overflow, "binomial exceeds 128 bits");
    }
    acc = next / static_cast<uint128>(i);
  }
  return acc;
}

}  // namespace

uint128 orbit_size(const OrbitLabel& label) {
  uint128 size = 1;
  int placed = 0;
  for (int m : label.mults()) {
    placed += m;
    uint128 next;
    if (__builtin_mul_overflow(size, checked_binomial128(placed, m), &next)) {
      throw Error(ErrorCode::Overflow, "orbit size of " + format_label(label) +
                                           " exceeds 128 bits");
    }
    size = next;
  }
  return size;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  uint128 value = checked_binomial128(n, r);
  if (value > static_cast<uint128>(UINT64_MAX)) {
    throw Error(ErrorCode::Overflow, "binomial exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(value);
}

std::string to_decimal(uint128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

void for_each_orbit_element(const OrbitLabel& label,
                            const std::function<bool(std::span<const int>)>& visit) {
  Tuple current = standard_form(label);
  do {
    if (!visit(current)) return;
  } while (std::prev_permutation(current.begin(), current.end()));
}

std::vector<Tuple> enumerate_orbit(const OrbitLabel& label, std::uint64_t cap) {
  const uint128 size = orbit_size(label);
  if (size > static_cast<uint128>(cap)) {
    throw Error(ErrorCode::BoundExceeded, "orbit " + format_label(label) + " has " +
                                              to_decimal(size) + " elements, cap is " +
                                              std::to_string(cap));
  }
  std::vector<Tuple> out;
  out.reserve(static_cast<std::size_t>(size));
  for_each_orbit_element(label, [&](std::span<const int> t) {
    out.emplace_back(t.begin(), t.end());
    return true;
  });
  return out;
}

std::vector<OrbitLabel> enumerate_labels(const Params& params) {
  const int n = params.modulus();
  const int k = params.level();
  std::vector<OrbitLabel> out;
  out.reserve(static_cast<std::size_t>(binomial(k + n - 1, n - 1)));
  std::vector<int> mults(static_cast<std::size_t>(n), 0);

  // Fill a_{N-1} first with the largest admissible value and count down.
  auto fill = [&](auto&& self, int residue, int remaining) -> void {
    if (residue == 0) {
      mults[0] = remaining;
      out.push_back(make_label(params, mults));
      return;
    }
    for (int m = remaining; m >= 0; --m) {
      mults[static_cast<std::size_t>(residue)] = m;
      self(self, residue - 1, remaining - m);
    }
  };
  fill(fill, n - 1, k);
  return out;
}

OrbitLabel row_label(const Params& params, int m) {
  if (m < 0 || m > params.level()) {
    throw Error(ErrorCode::RangeError, "row length " + std::to_string(m) + " outside [0, " +
                                           std::to_string(params.level()) + "]");
  }
  std::vector<int> mults(static_cast<std::size_t>(params.modulus()), 0);
  mults[0] = params.level() - m;
  mults[1] = m;
  return make_label(params, mults);
}

std::string format_tuple(std::span<const int> tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(tuple[i]);
  }
  out += ')';
  return out;
}

std::string format_label(const OrbitLabel& label) { return format_tuple(label.mults()); }

std::uint64_t enumeration_cap_from_environment() {
  const char* raw = std::getenv("ORBIT_FUSION_ENUM_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCap;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) {
    throw Error(ErrorCode::InvalidParams,
                std::string("ORBIT_FUSION_ENUM_CAP must be a positive integer, got '") + raw + "'");
  }
  return value;
}

}  // namespace orbitfusion
