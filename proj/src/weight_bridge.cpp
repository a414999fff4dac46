#include "orbitfusion/weight_bridge.hpp"

#include <algorithm>
#include <numeric>

#include "orbitfusion/error.hpp"

namespace orbitfusion {

int Weight::height() const noexcept { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

int Weight::partition_size() const noexcept {
  int size = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) size += static_cast<int>(i + 1) * coeffs_[i];
  return size;
}

Weight make_weight(const Params& params, std::span<const int> coeffs) {
  if (static_cast<int>(coeffs.size()) != params.modulus() - 1) {
    throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(params.modulus() - 1) +
                                              " weight coefficients, got " +
                                              std::to_string(coeffs.size()));
  }
  long long sum = 0;
  for (int c : coeffs) {
    if (c < 0) throw Error(ErrorCode::EntryOutOfRange, "negative weight coefficient");
    sum += c;
  }
  if (sum > params.level()) {
    throw Error(ErrorCode::LevelExceeded, "coefficients sum to " + std::to_string(sum) +
                                              ", above level " + std::to_string(params.level()));
  }
  return Weight(params, std::vector<int>(coeffs.begin(), coeffs.end()));
}

Weight row_weight(const Params& params, int m) {
  std::vector<int> coeffs(static_cast<std::size_t>(params.modulus() - 1), 0);
  coeffs[0] = m;
  return make_weight(params, coeffs);
}

OrbitLabel weight_to_orbit(const Weight& w) {
  std::vector<int> mults;
  mults.reserve(static_cast<std::size_t>(w.modulus()));
  mults.push_back(w.level() - w.height());
  mults.insert(mults.end(), w.coeffs().begin(), w.coeffs().end());
  return make_label(w.params(), mults);
}

Weight orbit_to_weight(const OrbitLabel& label) {
  return make_weight(label.params(), label.mults().subspan(1));
}

bool is_row_weight(const Weight& w) {
  const auto c = w.coeffs();
  return std::all_of(c.begin() + 1, c.end(), [](int a) { return a == 0; });
}

Weight lift_level(const Weight& w) { return make_weight(w.params().next_level(), w.coeffs()); }

std::vector<int> partition_parts(const Weight& w) {
  const auto c = w.coeffs();
  std::vector<int> parts(static_cast<std::size_t>(w.modulus()), 0);
  for (int j = w.modulus() - 2; j >= 0; --j) {
    parts[static_cast<std::size_t>(j)] =
        parts[static_cast<std::size_t>(j + 1)] + c[static_cast<std::size_t>(j)];
  }
  return parts;
}

std::string format_weight(const Weight& w) {
  std::string out;
  for (int i = 1; i < w.modulus(); ++i) {
    const int a = w.coeff(i);
    if (a == 0) continue;
    if (!out.empty()) out += '+';
    if (a != 1) out += std::to_string(a);
    out += "λ" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string format_coeffs(const Weight& w) { return format_tuple(w.coeffs()); }

}  // namespace orbitfusion
