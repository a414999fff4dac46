#include "orbitfusion/orbit_product.hpp"

#include <algorithm>
#include <set>

#include "orbitfusion/error.hpp"

namespace orbitfusion {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::definition: return "definition";
    case Method::list: return "list";
    case Method::blockwise: return "blockwise";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "definition") return Method::definition;
  if (name == "list") return Method::list;
  if (name == "blockwise") return Method::blockwise;
  return std::nullopt;
}

std::uint64_t ProductExpansion::coefficient(const OrbitLabel& c) const {
  auto it = coeffs_.find(c);
  return it == coeffs_.end() ? 0 : it->second;
}

std::uint64_t ProductExpansion::total() const {
  std::uint64_t sum = 0;
  for (const auto& [label, count] : coeffs_) sum += count;
  return sum;
}

void ProductExpansion::add(const OrbitLabel& c, std::uint64_t count) {
  if (c.params() != params_) {
    throw Error(ErrorCode::ParamsMismatch, "label " + format_label(c) + " has foreign params");
  }
  if (count == 0) return;
  coeffs_[c] += count;
}

Tuple stabilizer_canonical_form(std::span<const int> standard, std::span<const int> y) {
  Tuple out(y.begin(), y.end());
  std::size_t begin = 0;
  while (begin < standard.size()) {
    std::size_t end = begin + 1;
    while (end < standard.size() && standard[end] == standard[begin]) ++end;
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(begin),
              out.begin() + static_cast<std::ptrdiff_t>(end), std::greater<>());
    begin = end;
  }
  return out;
}

namespace {

void check_cap(const OrbitLabel& label, std::uint64_t cap) {
  const uint128 size = orbit_size(label);
  if (size > static_cast<uint128>(cap)) {
    throw Error(ErrorCode::BoundExceeded, "orbit " + format_label(label) + " has " +
                                              to_decimal(size) + " elements, cap is " +
                                              std::to_string(cap));
  }
}

ProductExpansion product_definition(const OrbitLabel& a, const OrbitLabel& b,
                                    std::uint64_t cap) {
  check_cap(a, cap);
  check_cap(b, cap);
  const Params& params = a.params();
  const int n = params.modulus();
  const auto xs = enumerate_orbit(a, cap);
  const auto ys = enumerate_orbit(b, cap);

  // A triple's S_k-orbit is determined by the multiset of its columns
  // (x_i, y_i, z_i); z_i is implied by x_i and y_i, so (x_i, y_i) suffices.
  std::set<std::vector<int>> orbits;
  std::vector<int> columns(static_cast<std::size_t>(params.level()));
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      for (std::size_t i = 0; i < columns.size(); ++i) columns[i] = x[i] * n + y[i];
      std::sort(columns.begin(), columns.end());
      orbits.insert(columns);
    }
  }

  ProductExpansion out(params);
  Tuple z(static_cast<std::size_t>(params.level()));
  for (const auto& cols : orbits) {
    for (std::size_t i = 0; i < cols.size(); ++i) z[i] = (cols[i] / n + cols[i] % n) % n;
    out.add(label_of_tuple(params, z), 1);
  }
  return out;
}

ProductExpansion product_list(const OrbitLabel& a, const OrbitLabel& b, std::uint64_t cap) {
  check_cap(b, cap);
  const Params& params = a.params();
  const int n = params.modulus();
  const Tuple x_hat = standard_form(a);

  std::set<Tuple> seen;
  ProductExpansion out(params);
  Tuple z(x_hat.size());
  for_each_orbit_element(b, [&](std::span<const int> y) {
    Tuple canonical = stabilizer_canonical_form(x_hat, y);
    if (seen.insert(canonical).second) {
      for (std::size_t i = 0; i < z.size(); ++i) z[i] = (x_hat[i] + y[i]) % n;
      out.add(label_of_tuple(params, z), 1);
    }
    return true;
  });
  return out;
}

// Each stabilizer orbit of [b] relative to x̂ is a choice, for every constant
// block of x̂ (value v, size a_v), of a sub-multiset m_v of b's residues with
// |m_v| = a_v, the m_v together exhausting b. The z-orbit is then the union of
// the shifted multisets v + m_v.
ProductExpansion product_blockwise(const OrbitLabel& a, const OrbitLabel& b) {
  const Params& params = a.params();
  const int n = params.modulus();

  std::vector<int> block_values;
  for (int v = n - 1; v >= 0; --v) {
    if (a.mult(v) > 0) block_values.push_back(v);
  }

  std::vector<int> remaining(b.mults().begin(), b.mults().end());
  std::vector<int> z_mults(static_cast<std::size_t>(n), 0);
  std::map<std::vector<int>, std::uint64_t> counts;

  auto shift_into = [&](int v, int residue, int count) {
    z_mults[static_cast<std::size_t>((v + residue) % n)] += count;
  };

  // Chooses how many copies of `residue` go into the current block, then
  // recurses on the next residue; a finished block moves on to the next block.
  auto assign = [&](auto&& self, std::size_t block, int residue, int room) -> void {
    const int v = block_values[block];
    if (block + 1 == block_values.size()) {
      // The last block takes whatever is left; its size matches by counting.
      for (int r = 0; r < n; ++r) shift_into(v, r, remaining[static_cast<std::size_t>(r)]);
      ++counts[z_mults];
      for (int r = 0; r < n; ++r) shift_into(v, r, -remaining[static_cast<std::size_t>(r)]);
      return;
    }
    if (room == 0) {
      self(self, block + 1, 0, a.mult(block_values[block + 1]));
      return;
    }
    if (residue == n) return;
    auto& avail = remaining[static_cast<std::size_t>(residue)];
    // Residues after this one must be able to fill the remaining room.
    int later = 0;
    for (int r = residue + 1; r < n; ++r) later += remaining[static_cast<std::size_t>(r)];
    const int lo = std::max(0, room - later);
    const int hi = std::min(avail, room);
    for (int take = lo; take <= hi; ++take) {
      avail -= take;
      shift_into(v, residue, take);
      self(self, block, residue + 1, room - take);
      shift_into(v, residue, -take);
      avail += take;
    }
  };
  assign(assign, 0, 0, a.mult(block_values[0]));

  ProductExpansion out(params);
  for (const auto& [mults, count] : counts) out.add(make_label(params, mults), count);
  return out;
}

}  // namespace

ProductExpansion product(const OrbitLabel& a, const OrbitLabel& b, Method method,
                         std::uint64_t cap) {
  if (a.params() != b.params()) {
    throw Error(ErrorCode::ParamsMismatch, "labels " + format_label(a) + " and " +
                                               format_label(b) + " live at different (N, k)");
  }
  switch (method) {
    case Method::definition: return product_definition(a, b, cap);
    case Method::list: return product_list(a, b, cap);
    case Method::blockwise: return product_blockwise(a, b);
  }
  throw Error(ErrorCode::InvalidParams, "unknown method");
}

std::uint64_t structure_constant(const OrbitLabel& a, const OrbitLabel& b, const OrbitLabel& c,
                                 Method method, std::uint64_t cap) {
  if (c.params() != a.params()) {
    throw Error(ErrorCode::ParamsMismatch, "label " + format_label(c) + " has foreign params");
  }
  return product(a, b, method, cap).coefficient(c);
}

OrbitLabel append_zero(const OrbitLabel& label) {
  std::vector<int> mults(label.mults().begin(), label.mults().end());
  ++mults[0];
  return make_label(label.params().next_level(), mults);
}

}  // namespace orbitfusion
