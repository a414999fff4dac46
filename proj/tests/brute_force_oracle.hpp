#pragma once

// Test-only oracles that share nothing with the library's algorithms.
//
// count_triple_orbits walks all of Z_N^k, collects T([a],[b],[c]) and counts
// S_k-orbits by applying every permutation explicitly.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

inline Vec multiplicities(const Vec& tuple, int modulus) {
  Vec m(static_cast<std::size_t>(modulus), 0);
  for (int x : tuple) ++m[static_cast<std::size_t>(x)];
  return m;
}

inline std::vector<Vec> whole_group(int modulus, int length) {
  std::vector<Vec> out;
  Vec t(static_cast<std::size_t>(length), 0);
  while (true) {
    out.push_back(t);
    int i = length - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == modulus - 1) t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
  }
  return out;
}

inline std::vector<Vec> all_permutations(int length) {
  std::vector<Vec> out;
  Vec p(static_cast<std::size_t>(length));
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Vec permute(const Vec& t, const Vec& sigma) {
  Vec out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[static_cast<std::size_t>(sigma[i])] = t[i];
  return out;
}

/// M_{[a],[b]}^{[c]}; a, b, c are multiplicity vectors.
inline std::uint64_t count_triple_orbits(int modulus, int length, const Vec& a, const Vec& b,
                                         const Vec& c) {
  const auto group = whole_group(modulus, length);
  std::vector<Vec> xs, ys;
  for (const auto& t : group) {
    const auto m = multiplicities(t, modulus);
    if (m == a) xs.push_back(t);
    if (m == b) ys.push_back(t);
  }
  std::set<std::vector<Vec>> triples;
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      Vec z(x.size());
      for (std::size_t i = 0; i < z.size(); ++i) z[i] = (x[i] + y[i]) % modulus;
      if (multiplicities(z, modulus) == c) triples.insert({x, y, z});
    }
  }
  const auto perms = all_permutations(length);
  std::set<std::vector<Vec>> visited;
  std::uint64_t orbits = 0;
  for (const auto& triple : triples) {
    if (visited.count(triple)) continue;
    ++orbits;
    for (const auto& sigma : perms) {
      visited.insert({permute(triple[0], sigma), permute(triple[1], sigma),
                      permute(triple[2], sigma)});
    }
  }
  return orbits;
}

/// All multiplicity vectors of length `modulus` summing to `length`.
inline std::vector<Vec> all_mult_vectors(int modulus, int length) {
  std::vector<Vec> out;
  Vec m(static_cast<std::size_t>(modulus), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == modulus - 1) {
      m[static_cast<std::size_t>(i)] = left;
      out.push_back(m);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      m[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, length);
  return out;
}

}  // namespace oracle
