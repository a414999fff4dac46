#include "doctest.h"

#include <cstdlib>
#include <set>

#include "orbitfusion/error.hpp"
#include "orbitfusion/orbit_core.hpp"

using namespace orbitfusion;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an orbitfusion::Error");
  return ErrorCode::InvalidParams;
}

std::uint64_t ipow(int base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= static_cast<std::uint64_t>(base);
  return out;
}

}  // namespace

TEST_CASE("params reject degenerate modulus and level") {
  CHECK(code_of([] { Params(1, 3); }) == ErrorCode::InvalidParams);
  CHECK(code_of([] { Params(3, 0); }) == ErrorCode::InvalidParams);
  CHECK(Params(2, 1).next_level() == Params(2, 2));
}

TEST_CASE("make_label validates arity and sum") {
  const auto l = make_label(Params(3, 4), {1, 2, 1});
  CHECK(std::vector<int>(l.mults().begin(), l.mults().end()) == std::vector<int>{1, 2, 1});
  CHECK(make_label(Params(2, 2), {2, 0}).mult(0) == 2);
  CHECK(code_of([] { make_label(Params(2, 3), {1, 1}); }) == ErrorCode::SumMismatch);
  CHECK(code_of([] { make_label(Params(2, 3), {1, 1, 1}); }) == ErrorCode::ArityMismatch);
  CHECK(code_of([] { make_label(Params(2, 1), {2, -1}); }) == ErrorCode::EntryOutOfRange);
}

TEST_CASE("standard_form lists values weakly decreasing") {
  CHECK(standard_form(make_label(Params(3, 4), {1, 2, 1})) == Tuple{2, 1, 1, 0});
  CHECK(standard_form(make_label(Params(2, 3), {3, 0})) == Tuple{0, 0, 0});
  CHECK(standard_form(make_label(Params(4, 2), {0, 0, 0, 2})) == Tuple{3, 3});
}

TEST_CASE("label_of_tuple counts residues") {
  const Tuple t{0, 2, 1, 1};
  CHECK(label_of_tuple(Params(3, 4), t) == make_label(Params(3, 4), {1, 2, 1}));
  const Tuple zeros{0, 0, 0};
  CHECK(label_of_tuple(Params(2, 3), zeros) == make_label(Params(2, 3), {3, 0}));
  const Tuple bad{0, 3, 1};
  CHECK(code_of([&] { label_of_tuple(Params(3, 3), bad); }) == ErrorCode::EntryOutOfRange);
  const Tuple negative{0, -1};
  CHECK(code_of([&] { label_of_tuple(Params(3, 2), negative); }) == ErrorCode::EntryOutOfRange);
  const Tuple short_tuple{0, 1};
  CHECK(code_of([&] { label_of_tuple(Params(3, 3), short_tuple); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("standard_form and label_of_tuple are mutually inverse") {
  for (int n = 2; n <= 3; ++n) {
    for (int k = 1; k <= 4; ++k) {
      const Params p(n, k);
      for (const auto& l : enumerate_labels(p)) {
        CHECK(label_of_tuple(p, standard_form(l)) == l);
        int sum = 0;
        for (int m : l.mults()) sum += m;
        CHECK(sum == k);
      }
    }
  }
}

TEST_CASE("orbit_size is the multinomial") {
  CHECK(orbit_size(make_label(Params(3, 4), {1, 2, 1})) == 12);
  CHECK(orbit_size(make_label(Params(3, 5), {5, 0, 0})) == 1);
  CHECK(orbit_size(make_label(Params(3, 3), {1, 1, 1})) == 6);
  // 30! / (10!)^3 = 5550996791340
  CHECK(to_decimal(orbit_size(make_label(Params(3, 30), {10, 10, 10}))) == "5550996791340");
}

TEST_CASE("orbit_size overflow is reported, not wrapped") {
  std::vector<int> mults(40, 1);
  const Params p(40, 40);  // 40! > 2^128
  CHECK(code_of([&] { orbit_size(make_label(p, mults)); }) == ErrorCode::Overflow);
}

TEST_CASE("orbit sizes partition Z_N^k") {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= 6; ++k) {
      uint128 total = 0;
      for (const auto& l : enumerate_labels(Params(n, k))) total += orbit_size(l);
      CHECK(total == ipow(n, k));
    }
  }
}

TEST_CASE("enumerate_orbit yields lexicographically decreasing permutations") {
  CHECK(enumerate_orbit(make_label(Params(2, 3), {2, 1})) ==
        std::vector<Tuple>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

  const auto six = enumerate_orbit(make_label(Params(3, 3), {1, 1, 1}));
  REQUIRE(six.size() == 6);
  CHECK(six.front() == Tuple{2, 1, 0});
  CHECK(six.back() == Tuple{0, 1, 2});
  CHECK(std::is_sorted(six.begin(), six.end(), std::greater<>()));
}

TEST_CASE("enumerate_orbit is exhaustive and stays in the orbit") {
  for (int n = 2; n <= 3; ++n) {
    for (int k = 1; k <= 5; ++k) {
      const Params p(n, k);
      for (const auto& l : enumerate_labels(p)) {
        const auto elems = enumerate_orbit(l);
        CHECK(elems.front() == standard_form(l));
        CHECK(static_cast<uint128>(elems.size()) == orbit_size(l));
        CHECK(std::set<Tuple>(elems.begin(), elems.end()).size() == elems.size());
        for (const auto& t : elems) CHECK(label_of_tuple(p, t) == l);
      }
    }
  }
}

TEST_CASE("enumerate_orbit respects the cap") {
  const auto l = make_label(Params(3, 3), {1, 1, 1});
  CHECK(code_of([&] { enumerate_orbit(l, 5); }) == ErrorCode::BoundExceeded);
  CHECK(enumerate_orbit(l, 6).size() == 6);
}

TEST_CASE("enumerate_labels count and order") {
  CHECK(enumerate_labels(Params(2, 3)).size() == 4);
  CHECK(enumerate_labels(Params(3, 2)).size() == 6);
  const auto two = enumerate_labels(Params(2, 1));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == make_label(Params(2, 1), {0, 1}));
  CHECK(two[1] == make_label(Params(2, 1), {1, 0}));

  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= 6; ++k) {
      const auto labels = enumerate_labels(Params(n, k));
      CHECK(labels.size() == binomial(k + n - 1, n - 1));
      CHECK(std::set<OrbitLabel>(labels.begin(), labels.end()).size() == labels.size());
      // Standard forms strictly decrease.
      for (std::size_t i = 1; i < labels.size(); ++i) {
        CHECK(standard_form(labels[i - 1]) > standard_form(labels[i]));
      }
    }
  }
}

TEST_CASE("row labels") {
  const Params p(4, 3);
  CHECK(row_label(p, 0) == make_label(p, {3, 0, 0, 0}));
  CHECK(standard_form(row_label(p, 2)) == Tuple{1, 1, 0});
  CHECK(row_label(p, 2).is_row());
  CHECK_FALSE(make_label(p, {2, 0, 1, 0}).is_row());
  CHECK(code_of([&] { row_label(p, 4); }) == ErrorCode::RangeError);
}

TEST_CASE("enumeration cap from environment") {
  ::unsetenv("ORBIT_FUSION_ENUM_CAP");
  CHECK(enumeration_cap_from_environment() == kDefaultEnumerationCap);
  ::setenv("ORBIT_FUSION_ENUM_CAP", "42", 1);
  CHECK(enumeration_cap_from_environment() == 42);
  ::setenv("ORBIT_FUSION_ENUM_CAP", "lots", 1);
  CHECK(code_of([] { enumeration_cap_from_environment(); }) == ErrorCode::InvalidParams);
  ::unsetenv("ORBIT_FUSION_ENUM_CAP");
}
