#include <stdexcept>
#include "doctest.h"
#include "oracle.hpp"
#include "spack/formulas.hpp"
#include "spack/solver.hpp"
#include "spack/verify.hpp"

using spack::BoundKind;
using spack::PackingSequence;
using spack::PathClause;

TEST_CASE("bit length at powers of two") {
  for (int n = 1; n <= 5000; ++n) CHECK(spack::bit_length(n) == oracle::floor_log2(n) + 1);
  CHECK(spack::bit_length(1) == 1);
  CHECK(spack::bit_length(7) == 3);
  CHECK(spack::bit_length(8) == 4);
  CHECK(spack::bit_length(1 << 30) == 31);
}

TEST_CASE("formula examples") {
  auto f = spack::path_chromatic_formula({1, 2, 4, 7}, 8);
  CHECK(f.exact());
  CHECK(f.value == 4);
  CHECK(f.source == PathClause::SkClass);

  // (1,2,4,8) sits in S(5), so the S(k) clause fires before the band clause.
  f = spack::path_chromatic_formula({1, 2, 4, 8}, 12);
  CHECK(f.exact());
  CHECK(f.value == 4);
  CHECK(f.value == spack::chromatic(spack::GraphSpec::path(12), {1, 2, 4, 8}).chromatic);

  f = spack::path_chromatic_formula({1, 2, 4, 7}, 1);
  CHECK(f.exact());
  CHECK(f.value == 1);
}

TEST_CASE("clauses outside S(k)") {
  // Band holds through floor(log2 n) + 1 = 2 only.
  auto f = spack::path_chromatic_formula({1, 2, 8}, 3);
  CHECK(f.kind == BoundKind::Exact);
  CHECK(f.source == PathClause::DyadicBand);
  CHECK(f.value == 2);

  f = spack::path_chromatic_formula({1, 2, 8}, 4);
  CHECK(f.kind == BoundKind::AtLeast);
  CHECK(f.source == PathClause::DyadicLowerBound);
  CHECK(f.value == 3);
  CHECK(spack::chromatic(spack::GraphSpec::path(4), {1, 2, 8}).chromatic >= 3);

  f = spack::path_chromatic_formula({1, 4, 4, 4}, 16);
  CHECK(f.kind == BoundKind::AtLeast);
  CHECK(f.source == PathClause::FirstDeficit);
  CHECK(f.value == 4);
  CHECK(spack::chromatic(spack::GraphSpec::path(16), {1, 4, 4, 4}).chromatic >= 4);

  f = spack::path_chromatic_formula({2, 2}, 5);
  CHECK(f.kind == BoundKind::Inapplicable);
  CHECK(f.source == PathClause::None);
  CHECK(spack::to_string(PathClause::DyadicBand) != spack::to_string(PathClause::SkClass));
}

TEST_CASE("exact clause matches the solver on the S(k) suite") {
  for (const auto& seq : spack::sk_suite(5)) {
    const auto profile = spack::path_chromatic_profile(seq, 32);
    for (int n = 1; n <= 32; ++n) {
      const auto f = spack::path_chromatic_formula(seq, n);
      REQUIRE(f.exact());
      CHECK(f.value == profile[n]);
    }
  }
}

TEST_CASE("bounds never exceed the solver") {
  int bounds = 0;
  for (int a = 1; a <= 15; a += 2) {
    for (int b = a; b <= 15; b += 3) {
      for (int c = b; c <= 15; c += 4) {
        const PackingSequence seq{1, a, b, c};
        const auto profile = spack::path_chromatic_profile(seq, 32);
        for (int n = 1; n <= 32; ++n) {
          const auto f = spack::path_chromatic_formula(seq, n);
          CAPTURE(seq.to_string());
          CAPTURE(n);
          if (f.exact()) CHECK(f.value == profile[n]);
          else if (f.kind == BoundKind::AtLeast) {
            ++bounds;
            CHECK(f.value <= profile[n]);
          }
        }
      }
    }
  }
  CHECK(bounds > 0);
}

TEST_CASE("critical path sets") {
  CHECK(spack::critical_path_set({1, 2, 4, 7}, 20) == std::vector<int>{1, 2, 4, 8});
  CHECK(spack::critical_path_set({1, 2, 4, 8, 16, 32}, 20) == std::vector<int>{1, 2, 4, 8, 16});
  CHECK(spack::critical_path_set({1, 1}, 3) == std::vector<int>{1, 2});
  CHECK(spack::vertex_critical_path_set({1, 3, 5, 5}, 20) == std::vector<int>{1, 2, 4, 8});
  CHECK(spack::vertex_critical_path_set({1, 2, 3}, 10) == std::vector<int>{1, 2, 4});
  CHECK(spack::vertex_critical_path_set({1, 3, 7, 7}, 1) == std::vector<int>{1});
  CHECK_THROWS_AS(spack::critical_path_set({1, 4}, 20), std::invalid_argument);
  CHECK_THROWS_AS(spack::critical_path_set({2, 2}, 20), std::invalid_argument);
}

TEST_CASE("critical path set equals the solver's jumps") {
  for (const auto& seq : spack::sk_suite(5)) {
    const auto profile = spack::path_chromatic_profile(seq, 40);
    std::vector<int> jumps{1};
    for (int n = 2; n <= 40; ++n) {
      if (profile[n - 1] < profile[n]) jumps.push_back(n);
    }
    CHECK(spack::critical_path_set(seq, 40) == jumps);
  }
}
