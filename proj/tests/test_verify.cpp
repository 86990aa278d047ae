#include <stdexcept>
#include <set>

#include "doctest.h"
#include "spack/verify.hpp"

TEST_CASE("S(k) suite") {
  const auto suite = spack::sk_suite();
  CHECK(suite.size() >= 40u);
  std::set<int> classes;
  for (const auto& s : suite) {
    const auto k = spack::classify(s);
    REQUIRE(k.has_value());
    classes.insert(*k);
    for (int v : s.entries()) CHECK(v <= 31);
  }
  CHECK(classes == std::set<int>{2, 3, 4, 5, 6});
}

TEST_CASE("samples") {
  const auto sample = spack::s1_sample(15, 17);
  CHECK(sample.size() == 40u);
  for (const auto& s : sample) CHECK(s.entry(1) == 1);
  for (const auto& s : spack::band_exit_suite()) CHECK_FALSE(spack::classify(s).has_value());
  const auto pairs = spack::dominating_pairs(120);
  CHECK(pairs.size() == 120u);
  for (const auto& [a, b] : pairs) {
    CHECK(spack::dominates(a, b));
    CHECK_FALSE(a == b);
  }
}

TEST_CASE("every sweep passes at reduced size") {
  for (const auto& id : spack::verification_ids()) {
    CAPTURE(id);
    const auto r = spack::run_verification(id, 24);
    CHECK(r.passed());
    CHECK(r.checks > 0);
    CHECK(r.id == id);
    CHECK(r.to_json()["passed"] == true);
  }
  CHECK_THROWS_AS(spack::run_verification("9.9"), std::invalid_argument);
}
