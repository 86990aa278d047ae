#include <stdexcept>
#include <set>
#include <thread>

#include "doctest.h"
#include "oracle.hpp"
#include "spack/solver.hpp"

using spack::GraphSpec;
using spack::PackingSequence;

TEST_CASE("feasibility examples") {
  CHECK(spack::feasible(GraphSpec::cycle(8), {1, 2, 4, 7}, 4));
  CHECK_FALSE(spack::feasible(GraphSpec::cycle(9), {1, 2, 4, 4}, 4));
  CHECK(spack::feasible(GraphSpec::cycle(9), {1, 2, 4, 4}, 5));
  CHECK(spack::feasible(GraphSpec::path(1), {1, 1}, 1));
  CHECK(spack::feasible(GraphSpec::path(1), {5}, 1));
  CHECK_FALSE(spack::feasible(GraphSpec::path(2), {1}, 1));
  CHECK(spack::feasible(GraphSpec::cycle(5), {1}, 40));
}

TEST_CASE("chromatic examples") {
  CHECK(spack::chromatic(GraphSpec::path(8), {1, 2, 4, 7}).chromatic == 4);
  CHECK(spack::chromatic(GraphSpec::cycle(11), {1, 3, 5, 5}).chromatic == 6);
  CHECK(spack::chromatic(GraphSpec::cycle(3), {1, 2, 4, 4}).chromatic == 3);
  CHECK(spack::chromatic(GraphSpec::cycle(8), {1, 2, 4, 7}).witness.to_string() == "12131214");
  // Separation at least the diameter forces all colors distinct.
  CHECK(spack::chromatic(GraphSpec::cycle(10), {5}).chromatic == 10);
  CHECK(spack::chromatic(GraphSpec::path(10), {9}).chromatic == 10);
}

TEST_CASE("brute force examples") {
  CHECK(oracle::exhaustive_chromatic(false, 4, {1, 2, 2}) == 3);
  CHECK(spack::brute_force_chromatic(GraphSpec::path(4), {1, 2, 2}, 4).chromatic == 3);
  CHECK(spack::brute_force_chromatic(GraphSpec::cycle(5), {1, 2, 4, 5}, 5).chromatic == 4);
  CHECK(spack::brute_force_chromatic(GraphSpec::cycle(4), {1, 3, 5, 6}, 4).chromatic == 3);
  CHECK_THROWS_AS(spack::brute_force_chromatic(GraphSpec::cycle(19), {1, 2}, 19), std::invalid_argument);
  CHECK_NOTHROW(spack::brute_force_chromatic(GraphSpec::cycle(19), {1, 2}, 19, 19));
  CHECK_THROWS_AS(spack::brute_force_chromatic(GraphSpec::cycle(9), {1, 2, 4, 4}, 4), std::domain_error);
}

TEST_CASE("both solvers agree with full enumeration on small graphs") {
  std::vector<std::vector<int>> seqs;
  for (int a = 1; a <= 4; ++a) {
    for (int b = a; b <= 4; ++b) {
      for (int c = b; c <= 4; ++c) seqs.push_back({a, b, c});
    }
  }
  for (const auto& s : seqs) {
    for (int n = 1; n <= 7; ++n) {
      for (bool cyc : {false, true}) {
        if (cyc && n < 3) continue;
        const auto g = cyc ? GraphSpec::cycle(n) : GraphSpec::path(n);
        const int truth = oracle::exhaustive_chromatic(cyc, n, s);
        CAPTURE(g.to_string());
        CAPTURE(PackingSequence(s).to_string());
        CHECK(spack::chromatic(g, PackingSequence(s)).chromatic == truth);
        CHECK(spack::brute_force_chromatic(g, PackingSequence(s), n).chromatic == truth);
      }
    }
  }
}

TEST_CASE("witnesses are valid and optimal") {
  for (const auto& seq : std::vector<PackingSequence>{{1, 2, 4, 4}, {1, 3, 4, 5}, {1, 2, 5, 7}, {2, 2, 6}}) {
    for (int n = 3; n <= 40; ++n) {
      for (const auto& g : {GraphSpec::path(n), GraphSpec::cycle(n)}) {
        const auto r = spack::chromatic(g, seq);
        CHECK(spack::validate(g, seq, r.witness).ok());
        CHECK(r.witness.max_color() <= r.chromatic);
        CHECK(spack::used_colors(r.witness) <= r.chromatic);
        CHECK_FALSE(spack::feasible(g, seq, r.chromatic - 1));
        // Deterministic.
        CHECK(spack::chromatic(g, seq).witness == r.witness);
      }
    }
  }
}

TEST_CASE("witness is the lexicographically smallest coloring") {
  for (const std::vector<int>& s : {std::vector<int>{1, 2, 2}, std::vector<int>{1, 3, 3, 4}}) {
    for (int n = 3; n <= 7; ++n) {
      const auto g = GraphSpec::cycle(n);
      const auto r = spack::chromatic(g, PackingSequence(s));
      std::vector<int> c(static_cast<std::size_t>(n), 1);
      std::vector<int> first;
      while (first.empty()) {
        if (oracle::packing_ok(true, s, c)) first = c;
        int i = n - 1;
        while (i >= 0 && c[i] == r.chromatic) c[i--] = 1;
        if (i < 0) break;
        ++c[i];
      }
      CHECK(r.witness.colors() == first);
    }
  }
}

TEST_CASE("monotone in n and paths below cycles") {
  for (const auto& seq : std::vector<PackingSequence>{{1, 2, 4, 4}, {1, 3, 5, 5}, {1, 2, 3}, {2, 3, 5, 8}}) {
    const auto profile = spack::path_chromatic_profile(seq, 64);
    for (int n = 1; n < 64; ++n) CHECK(profile[n] <= profile[n + 1]);
    for (int n = 3; n <= 64; ++n) CHECK(profile[n] <= spack::chromatic(GraphSpec::cycle(n), seq).chromatic);
  }
}

TEST_CASE("profile matches per-n solves") {
  for (const auto& seq : std::vector<PackingSequence>{{1, 2, 4, 8}, {1, 1, 3}, {2, 2, 2, 9}, {1, 3, 7, 15, 16}}) {
    const auto profile = spack::path_chromatic_profile(seq, 40);
    REQUIRE(profile.size() == 41u);
    for (int n = 1; n <= 40; ++n) CHECK(profile[n] == spack::chromatic(GraphSpec::path(n), seq).chromatic);
  }
}

TEST_CASE("pinned vertices") {
  const PackingSequence seq{1, 2, 4, 4};
  std::vector<int> pins(8, 0);
  pins[0] = 4;
  const auto c = spack::find_coloring(GraphSpec::path(8), seq, 4, pins);
  REQUIRE(c.has_value());
  CHECK(c->at(1) == 4);
  CHECK(spack::validate(GraphSpec::path(8), seq, *c).ok());
  // Two adjacent vertices pinned to color 1 cannot work.
  pins = std::vector<int>(8, 0);
  pins[2] = pins[3] = 1;
  CHECK_FALSE(spack::feasible(GraphSpec::cycle(8), seq, 6, pins));
  // Pin to a color beyond the budget.
  pins = std::vector<int>(8, 0);
  pins[5] = 5;
  CHECK_FALSE(spack::feasible(GraphSpec::path(8), seq, 4, pins));
  CHECK_THROWS_AS(spack::find_coloring(GraphSpec::path(8), seq, 4, std::vector<int>(3, 0)), std::invalid_argument);
}

TEST_CASE("cache is consistent across threads") {
  spack::ChromaticCache cache;
  const std::vector<PackingSequence> seqs{{1, 2, 4, 4}, {1, 2, 4, 5}, {1, 3, 5, 5}, {1, 2, 2}};
  std::vector<std::thread> threads;
  std::vector<std::vector<int>> results(4);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (const auto& s : seqs) {
        for (int n = 3; n <= 30; ++n) results[t].push_back(cache.chromatic(GraphSpec::cycle(n), s));
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) CHECK(results[t] == results[0]);
  CHECK(cache.size() == seqs.size() * 28);
  std::size_t i = 0;
  for (const auto& s : seqs) {
    for (int n = 3; n <= 30; ++n) CHECK(results[0][i++] == spack::chromatic(GraphSpec::cycle(n), s).chromatic);
  }
  // Equal infinite sequences share an entry.
  cache.chromatic(GraphSpec::cycle(5), {1, 2, 2, 2});
  CHECK(cache.size() == seqs.size() * 28);
}

TEST_CASE("wide separations agree with the oracle") {
  // Many colors with large separations: the regime where the slot-counting
  // cut in the automaton does most of the work.
  for (int a = 2; a <= 6; a += 2) {
    for (int b = a + 1; b <= 12; b += 4) {
      for (int c = b; c <= 12; c += 3) {
        const PackingSequence s{1, a, b, c};
        for (int n = 3; n <= 16; ++n) {
          for (const auto& g : {GraphSpec::path(n), GraphSpec::cycle(n)}) {
            CAPTURE(s.to_string());
            CAPTURE(g.to_string());
            CHECK(spack::chromatic(g, s).chromatic == spack::brute_force_chromatic(g, s, n).chromatic);
          }
        }
      }
    }
  }
}
