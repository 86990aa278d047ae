#include "spack/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "spack/criticality.hpp"
#include "spack/formulas.hpp"
#include "spack/patterns.hpp"
#include "spack/solver.hpp"

namespace spack {

std::vector<PackingSequence> sk_suite(int max_k) {
  std::vector<PackingSequence> out;
  if (max_k >= 2) out.push_back(PackingSequence{1, 1});
  for (int k = 3; k <= max_k; ++k) {
    // Band entries s_2 .. s_{k-1} at either end, then s_k from s_{k-1} or the top.
    const int free = k - 2;
    for (int mask = 0; mask < (1 << free); ++mask) {
      std::vector<int> s{1};
      for (int i = 2; i <= k - 1; ++i) {
        const bool high = (mask >> (i - 2)) & 1;
        s.push_back(high ? (1 << i) - 1 : 1 << (i - 1));
      }
      const int top = (1 << (k - 1)) - 1;
      for (int last : {s.back(), top}) {
        auto t = s;
        t.push_back(last);
        out.emplace_back(t);
        if (last == top) break;
      }
    }
  }
  return out;
}

std::vector<PackingSequence> s1_sample(int max_entry, int stride) {
  std::vector<PackingSequence> out;
  int index = 0;
  for (int a = 1; a <= max_entry; ++a) {
    for (int b = a; b <= max_entry; ++b) {
      for (int c = b; c <= max_entry; ++c) {
        if (index++ % stride == 0) out.push_back(PackingSequence{1, a, b, c});
      }
    }
  }
  return out;
}

std::vector<PackingSequence> band_exit_suite() {
  return {PackingSequence{1, 4},         PackingSequence{1, 2, 8},       PackingSequence{1, 3, 8},
          PackingSequence{1, 2, 4, 16},  PackingSequence{1, 3, 7, 16},   PackingSequence{1, 2, 4, 8, 32},
          PackingSequence{1, 3, 7, 15, 32}, PackingSequence{1, 4, 4, 4}, PackingSequence{1, 2, 8, 8},
          PackingSequence{1, 3, 8, 8, 8}, PackingSequence{1, 2, 5, 16}};
}

std::vector<std::pair<PackingSequence, PackingSequence>> dominating_pairs(int count) {
  std::vector<PackingSequence> pool;
  for (int a = 1; a <= 4; ++a) {
    for (int b = a; b <= 4; ++b) {
      for (int c = b; c <= 5; ++c) pool.push_back(PackingSequence{a, b, c});
    }
  }
  std::vector<std::pair<PackingSequence, PackingSequence>> all;
  for (const auto& x : pool) {
    for (const auto& y : pool) {
      if (!(x == y) && dominates(x, y)) all.emplace_back(x, y);
    }
  }
  if (count >= static_cast<int>(all.size())) return all;
  std::vector<std::pair<PackingSequence, PackingSequence>> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(all[static_cast<std::size_t>(i) * all.size() / static_cast<std::size_t>(count)]);
  }
  return out;
}

nlohmann::json VerificationReport::to_json() const {
  return {{"id", id},       {"title", title},       {"n_max", n_max},     {"checks", checks},
          {"passed", passed()}, {"failures", failures}, {"details", details}};
}

namespace {

struct Sweep {
  VerificationReport report;

  void check(bool ok, const std::string& what) {
    ++report.checks;
    if (!ok) report.failures.push_back(what);
  }
};

std::string describe(const std::string& what, const PackingSequence& seq, int n) {
  std::ostringstream os;
  os << what << " S=(" << seq.to_string() << ") n=" << n;
  return os.str();
}

void merge_cross_validation(Sweep& sweep, const SequenceFamily& family, int n_max, bool vertex_only,
                            ChromaticCache& cache) {
  const auto report = cross_validate(family, n_max, &cache);
  for (const auto& row : report.rows) {
    if (!vertex_only) {
      sweep.check(row.critical == row.expected_critical, describe("critical flag", row.seq, row.n));
    }
    if (row.expected_vertex_critical) {
      sweep.check(row.vertex_critical == *row.expected_vertex_critical,
                  describe("vertex-critical flag", row.seq, row.n));
    }
  }
  sweep.report.details["families"].push_back(
      {{"family", report.family}, {"characterization", report.characterization},
       {"rows", report.rows.size()}, {"discrepancies", report.to_json()["discrepancies"]}});
}

void certify_patterns_for(Sweep& sweep, const std::vector<SequenceFamily>& families, int n_max) {
  for (const auto& entry : pattern_library()) {
    for (const auto& f : entry.families) {
      if (std::find(families.begin(), families.end(), f) == families.end()) continue;
      for (const auto& seq : enumerate_family(f)) {
        const auto cert = certify_family(entry.pattern, seq);
        sweep.check(cert.proved, "pattern " + entry.pattern.to_string() + " for S=(" + seq.to_string() + ")");
        for (int n : covered_lengths(entry.pattern, n_max)) {
          const auto e = exponents_for_length(entry.pattern, n);
          const bool valid = e && validate(GraphSpec::cycle(n), seq, instantiate(entry.pattern, *e)).ok();
          sweep.check(valid, describe("pattern " + entry.pattern.to_string() + " instance", seq, n));
        }
        sweep.report.details["patterns"].push_back(
            {{"pattern", entry.pattern.to_string()}, {"seq", seq.to_string()},
             {"proved", cert.proved}, {"coverage", cert.coverage}});
      }
    }
  }
}

VerificationReport cycles_sweep(const std::string& id, const std::string& title,
                                const std::vector<std::string>& families, int n_max, bool vertex_only,
                                bool with_patterns) {
  Sweep sweep;
  sweep.report.id = id;
  sweep.report.title = title;
  sweep.report.n_max = n_max;
  sweep.report.details["families"] = nlohmann::json::array();
  ChromaticCache cache;
  std::vector<SequenceFamily> parsed;
  for (const auto& f : families) parsed.push_back(SequenceFamily::parse(f));
  for (const auto& f : parsed) merge_cross_validation(sweep, f, n_max, vertex_only, cache);
  if (with_patterns) {
    sweep.report.details["patterns"] = nlohmann::json::array();
    certify_patterns_for(sweep, parsed, std::max(n_max, 64));
  }
  return sweep.report;
}

VerificationReport path_formula_sweep(int n_max) {
  Sweep sweep;
  sweep.report.id = "3";
  sweep.report.title = "chi_S(P_n) = min(k, floor(log2 n) + 1) for S in S(k)";
  sweep.report.n_max = n_max;
  for (const auto& seq : sk_suite()) {
    const auto profile = path_chromatic_profile(seq, n_max);
    const int k = *classify(seq);
    for (int n = 1; n <= n_max; ++n) {
      const int expected = std::min(k, bit_length(n));
      sweep.check(profile[static_cast<std::size_t>(n)] == expected, describe("path chromatic", seq, n));
      const auto formula = path_chromatic_formula(seq, n);
      sweep.check(formula.exact() && formula.value == expected, describe("formula", seq, n));
    }
  }
  sweep.report.details["sequences"] = sk_suite().size();
  return sweep.report;
}

VerificationReport band_sweep(int n_max) {
  Sweep sweep;
  sweep.report.id = "4(ii)";
  sweep.report.title = "closed-form path values and lower bounds outside S(k)";
  sweep.report.n_max = n_max;
  int exact = 0;
  int bounds = 0;
  for (const auto& seq : band_exit_suite()) {
    const auto profile = path_chromatic_profile(seq, n_max);
    for (int n = 1; n <= n_max; ++n) {
      const int chi = profile[static_cast<std::size_t>(n)];
      const auto f = path_chromatic_formula(seq, n);
      if (f.exact()) {
        ++exact;
        sweep.check(chi == f.value, describe("exact clause " + to_string(f.source), seq, n));
      } else if (f.kind == BoundKind::AtLeast) {
        ++bounds;
        sweep.check(chi >= f.value, describe("lower bound " + to_string(f.source), seq, n));
      }
    }
  }
  // Lower-bound clauses on a broad S_1 sample.
  for (const auto& seq : s1_sample(15, 23)) {
    const auto profile = path_chromatic_profile(seq, std::min(n_max, 32));
    for (int n = 1; n <= std::min(n_max, 32); ++n) {
      const auto f = path_chromatic_formula(seq, n);
      const int chi = profile[static_cast<std::size_t>(n)];
      sweep.check(f.exact() ? chi == f.value : chi >= f.value, describe("formula bound", seq, n));
    }
  }
  sweep.report.details["exact_checks"] = exact;
  sweep.report.details["bound_checks"] = bounds;
  return sweep.report;
}

std::vector<int> solver_critical_paths(const std::vector<int>& profile) {
  std::vector<int> out{1};
  for (std::size_t n = 2; n < profile.size(); ++n) {
    if (profile[n - 1] < profile[n]) out.push_back(static_cast<int>(n));
  }
  return out;
}

VerificationReport critical_path_sweep(int n_max) {
  Sweep sweep;
  sweep.report.id = "5";
  sweep.report.title = "critical and vertex-critical paths";
  sweep.report.n_max = n_max;
  ChromaticCache cache;
  const auto compare = [&](const PackingSequence& seq, int bound) {
    const auto solver = solver_critical_paths(path_chromatic_profile(seq, bound));
    sweep.check(solver == critical_path_set(seq, bound), describe("critical path set", seq, bound));
    sweep.check(solver == vertex_critical_path_set(seq, bound), describe("vertex-critical path set", seq, bound));
  };
  for (const auto& seq : sk_suite()) compare(seq, n_max);
  // Every power of two is critical while the band holds. Seven colors on
  // P_64 are slow, so these stop at 32.
  for (const auto& seq : {PackingSequence{1, 2, 4, 8, 16, 32}, PackingSequence{1, 3, 7, 15, 31, 63}}) {
    compare(seq, std::min(n_max, 32));
  }
  // Direct verdicts for the smaller orders.
  for (const auto& seq : sk_suite(5)) {
    const auto expected = critical_path_set(seq, 20);
    for (int n = 1; n <= std::min(n_max, 20); ++n) {
      const auto v = decide_path(seq, n, &cache);
      const bool in = std::find(expected.begin(), expected.end(), n) != expected.end();
      sweep.check(v.is_critical == in && v.is_vertex_critical == in, describe("path verdict", seq, n));
    }
  }
  return sweep.report;
}

VerificationReport lemma_sweep(int n_max_paths, int n_max_cycles) {
  Sweep sweep;
  sweep.report.id = "lemmas";
  sweep.report.title = "halving recursion, even plateau, odd normal form, cycle halving, monotonicity";
  sweep.report.n_max = n_max_paths;
  ChromaticCache cache;
  const auto sample = s1_sample(15, 17);

  int recursion = 0;
  for (const auto& seq : sample) {
    const auto profile = path_chromatic_profile(seq, n_max_paths);
    // Even plateau.
    for (int n = 2; n + 1 <= n_max_paths; n += 2) {
      sweep.check(profile[static_cast<std::size_t>(n + 1)] == profile[static_cast<std::size_t>(n)],
                  describe("even plateau", seq, n));
    }
    // Odd normal form of the sequence.
    const auto odd_profile = path_chromatic_profile(normalize_odd(seq), n_max_paths);
    sweep.check(odd_profile == profile, describe("odd normal form", seq, n_max_paths));
    // Halving recursion.
    if (seq.entry(2) >= 2) {
      const auto half_profile = path_chromatic_profile(halve(seq), n_max_paths / 2);
      for (int n = 2; n <= n_max_paths; ++n) {
        ++recursion;
        sweep.check(profile[static_cast<std::size_t>(n)] == half_profile[static_cast<std::size_t>(n / 2)] + 1,
                    describe("halving recursion", seq, n));
      }
    }
  }

  // Color 1 on every odd vertex loses nothing.
  for (const auto& seq : s1_sample(9, 19)) {
    for (int n = 1; n <= 24; ++n) {
      std::vector<int> pins(static_cast<std::size_t>(n), 0);
      for (int v = 1; v <= n; v += 2) pins[static_cast<std::size_t>(v - 1)] = 1;
      const int free = cache.chromatic(GraphSpec::path(n), seq);
      sweep.check(chromatic(GraphSpec::path(n), seq, pins).chromatic == free, describe("odd vertices colored 1", seq, n));
    }
  }

  // Cycle halving bound and critical-cycle descent.
  for (const auto& seq : s1_sample(7, 9)) {
    if (seq.entry(2) < 2) continue;
    const auto half = halve(seq);
    for (int n = 3; n <= n_max_cycles; ++n) {
      const int big = cache.chromatic(GraphSpec::cycle(2 * n), seq);
      const int small = cache.chromatic(GraphSpec::cycle(n), half);
      sweep.check(big <= small + 1, describe("cycle halving bound", seq, n));
      if (n <= 24 && decide_cycle(seq, 2 * n, &cache).is_critical) {
        sweep.check(decide_cycle(half, n, &cache).is_critical, describe("critical descent", seq, n));
      }
    }
  }

  // Entrywise domination is monotone.
  const auto pairs = dominating_pairs(120);
  for (const auto& [a, b] : pairs) {
    for (int n = 3; n <= 14; ++n) {
      for (const auto& g : {GraphSpec::path(n), GraphSpec::cycle(n)}) {
        sweep.check(cache.chromatic(g, a) <= cache.chromatic(g, b),
                    describe("domination " + g.to_string() + " vs (" + b.to_string() + ")", a, n));
      }
    }
  }
  sweep.report.details["halving_checks"] = recursion;
  sweep.report.details["dominating_pairs"] = pairs.size();
  return sweep.report;
}

}  // namespace

std::vector<std::string> verification_ids() {
  return {"1.2", "3", "4(ii)", "5", "4.1", "4.2", "4.3", "5.1", "lemmas"};
}

VerificationReport run_verification(std::string_view id, int n_max) {
  const int cycles = n_max > 0 ? n_max : 48;
  const int paths = n_max > 0 ? n_max : 64;
  if (id == "1.2") {
    return cycles_sweep("1.2", "critical cycles for S(2) and S(3)", {"1,1", "1,2,2", "1,[2-3],3"}, cycles,
                        false, false);
  }
  if (id == "3") return path_formula_sweep(paths);
  if (id == "4(ii)" || id == "4") return band_sweep(paths);
  if (id == "5") return critical_path_sweep(paths);
  if (id == "4.1") {
    return cycles_sweep("4.1", "critical cycles, s_2 = 2, s_3 and s_4 in {4,5,6}",
                        {"1,2,4,4", "1,2,[4-5],5", "1,2,[4-6],6"}, cycles, false, true);
  }
  if (id == "4.2") {
    return cycles_sweep("4.2", "critical cycles, s_2 = 3, s_3 and s_4 in {4,5}",
                        {"1,3,4,4", "1,3,4,5", "1,3,5,5"}, cycles, false, true);
  }
  if (id == "4.3") {
    return cycles_sweep("4.3", "critical cycles, s_4 = 7 or (1,3,[5-6],6)",
                        {"1,2,[4-7],7", "1,3,[4-7],7", "1,3,[5-6],6"}, cycles, false, true);
  }
  if (id == "5.1") {
    return cycles_sweep("5.1", "vertex-critical cycles for S(4)",
                        {"1,2,4,4", "1,3,4,4", "1,2,[4-5],5", "1,2,[4-6],6", "1,3,4,5", "1,3,5,5",
                         "1,2,[4-7],7", "1,3,[4-7],7", "1,3,[5-6],6"},
                        cycles, true, false);
  }
  if (id == "lemmas") return lemma_sweep(paths, n_max > 0 ? std::min(n_max, 32) : 32);
  throw std::invalid_argument("unknown theorem id '" + std::string(id) + "'");
}

}  // namespace spack
