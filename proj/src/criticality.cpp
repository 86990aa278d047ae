#include "spack/criticality.hpp"

#include <algorithm>
#include <stdexcept>

namespace spack {

namespace {

int chi(ChromaticCache* cache, const GraphSpec& graph, const PackingSequence& seq) {
  return cache ? cache->chromatic(graph, seq) : chromatic(graph, seq).chromatic;
}

auto one_of(std::vector<int> values) {
  return [values = std::move(values)](int n) {
    return std::find(values.begin(), values.end(), n) != values.end();
  };
}

std::vector<CharacterizedFamily> build_catalogue() {
  const auto fam = [](const char* text) { return SequenceFamily::parse(text); };
  const auto below_or = [](int limit, std::vector<int> extra) {
    return [limit, pick = one_of(std::move(extra))](int n) { return n <= limit || pick(n); };
  };
  const auto odd = [](int n) { return n % 2 == 1; };

  std::vector<CharacterizedFamily> out;
  out.push_back({"1,1", {fam("1,1")}, odd, {}});
  out.push_back({"1,2,2", {fam("1,2,2")}, one_of({3, 5}), {}});
  out.push_back({"1,[2-3],3", {fam("1,[2-3],3")}, [](int n) { return n % 4 != 0; }, {}});

  out.push_back({"1,2,4,4", {fam("1,2,4,4")}, one_of({3, 5, 6, 7, 9}), below_or(9, {})});
  out.push_back({"1,2,[4-5],5", {fam("1,2,[4-5],5")}, one_of({3, 5, 6, 7, 9, 10, 11, 17}),
                 below_or(11, {17})});
  out.push_back({"1,2,[4-6],6",
                 {fam("1,2,[4-6],6")},
                 one_of({3, 5, 6, 7, 9, 10, 11, 12, 13, 17, 18, 19, 20, 25, 26, 27, 33, 34, 41}),
                 below_or(13, {17, 18, 19, 20, 25, 26, 27, 33, 34, 41})});
  out.push_back({"1,3,4,4", {fam("1,3,4,4")}, one_of({3, 5, 6, 7, 9}), below_or(9, {})});
  out.push_back({"1,3,4,5", {fam("1,3,4,5")}, one_of({3, 5, 6, 7, 9, 10, 11, 15, 17, 23}),
                 below_or(11, {15, 17, 23})});
  out.push_back({"1,3,5,5", {fam("1,3,5,5")}, [odd](int n) { return n == 6 || n == 10 || odd(n); },
                 [odd](int n) { return n <= 10 || odd(n); }});
  out.push_back({"1,2,[4-7],7 | 1,3,[4-7],7 | 1,3,[5-6],6",
                 {fam("1,2,[4-7],7"), fam("1,3,[4-7],7"), fam("1,3,[5-6],6")},
                 [](int n) { return n % 8 != 0 && n != 4; },
                 [](int n) { return n % 8 != 0 || n == 8; }});
  return out;
}

CriticalityVerdict make_verdict(GraphSpec graph, int chromatic, int edge_deleted, int vertex_deleted) {
  return {graph, chromatic > edge_deleted, chromatic > vertex_deleted, chromatic, edge_deleted,
          vertex_deleted};
}

}  // namespace

CriticalityVerdict decide_path(const PackingSequence& seq, int n, ChromaticCache* cache) {
  const auto graph = GraphSpec::path(n);
  if (n == 1) return {graph, true, true, 1, 0, 0};
  const int whole = chi(cache, graph, seq);
  const int shorter = chi(cache, GraphSpec::path(n - 1), seq);
  return make_verdict(graph, whole, shorter, shorter);
}

CriticalityVerdict decide_cycle(const PackingSequence& seq, int n, ChromaticCache* cache) {
  const auto graph = GraphSpec::cycle(n);
  const int whole = chi(cache, graph, seq);
  const int path = chi(cache, GraphSpec::path(n), seq);
  const int path_minus = chi(cache, GraphSpec::path(n - 1), seq);
  return make_verdict(graph, whole, path, path_minus);
}

bool CharacterizedFamily::covers(const PackingSequence& seq) const {
  return std::any_of(members.begin(), members.end(), [&](const auto& f) { return f.contains(seq); });
}

const std::vector<CharacterizedFamily>& characterized_families() {
  static const std::vector<CharacterizedFamily> catalogue = build_catalogue();
  return catalogue;
}

const CharacterizedFamily& covering_family(const SequenceFamily& family) {
  const auto reps = enumerate_family(family);
  for (const auto& entry : characterized_families()) {
    if (std::all_of(reps.begin(), reps.end(), [&](const auto& s) { return entry.covers(s); })) {
      return entry;
    }
  }
  throw std::invalid_argument("no characterisation covers family " + family.to_string());
}

bool characterization_predicate(const SequenceFamily& family, int n, CriticalityKind kind) {
  if (n < 3) throw std::invalid_argument("cycles need n >= 3");
  const auto& entry = covering_family(family);
  if (kind == CriticalityKind::Critical) return entry.critical(n);
  if (!entry.vertex_critical) {
    throw std::invalid_argument("vertex-critical cycles are not characterised for " + entry.name);
  }
  return entry.vertex_critical(n);
}

DiscrepancyReport cross_validate(const SequenceFamily& family, int n_max, ChromaticCache* cache) {
  const auto& entry = covering_family(family);
  DiscrepancyReport report;
  report.family = family.to_string();
  report.characterization = entry.name;
  report.n_max = n_max;

  ChromaticCache local;
  ChromaticCache* memo = cache ? cache : &local;
  for (const auto& seq : enumerate_family(family)) {
    for (int n = 3; n <= n_max; ++n) {
      const auto v = decide_cycle(seq, n, memo);
      EvidenceRow row{seq,
                      n,
                      v.chromatic,
                      v.edge_deleted,
                      v.vertex_deleted,
                      v.is_critical,
                      v.is_vertex_critical,
                      entry.critical(n),
                      entry.vertex_critical ? std::optional<bool>(entry.vertex_critical(n)) : std::nullopt};
      if (!row.agrees()) report.discrepancies.push_back(row);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

namespace {

nlohmann::json row_json(const EvidenceRow& r) {
  nlohmann::json j{{"seq", r.seq.to_string()},
                   {"n", r.n},
                   {"chi_cycle", r.chi_cycle},
                   {"chi_path", r.chi_path},
                   {"chi_path_minus_one", r.chi_path_minus},
                   {"critical", r.critical},
                   {"vertex_critical", r.vertex_critical},
                   {"expected_critical", r.expected_critical}};
  j["expected_vertex_critical"] =
      r.expected_vertex_critical ? nlohmann::json(*r.expected_vertex_critical) : nlohmann::json(nullptr);
  return j;
}

}  // namespace

nlohmann::json DiscrepancyReport::to_json() const {
  nlohmann::json j{{"family", family}, {"characterization", characterization}, {"n_max", n_max}};
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) j["rows"].push_back(row_json(r));
  j["discrepancies"] = nlohmann::json::array();
  for (const auto& r : discrepancies) j["discrepancies"].push_back(row_json(r));
  return j;
}

}  // namespace spack
