#ifndef SPACK_CRITICALITY_HPP
#define SPACK_CRITICALITY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "spack/coloring.hpp"
#include "spack/sequence.hpp"
#include "spack/solver.hpp"

namespace spack {

struct CriticalityVerdict {
  GraphSpec graph;
  bool is_critical;
  bool is_vertex_critical;
  int chromatic;          // chi_S of the graph
  int edge_deleted;       // chi_S(P_n) for a cycle, chi_S(P_{n-1}) for a path
  int vertex_deleted;     // chi_S(P_{n-1}); 0 for P_1
};

// Every proper subgraph of P_n is a union of shorter paths, so both notions
// reduce to chi_S(P_{n-1}) < chi_S(P_n). P_1 is critical by definition.
CriticalityVerdict decide_path(const PackingSequence& seq, int n, ChromaticCache* cache = nullptr);

// Critical iff chi_S(C_n) > chi_S(P_n); vertex-critical iff
// chi_S(C_n) > chi_S(P_{n-1}). Throws std::invalid_argument for n < 3.
CriticalityVerdict decide_cycle(const PackingSequence& seq, int n, ChromaticCache* cache = nullptr);

enum class CriticalityKind { Critical, VertexCritical };

// A family of sequences whose critical (and possibly vertex-critical) cycles
// are characterised by a closed condition on n.
struct CharacterizedFamily {
  std::string name;
  std::vector<SequenceFamily> members;  // union of these
  std::function<bool(int)> critical;
  std::function<bool(int)> vertex_critical;  // empty when not characterised

  bool covers(const PackingSequence& seq) const;
};

const std::vector<CharacterizedFamily>& characterized_families();

// The characterised family containing every member of `family`; throws
// std::invalid_argument when none does.
const CharacterizedFamily& covering_family(const SequenceFamily& family);

// Closed-form verdict for C_n. Throws std::invalid_argument when the family
// (or the requested kind for it) is not characterised.
bool characterization_predicate(const SequenceFamily& family, int n, CriticalityKind kind);

struct EvidenceRow {
  PackingSequence seq;
  int n;
  int chi_cycle;
  int chi_path;
  int chi_path_minus;
  bool critical;
  bool vertex_critical;
  bool expected_critical;
  std::optional<bool> expected_vertex_critical;

  bool agrees() const {
    return critical == expected_critical &&
           (!expected_vertex_critical || vertex_critical == *expected_vertex_critical);
  }
};

struct DiscrepancyReport {
  std::string family;
  std::string characterization;
  int n_max = 0;
  std::vector<EvidenceRow> rows;
  std::vector<EvidenceRow> discrepancies;

  bool clean() const { return discrepancies.empty(); }
  nlohmann::json to_json() const;
};

// Solver verdicts against the characterisation for every representative of
// `family` and every 3 <= n <= n_max.
DiscrepancyReport cross_validate(const SequenceFamily& family, int n_max,
                                 ChromaticCache* cache = nullptr);

}  // namespace spack

#endif  // SPACK_CRITICALITY_HPP
