#ifndef SPACK_SOLVER_HPP
#define SPACK_SOLVER_HPP

#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "spack/coloring.hpp"
#include "spack/sequence.hpp"

namespace spack {

struct SolveResult {
  int chromatic;
  Coloring witness;
};

// Exact feasibility of an S-packing k-coloring of a path or cycle.
//
// The search walks vertices 1..n and keeps, per color, the number of steps
// since the color was last used (capped at its separation) and, on cycles,
// the position of its first use when that position is still close enough to
// the seam to matter. Colors with equal separation are interchangeable, so
// states are canonicalised by sorting within those groups and dead states are
// memoised. Colors are tried smallest first, which makes the returned witness
// the lexicographically smallest valid coloring.
//
// `pinned`, when non-empty, holds one entry per vertex: 0 for free, otherwise
// the color that vertex must take.
std::optional<Coloring> find_coloring(const GraphSpec& graph, const PackingSequence& seq, int k,
                                      std::span<const int> pinned = {});

inline bool feasible(const GraphSpec& graph, const PackingSequence& seq, int k,
                     std::span<const int> pinned = {}) {
  return find_coloring(graph, seq, k, pinned).has_value();
}

// Smallest k with a feasible coloring, searching upward from k = 1.
SolveResult chromatic(const GraphSpec& graph, const PackingSequence& seq,
                      std::span<const int> pinned = {});

// Independent oracle: plain backtracking over vertices, checking each placement
// against every earlier vertex with GraphSpec::distance. Throws
// std::invalid_argument above `size_bound` vertices and std::domain_error when
// no coloring exists with at most k_max colors.
SolveResult brute_force_chromatic(const GraphSpec& graph, const PackingSequence& seq, int k_max,
                                  int size_bound = 18);

// chi_S(P_n) for every 1 <= n <= n_max in one pass per k (index 0 unused).
std::vector<int> path_chromatic_profile(const PackingSequence& seq, int n_max);

// Memo of chromatic numbers keyed by graph and canonical sequence. Reads are
// shared, writes exclusive.
class ChromaticCache {
 public:
  int chromatic(const GraphSpec& graph, const PackingSequence& seq);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, int> values_;
};

}  // namespace spack

#endif  // SPACK_SOLVER_HPP
