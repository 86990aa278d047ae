#ifndef SPACK_FORMULAS_HPP
#define SPACK_FORMULAS_HPP

#include <string>
#include <vector>

#include "spack/sequence.hpp"

namespace spack {

// floor(log2 n) + 1, by bit length.
int bit_length(int n);

enum class BoundKind { Exact, AtLeast, Inapplicable };

// Which closed-form statement produced a path value.
enum class PathClause {
  SkClass,           // S in S(k): min(k, floor(log2 n) + 1)
  DyadicBand,        // 2^{i-1} <= s_i < 2^i up to floor(log2 n) + 1
  DyadicLowerBound,  // 2^{i-1} <= s_i up to floor(log2 n) + 1
  FirstDeficit,      // first index with s_i < 2^{i-1}
  None,
};

struct PathFormulaResult {
  BoundKind kind;
  int value;  // exact value or lower bound; 0 when inapplicable
  PathClause source;

  bool exact() const { return kind == BoundKind::Exact; }
};

std::string to_string(PathClause clause);

// Strongest closed-form statement about chi_S(P_n), tried in the order
// SkClass, DyadicBand, DyadicLowerBound, FirstDeficit.
PathFormulaResult path_chromatic_formula(const PackingSequence& seq, int n);

// Orders n <= n_max of the critical paths: powers of two up to 2^{k-1} for
// S in S(k), every power of two when the dyadic band holds for all indices
// that matter up to n_max. Throws std::invalid_argument otherwise.
std::vector<int> critical_path_set(const PackingSequence& seq, int n_max);

// On paths vertex-criticality and criticality coincide.
std::vector<int> vertex_critical_path_set(const PackingSequence& seq, int n_max);

}  // namespace spack

#endif  // SPACK_FORMULAS_HPP
