#ifndef SPACK_TABLES_HPP
#define SPACK_TABLES_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "spack/coloring.hpp"
#include "spack/sequence.hpp"

namespace spack {

struct TableLayout {
  int id;
  std::vector<int> orders;                 // row values of n
  std::vector<SequenceFamily> families;    // one cycle column each
  std::vector<PackingSequence> representatives;
};

// Layouts of the two small-cycle tables: chi_S(P_n) and chi_S(C_n) for the
// S(4) families with s_2 = 2 (table 1) and s_2 = 3 (table 2).
TableLayout table_layout(int id);

struct TableRow {
  int n;
  int path;                          // chi(P_n), first representative
  std::vector<int> path_by_column;   // chi(P_n) for every representative
  std::vector<int> cycles;           // chi(C_n) per column
  std::vector<Coloring> witnesses;   // optimal colorings of C_n per column
};

struct TableArtifact {
  TableLayout layout;
  std::vector<TableRow> rows;
  double runtime_seconds = 0.0;

  // Deterministic: header "n,P,S1,...", one line per row, no timing.
  std::string to_csv() const;
  // Adds representatives, witnesses, tool version and runtime.
  nlohmann::json to_json() const;
};

TableArtifact compute_table(int id);

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace spack

#endif  // SPACK_TABLES_HPP
