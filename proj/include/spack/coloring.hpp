#ifndef SPACK_COLORING_HPP
#define SPACK_COLORING_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spack/sequence.hpp"

namespace spack {

enum class GraphKind { Path, Cycle };

// P_n or C_n on vertices 1..n.
class GraphSpec {
 public:
  static GraphSpec path(int n);
  static GraphSpec cycle(int n);

  GraphKind kind() const { return kind_; }
  int order() const { return n_; }
  bool is_cycle() const { return kind_ == GraphKind::Cycle; }

  int distance(int u, int v) const;
  // Largest distance realised in the graph.
  int diameter() const;

  std::string to_string() const;  // "P8", "C12"

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;

 private:
  GraphSpec(GraphKind kind, int n) : kind_(kind), n_(n) {}
  GraphKind kind_;
  int n_;
};

// Total labeling of vertices 1..n with colors >= 1.
class Coloring {
 public:
  explicit Coloring(std::vector<int> colors);

  // "12131214" for single-digit colors, otherwise a comma list.
  static Coloring parse(std::string_view text);

  int size() const { return static_cast<int>(colors_.size()); }
  // Color of vertex v, 1-based.
  int at(int v) const { return colors_.at(static_cast<std::size_t>(v - 1)); }
  const std::vector<int>& colors() const { return colors_; }
  int max_color() const;

  Coloring reversed() const;
  Coloring rotated(int offset) const;

  std::string to_string() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
};

struct Violation {
  int u;
  int v;
  int color;
  int distance;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::optional<Violation> violation;
  bool ok() const { return !violation.has_value(); }
};

// Checks d(u,v) > s_c for every pair of distinct vertices sharing color c and
// reports the lexicographically first violating pair (u < v). Throws
// std::invalid_argument when the coloring length differs from the order.
ValidationReport validate(const GraphSpec& graph, const PackingSequence& seq,
                          const Coloring& coloring);

// Vertex i gets the position of the lowest set bit of i (1-based), capped at k.
Coloring canonical_path_coloring(int n, int k);

int used_colors(const Coloring& coloring);

}  // namespace spack

#endif  // SPACK_COLORING_HPP
