#ifndef SPACK_PATTERNS_HPP
#define SPACK_PATTERNS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spack/coloring.hpp"
#include "spack/sequence.hpp"

namespace spack {

// One parenthesised block of a pattern. A free block repeats any number
// e >= min_exponent of times; a fixed block exactly `multiplicity` times.
struct PatternBlock {
  std::string digits;
  bool free = false;
  int multiplicity = 1;
  int min_exponent = 0;

  int period() const { return static_cast<int>(digits.size()); }
};

// Prefix and repeated blocks describing cyclic colorings of infinitely many
// C_n, e.g. "(1213124)^2(12131214)*".
//
// Syntax: "(d...)" once, "(d...)^N" N times, "(d...)*" or "(d...)^*" any
// number of times (>= 0), "(d...)^+" at least once. Several free blocks give
// several independent exponents, assigned left to right.
class PatternSpec {
 public:
  explicit PatternSpec(std::vector<PatternBlock> blocks);
  static PatternSpec parse(std::string_view text);

  const std::vector<PatternBlock>& blocks() const { return blocks_; }
  int free_count() const;
  int fixed_length() const;
  // Periods of the free blocks, in order.
  std::vector<int> periods() const;
  std::vector<int> min_exponents() const;
  int length(std::span<const int> exponents) const;
  int max_color() const;

  PatternSpec with_min_exponents(std::vector<int> mins) const;

  std::string to_string() const;

 private:
  std::vector<PatternBlock> blocks_;
};

// Throws std::invalid_argument when an exponent is below its minimum or the
// result is shorter than a cycle (n < 3).
Coloring instantiate(const PatternSpec& pattern, std::span<const int> exponents);
Coloring instantiate(const PatternSpec& pattern, int m);

// First exponent vector (lexicographic, within [min, min + n]) whose
// instantiation has exactly n vertices.
std::optional<std::vector<int>> exponents_for_length(const PatternSpec& pattern, int n);

// Every cycle order n (3 <= n <= n_max) the pattern instantiates to.
std::vector<int> covered_lengths(const PatternSpec& pattern, int n_max);

// "n = 7 + 6m, m >= 1" style description of the orders a pattern covers.
std::string describe_coverage(const PatternSpec& pattern);

struct CertificateReport {
  bool proved = false;
  // Exponent vectors checked; with a failure, the last one is the failing one.
  std::vector<std::vector<int>> checked;
  std::optional<Violation> witness;
  std::optional<std::vector<int>> failing_exponents;
  int separation = 0;  // largest separation among the pattern's colors
  std::string coverage;
};

// Proves that every instantiation is a valid S-packing coloring of its cycle.
//
// With W the largest separation among colors in the pattern, each free
// exponent e_i is checked over [min_i, min_i + ceil(2W / p_i) + 1]. Once a
// repeated run is at least 2W + p_i long, every window of W + 1 consecutive
// vertices in a longer instantiation already occurs in the capped one, so a
// same-color pair within distance W would show up in a checked instance.
CertificateReport certify_family(const PatternSpec& pattern, const PackingSequence& seq);

// Smallest minimum exponent vector (scanning each free exponent upward from
// the declared minimum, up to `search_limit`) for which the family certifies.
std::optional<std::vector<int>> minimal_certified_exponents(const PatternSpec& pattern,
                                                            const PackingSequence& seq,
                                                            int search_limit = 8);

struct LibraryEntry {
  std::string label;
  std::vector<SequenceFamily> families;
  PatternSpec pattern;
  std::string claim;  // the orders the construction is meant to cover
};

// Every periodic construction used to bound chi_S(C_n) <= 4 for the S(4)
// families with a critical-cycle characterization.
std::vector<LibraryEntry> pattern_library();

}  // namespace spack

#endif  // SPACK_PATTERNS_HPP
