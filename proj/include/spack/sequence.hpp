#ifndef SPACK_SEQUENCE_HPP
#define SPACK_SEQUENCE_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spack {

// A nondecreasing sequence of positive integers (s_1, s_2, ...). Only a finite
// prefix is stored; every index past the stored prefix repeats the last entry.
class PackingSequence {
 public:
  explicit PackingSequence(std::vector<int> entries);
  PackingSequence(std::initializer_list<int> entries);

  // Comma list, e.g. "1,2,4,7".
  static PackingSequence parse(std::string_view text);

  // 1-based access, total over i >= 1.
  int entry(std::size_t i) const;
  int operator[](std::size_t i) const { return entry(i); }

  std::size_t stored_length() const { return entries_.size(); }
  const std::vector<int>& entries() const { return entries_; }
  int tail() const { return entries_.back(); }

  // Same infinite sequence with trailing repeats of the tail dropped.
  PackingSequence canonical() const;

  std::string to_string() const;

  // Equality of the infinite sequences, not of the stored prefixes.
  friend bool operator==(const PackingSequence& a, const PackingSequence& b);

 private:
  std::vector<int> entries_;
};

// Membership k in the hierarchy S(k) = { 2^{i-1} <= s_i < 2^i for i < k,
// s_k < 2^{k-1} }, or nullopt when the sequence lies in no S(k).
using SkClass = std::optional<int>;

SkClass classify(const PackingSequence& seq);

// s'_i = floor(s_{i+1} / 2). Requires s_1 = 1; throws std::invalid_argument
// when the hypothesis fails or the result would contain a zero entry.
PackingSequence halve(const PackingSequence& seq);

// s'_1 = 1 and every even s_i (i >= 2) bumped to the next odd value.
// Requires s_1 = 1.
PackingSequence normalize_odd(const PackingSequence& seq);

// a_i <= b_i for every i.
bool dominates(const PackingSequence& a, const PackingSequence& b);

// Inclusive bounds for one prefix position of a family.
struct EntryRange {
  int lo;
  int hi;
  bool fixed() const { return lo == hi; }
  friend bool operator==(const EntryRange&, const EntryRange&) = default;
};

// Packing sequences whose first entries are pinned, with at most one entry
// ranging over an interval, e.g. 1,2,[4-7],7. Entries past the prefix are
// unconstrained beyond monotonicity.
class SequenceFamily {
 public:
  explicit SequenceFamily(std::vector<EntryRange> prefix);

  // "1,2,[4-7],7" or a plain comma list.
  static SequenceFamily parse(std::string_view text);
  static SequenceFamily single(const PackingSequence& seq);

  const std::vector<EntryRange>& prefix() const { return prefix_; }
  // 1-based index of the ranged entry, if any.
  std::optional<std::size_t> ranged_index() const;

  bool contains(const PackingSequence& seq) const;
  std::string to_string() const;

  friend bool operator==(const SequenceFamily&, const SequenceFamily&) = default;

 private:
  std::vector<EntryRange> prefix_;
};

// Canonical representatives: every value of the ranged entry, each sequence
// ending in a constant tail equal to its last constrained entry.
std::vector<PackingSequence> enumerate_family(const SequenceFamily& family);

}  // namespace spack

#endif  // SPACK_SEQUENCE_HPP
