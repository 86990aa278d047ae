#include "spack/formulas.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace spack {

namespace {

long long pow2(int e) { return 1LL << e; }

bool in_dyadic_band(const PackingSequence& seq, int i) {
  const long long s = seq.entry(static_cast<std::size_t>(i));
  return pow2(i - 1) <= s && s < pow2(i);
}

}  // namespace

int bit_length(int n) {
  if (n < 1) throw std::invalid_argument("bit_length needs n >= 1");
  return std::bit_width(static_cast<unsigned>(n));
}

std::string to_string(PathClause clause) {
  switch (clause) {
    case PathClause::SkClass: return "sk-class";
    case PathClause::DyadicBand: return "dyadic-band";
    case PathClause::DyadicLowerBound: return "dyadic-lower-bound";
    case PathClause::FirstDeficit: return "first-deficit";
    case PathClause::None: return "none";
  }
  return "none";
}

PathFormulaResult path_chromatic_formula(const PackingSequence& seq, int n) {
  const int levels = bit_length(n);
  if (auto k = classify(seq)) {
    return {BoundKind::Exact, std::min(*k, levels), PathClause::SkClass};
  }
  if (seq.entry(1) != 1) return {BoundKind::Inapplicable, 0, PathClause::None};

  bool band = true;
  bool lower = true;
  for (int i = 2; i <= levels; ++i) {
    band = band && in_dyadic_band(seq, i);
    lower = lower && seq.entry(static_cast<std::size_t>(i)) >= pow2(i - 1);
  }
  if (band) return {BoundKind::Exact, levels, PathClause::DyadicBand};
  if (lower) return {BoundKind::AtLeast, levels, PathClause::DyadicLowerBound};

  for (int i = 2;; ++i) {
    if (seq.entry(static_cast<std::size_t>(i)) < pow2(i - 1)) {
      return {BoundKind::AtLeast, std::min(i, levels), PathClause::FirstDeficit};
    }
  }
}

std::vector<int> critical_path_set(const PackingSequence& seq, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  int top = 0;  // largest admissible exponent
  if (auto k = classify(seq)) {
    top = *k - 1;
  } else {
    const int levels = bit_length(n_max);
    for (int i = 1; i <= levels; ++i) {
      if (!in_dyadic_band(seq, i)) {
        throw std::invalid_argument("critical paths of " + seq.to_string() +
                                    " are not determined in closed form");
      }
    }
    top = levels;
  }
  std::vector<int> out;
  for (int j = 0; j <= top && pow2(j) <= n_max; ++j) out.push_back(static_cast<int>(pow2(j)));
  return out;
}

std::vector<int> vertex_critical_path_set(const PackingSequence& seq, int n_max) {
  return critical_path_set(seq, n_max);
}

}  // namespace spack
