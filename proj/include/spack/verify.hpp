#ifndef SPACK_VERIFY_HPP
#define SPACK_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "spack/sequence.hpp"

namespace spack {

// Deterministic sequence suites used by the sweeps.

// Members of S(2) .. S(max_k): every free entry at the low or high end of its
// allowed band, constant tail. 46 sequences for max_k = 6.
std::vector<PackingSequence> sk_suite(int max_k = 6);

// Sequences (1, a, b, c) with a <= b <= c <= max_entry, every `stride`-th in
// lexicographic order.
std::vector<PackingSequence> s1_sample(int max_entry, int stride);

// Sequences that sit in the dyadic band 2^{i-1} <= s_i < 2^i for the first
// few indices and then leave it, so no S(k) contains them.
std::vector<PackingSequence> band_exit_suite();

// Pairs (a, b) with a dominated by b, a != b.
std::vector<std::pair<PackingSequence, PackingSequence>> dominating_pairs(int count);

struct VerificationReport {
  std::string id;
  std::string title;
  int n_max = 0;
  int checks = 0;
  std::vector<std::string> failures;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

// Ids: "1.2", "3", "4(ii)", "5", "4.1", "4.2", "4.3", "5.1", "lemmas".
std::vector<std::string> verification_ids();

// n_max <= 0 picks the default: 64 for path sweeps, 48 for cycle sweeps.
// Throws std::invalid_argument for an unknown id.
VerificationReport run_verification(std::string_view id, int n_max = 0);

}  // namespace spack

#endif  // SPACK_VERIFY_HPP
