#include "spack/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "parse_util.hpp"

namespace spack {

namespace {

void check_entries(const std::vector<int>& entries) {
  if (entries.empty()) {
    throw std::invalid_argument("packing sequence needs at least one entry");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 1) {
      throw std::invalid_argument("packing sequence entries must be positive");
    }
    if (i > 0 && entries[i] < entries[i - 1]) {
      throw std::invalid_argument("packing sequence must be nondecreasing");
    }
  }
}

}  // namespace

PackingSequence::PackingSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  check_entries(entries_);
}

PackingSequence::PackingSequence(std::initializer_list<int> entries)
    : PackingSequence(std::vector<int>(entries)) {}

PackingSequence PackingSequence::parse(std::string_view text) {
  std::vector<int> values;
  for (auto field : detail::split(text, ',')) {
    values.push_back(detail::parse_int(field, "sequence entry"));
  }
  return PackingSequence(std::move(values));
}

int PackingSequence::entry(std::size_t i) const {
  if (i == 0) throw std::out_of_range("packing sequence indices start at 1");
  return i <= entries_.size() ? entries_[i - 1] : entries_.back();
}

PackingSequence PackingSequence::canonical() const {
  std::vector<int> out = entries_;
  while (out.size() > 1 && out[out.size() - 2] == out.back()) out.pop_back();
  return PackingSequence(std::move(out));
}

std::string PackingSequence::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  return os.str();
}

bool operator==(const PackingSequence& a, const PackingSequence& b) {
  return a.canonical().entries_ == b.canonical().entries_;
}

SkClass classify(const PackingSequence& seq) {
  // Entries are nondecreasing with a constant tail, so s_i < 2^{i-1} holds
  // from some index on; the scan ends by then.
  for (std::size_t i = 1;; ++i) {
    const long long s = seq.entry(i);
    const long long low = 1LL << (i - 1);
    const long long high = 1LL << i;
    if (s < low) {
      if (i == 1) return std::nullopt;
      return static_cast<int>(i);
    }
    if (s >= high) return std::nullopt;
  }
}

PackingSequence halve(const PackingSequence& seq) {
  if (seq.entry(1) != 1) {
    throw std::invalid_argument("halve requires s_1 = 1");
  }
  const std::size_t len = std::max<std::size_t>(seq.stored_length(), 2);
  std::vector<int> out;
  out.reserve(len - 1);
  for (std::size_t i = 2; i <= len; ++i) {
    const int v = seq.entry(i) / 2;
    if (v == 0) {
      throw std::invalid_argument("halving " + seq.to_string() + " produces a zero entry");
    }
    out.push_back(v);
  }
  return PackingSequence(std::move(out));
}

PackingSequence normalize_odd(const PackingSequence& seq) {
  if (seq.entry(1) != 1) {
    throw std::invalid_argument("normalize_odd requires s_1 = 1");
  }
  std::vector<int> out = seq.entries();
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] % 2 == 0) ++out[i];
  }
  return PackingSequence(std::move(out));
}

bool dominates(const PackingSequence& a, const PackingSequence& b) {
  const std::size_t len = std::max(a.stored_length(), b.stored_length());
  for (std::size_t i = 1; i <= len; ++i) {
    if (a.entry(i) > b.entry(i)) return false;
  }
  return true;
}

SequenceFamily::SequenceFamily(std::vector<EntryRange> prefix) : prefix_(std::move(prefix)) {
  if (prefix_.empty()) throw std::invalid_argument("family needs at least one entry");
  int ranged = 0;
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    const auto& e = prefix_[i];
    if (e.lo < 1) throw std::invalid_argument("family entries must be positive");
    if (e.lo > e.hi) {
      throw std::invalid_argument("empty range [" + std::to_string(e.lo) + "-" +
                                  std::to_string(e.hi) + "] in family");
    }
    if (!e.fixed()) ++ranged;
    if (i > 0 && prefix_[i - 1].hi > e.lo) {
      throw std::invalid_argument("family entries must be nondecreasing");
    }
  }
  if (ranged > 1) throw std::invalid_argument("family may range over one entry only");
}

SequenceFamily SequenceFamily::parse(std::string_view text) {
  std::vector<EntryRange> prefix;
  for (auto field : detail::split(text, ',')) {
    field = detail::trim(field);
    if (!field.empty() && field.front() == '[') {
      if (field.back() != ']') throw std::invalid_argument("unterminated range in family");
      auto body = field.substr(1, field.size() - 2);
      auto dash = body.find('-');
      if (dash == std::string_view::npos) throw std::invalid_argument("range needs lo-hi");
      prefix.push_back({detail::parse_int(body.substr(0, dash), "range bound"),
                        detail::parse_int(body.substr(dash + 1), "range bound")});
    } else {
      const int v = detail::parse_int(field, "family entry");
      prefix.push_back({v, v});
    }
  }
  return SequenceFamily(std::move(prefix));
}

SequenceFamily SequenceFamily::single(const PackingSequence& seq) {
  std::vector<EntryRange> prefix;
  for (int v : seq.entries()) prefix.push_back({v, v});
  return SequenceFamily(std::move(prefix));
}

std::optional<std::size_t> SequenceFamily::ranged_index() const {
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (!prefix_[i].fixed()) return i + 1;
  }
  return std::nullopt;
}

bool SequenceFamily::contains(const PackingSequence& seq) const {
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    const int v = seq.entry(i + 1);
    if (v < prefix_[i].lo || v > prefix_[i].hi) return false;
  }
  return true;
}

std::string SequenceFamily::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (i) os << ',';
    if (prefix_[i].fixed()) {
      os << prefix_[i].lo;
    } else {
      os << '[' << prefix_[i].lo << '-' << prefix_[i].hi << ']';
    }
  }
  return os.str();
}

std::vector<PackingSequence> enumerate_family(const SequenceFamily& family) {
  std::vector<int> base;
  for (const auto& e : family.prefix()) base.push_back(e.lo);
  const auto ranged = family.ranged_index();
  if (!ranged) return {PackingSequence(base)};

  std::vector<PackingSequence> out;
  const auto& range = family.prefix()[*ranged - 1];
  for (int v = range.lo; v <= range.hi; ++v) {
    base[*ranged - 1] = v;
    out.emplace_back(base);
  }
  return out;
}

}  // namespace spack
