#include "spack/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "parse_util.hpp"

namespace spack {

PatternSpec::PatternSpec(std::vector<PatternBlock> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("pattern needs at least one block");
  for (const auto& b : blocks_) {
    if (b.digits.empty()) throw std::invalid_argument("pattern block is empty");
    for (char ch : b.digits) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("pattern colors must be digits 1-9");
    }
    if (b.free ? b.min_exponent < 0 : b.multiplicity < 0) {
      throw std::invalid_argument("pattern exponents must be nonnegative");
    }
  }
}

PatternSpec PatternSpec::parse(std::string_view text) {
  std::vector<PatternBlock> blocks;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad pattern '" + std::string(text) + "': " + why);
  };
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') fail("expected '('");
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) fail("missing ')'");
    PatternBlock block;
    block.digits = std::string(text.substr(i + 1, close - i - 1));
    i = close + 1;
    if (i < text.size() && text[i] == '*') {
      block.free = true;
      ++i;
    } else if (i < text.size() && text[i] == '^') {
      ++i;
      if (i < text.size() && text[i] == '*') {
        block.free = true;
        ++i;
      } else if (i < text.size() && text[i] == '+') {
        block.free = true;
        block.min_exponent = 1;
        ++i;
      } else if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
        block.free = true;  // named exponent, e.g. ^k
        ++i;
      } else {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) fail("expected exponent after '^'");
        block.multiplicity = detail::parse_int(text.substr(i, j - i), "exponent");
        i = j;
      }
    }
    blocks.push_back(std::move(block));
  }
  return PatternSpec(std::move(blocks));
}

int PatternSpec::free_count() const {
  return static_cast<int>(std::count_if(blocks_.begin(), blocks_.end(), [](const auto& b) { return b.free; }));
}

int PatternSpec::fixed_length() const {
  int len = 0;
  for (const auto& b : blocks_) {
    if (!b.free) len += b.period() * b.multiplicity;
  }
  return len;
}

std::vector<int> PatternSpec::periods() const {
  std::vector<int> out;
  for (const auto& b : blocks_) {
    if (b.free) out.push_back(b.period());
  }
  return out;
}

std::vector<int> PatternSpec::min_exponents() const {
  std::vector<int> out;
  for (const auto& b : blocks_) {
    if (b.free) out.push_back(b.min_exponent);
  }
  return out;
}

int PatternSpec::length(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != free_count()) {
    throw std::invalid_argument("pattern has " + std::to_string(free_count()) + " free exponents");
  }
  const auto periods = this->periods();
  int len = fixed_length();
  for (std::size_t i = 0; i < periods.size(); ++i) len += periods[i] * exponents[i];
  return len;
}

int PatternSpec::max_color() const {
  int top = 0;
  for (const auto& b : blocks_) {
    for (char ch : b.digits) top = std::max(top, ch - '0');
  }
  return top;
}

PatternSpec PatternSpec::with_min_exponents(std::vector<int> mins) const {
  if (static_cast<int>(mins.size()) != free_count()) {
    throw std::invalid_argument("wrong number of minimum exponents");
  }
  auto blocks = blocks_;
  std::size_t next = 0;
  for (auto& b : blocks) {
    if (b.free) b.min_exponent = mins[next++];
  }
  return PatternSpec(std::move(blocks));
}

std::string PatternSpec::to_string() const {
  std::ostringstream os;
  for (const auto& b : blocks_) {
    os << '(' << b.digits << ')';
    if (b.free) {
      if (b.min_exponent == 0) {
        os << '*';
      } else if (b.min_exponent == 1) {
        os << "^+";
      } else {
        os << "^{>=" << b.min_exponent << '}';
      }
    } else if (b.multiplicity != 1) {
      os << '^' << b.multiplicity;
    }
  }
  return os.str();
}

Coloring instantiate(const PatternSpec& pattern, std::span<const int> exponents) {
  const int n = pattern.length(exponents);
  std::string digits;
  digits.reserve(static_cast<std::size_t>(std::max(n, 0)));
  std::size_t next = 0;
  for (const auto& b : pattern.blocks()) {
    int reps = b.multiplicity;
    if (b.free) {
      reps = exponents[next++];
      if (reps < b.min_exponent) {
        throw std::invalid_argument("exponent " + std::to_string(reps) + " below minimum " +
                                    std::to_string(b.min_exponent));
      }
    }
    for (int r = 0; r < reps; ++r) digits += b.digits;
  }
  if (n < 3) throw std::invalid_argument("pattern instance has fewer than 3 vertices");
  return Coloring::parse(digits);
}

Coloring instantiate(const PatternSpec& pattern, int m) {
  const int e[] = {m};
  return instantiate(pattern, std::span<const int>(e, pattern.free_count() == 1 ? 1 : 0));
}

namespace {

// Calls visit on every exponent vector with mins[i] <= e[i] <= maxs[i].
void for_each_exponent(const std::vector<int>& mins, const std::vector<int>& maxs,
                       const std::function<bool(const std::vector<int>&)>& visit) {
  for (std::size_t i = 0; i < mins.size(); ++i) {
    if (mins[i] > maxs[i]) return;
  }
  std::vector<int> e = mins;
  for (;;) {
    if (!visit(e)) return;
    std::size_t i = e.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (e[i] < maxs[i]) {
        ++e[i];
        for (std::size_t j = i + 1; j < e.size(); ++j) e[j] = mins[j];
        break;
      }
    }
  }
}

std::vector<int> exponent_caps(const PatternSpec& pattern, int n_max) {
  std::vector<int> caps;
  for (int p : pattern.periods()) caps.push_back(std::max(0, n_max / p));
  return caps;
}

}  // namespace

std::optional<std::vector<int>> exponents_for_length(const PatternSpec& pattern, int n) {
  std::optional<std::vector<int>> found;
  auto mins = pattern.min_exponents();
  auto caps = exponent_caps(pattern, n);
  for (std::size_t i = 0; i < caps.size(); ++i) caps[i] = std::max(caps[i], mins[i]);
  for_each_exponent(mins, caps, [&](const std::vector<int>& e) {
    if (pattern.length(e) == n) {
      found = e;
      return false;
    }
    return true;
  });
  return found;
}

std::vector<int> covered_lengths(const PatternSpec& pattern, int n_max) {
  std::vector<bool> hit(static_cast<std::size_t>(std::max(n_max, 0)) + 1, false);
  auto mins = pattern.min_exponents();
  auto caps = exponent_caps(pattern, n_max);
  for (std::size_t i = 0; i < caps.size(); ++i) caps[i] = std::max(caps[i], mins[i]);
  for_each_exponent(mins, caps, [&](const std::vector<int>& e) {
    const int n = pattern.length(e);
    if (n >= 3 && n <= n_max) hit[static_cast<std::size_t>(n)] = true;
    return true;
  });
  std::vector<int> out;
  for (int n = 3; n <= n_max; ++n) {
    if (hit[static_cast<std::size_t>(n)]) out.push_back(n);
  }
  return out;
}

std::string describe_coverage(const PatternSpec& pattern) {
  const auto periods = pattern.periods();
  const auto mins = pattern.min_exponents();
  const int fixed = pattern.fixed_length();
  std::ostringstream os;
  if (periods.empty()) {
    os << "n = " << fixed;
  } else if (periods.size() == 1) {
    int m0 = mins[0];
    while (fixed + periods[0] * m0 < 3) ++m0;
    const int first = fixed + periods[0] * m0;
    os << "n = " << first % periods[0] << " (mod " << periods[0] << "), n >= " << first;
  } else {
    static const char* names[] = {"k", "m", "j", "l"};
    os << "n = ";
    if (fixed) os << fixed << " + ";
    for (std::size_t i = 0; i < periods.size(); ++i) {
      if (i) os << " + ";
      os << periods[i] << (i < 4 ? names[i] : "e");
    }
    os << " with ";
    for (std::size_t i = 0; i < periods.size(); ++i) {
      if (i) os << ", ";
      os << (i < 4 ? names[i] : "e") << " >= " << mins[i];
    }
    os << ", n >= 3";
  }
  return os.str();
}

CertificateReport certify_family(const PatternSpec& pattern, const PackingSequence& seq) {
  CertificateReport report;
  report.separation = seq.entry(static_cast<std::size_t>(pattern.max_color()));
  report.coverage = describe_coverage(pattern);
  const int w = report.separation;

  const auto mins = pattern.min_exponents();
  std::vector<int> caps;
  const auto periods = pattern.periods();
  for (std::size_t i = 0; i < periods.size(); ++i) {
    caps.push_back(mins[i] + (2 * w + periods[i] - 1) / periods[i] + 1);
  }

  bool ok = true;
  bool any = false;
  for_each_exponent(mins, caps, [&](const std::vector<int>& e) {
    const int n = pattern.length(e);
    if (n < 3) return true;
    any = true;
    report.checked.push_back(e);
    const auto result = validate(GraphSpec::cycle(n), seq, instantiate(pattern, e));
    if (!result.ok()) {
      ok = false;
      report.witness = result.violation;
      report.failing_exponents = e;
      return false;
    }
    return true;
  });
  report.proved = ok && any;
  return report;
}

std::optional<std::vector<int>> minimal_certified_exponents(const PatternSpec& pattern,
                                                            const PackingSequence& seq,
                                                            int search_limit) {
  const auto base = pattern.min_exponents();
  std::vector<int> limits = base;
  for (auto& l : limits) l += search_limit;
  std::optional<std::vector<int>> best;
  // Exponent vectors in increasing order of total offset, then lexicographically.
  for (int budget = 0; budget <= search_limit * static_cast<int>(base.size()) && !best; ++budget) {
    for_each_exponent(base, limits, [&](const std::vector<int>& e) {
      int offset = 0;
      for (std::size_t i = 0; i < e.size(); ++i) offset += e[i] - base[i];
      if (offset != budget) return true;
      if (certify_family(pattern.with_min_exponents(e), seq).proved) {
        best = e;
        return false;
      }
      return true;
    });
  }
  return best;
}

std::vector<LibraryEntry> pattern_library() {
  const auto fam = [](const char* text) { return SequenceFamily::parse(text); };
  const SequenceFamily f244 = fam("1,2,4,4");
  const SequenceFamily f245 = fam("1,2,[4-5],5");
  const SequenceFamily f246 = fam("1,2,[4-6],6");
  const SequenceFamily f344 = fam("1,3,4,4");
  const SequenceFamily f345 = fam("1,3,4,5");
  const SequenceFamily f355 = fam("1,3,5,5");
  const SequenceFamily f247 = fam("1,2,[4-7],7");
  const SequenceFamily f347 = fam("1,3,[4-7],7");
  const SequenceFamily f356 = fam("1,3,[5-6],6");

  std::vector<LibraryEntry> lib;
  lib.push_back({"ruler-period-8",
                 {f244, f245, f246, f344, f345, f355, f247, f347, f356},
                 PatternSpec::parse("(12131214)^+"),
                 "n = 0 (mod 8), n >= 8"});
  for (int r = 1; r <= 7; ++r) {
    lib.push_back({"ruler-residue-" + std::to_string(r),
                   {f244, f245, f246},
                   PatternSpec::parse("(1213124)^" + std::to_string(8 - r) + "(12131214)*"),
                   "n = " + std::to_string(r) + " (mod 8), n >= " + std::to_string(7 * (8 - r))});
  }
  lib.push_back({"seven-eight", {f244, f245, f246}, PatternSpec::parse("(1213124)^k(12131214)^m"),
                 "n = 7k + 8m"});
  lib.push_back({"five-eight", {f244, f344}, PatternSpec::parse("(13214)^k(12131214)^m"),
                 "n = 5k + 8m"});
  lib.push_back({"six-eight", {f345, f355}, PatternSpec::parse("(131214)^k(12131214)^m"),
                 "n = 6k + 8m"});
  lib.push_back({"odd-7", {f345}, PatternSpec::parse("(1213124)(131214)^+"), "n = 7 + 6m, m >= 1"});
  lib.push_back({"odd-15", {f345}, PatternSpec::parse("(1213124)(13121412)(131214)^+"),
                 "n = 15 + 6m, m >= 1"});
  lib.push_back({"odd-23", {f345}, PatternSpec::parse("(1213124)(13121412)^2(131214)^+"),
                 "n = 23 + 6m, m >= 1"});
  return lib;
}

}  // namespace spack
