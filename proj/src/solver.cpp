#include "spack/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace spack {

namespace {

// Per-color separation capped at n (a color whose separation reaches n can
// appear at most once either way) and the symmetry groups of colors that
// behave identically.
struct ColorTable {
  std::vector<int> reach;
  std::vector<int> group_begin;  // first color index of each color's group
  std::vector<int> group_end;    // one past the last

  ColorTable(const PackingSequence& seq, int k, int n, std::span<const int> pinned) {
    std::vector<bool> is_pinned(static_cast<std::size_t>(k), false);
    for (int p : pinned) {
      if (p >= 1 && p <= k) is_pinned[static_cast<std::size_t>(p - 1)] = true;
    }
    reach.resize(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
      reach[static_cast<std::size_t>(c)] = std::min(seq.entry(static_cast<std::size_t>(c + 1)), n);
    }
    group_begin.resize(static_cast<std::size_t>(k));
    group_end.resize(static_cast<std::size_t>(k));
    int begin = 0;
    for (int c = 0; c < k; ++c) {
      const bool split = c > 0 && (reach[static_cast<std::size_t>(c)] != reach[static_cast<std::size_t>(c - 1)] ||
                                   is_pinned[static_cast<std::size_t>(c)] ||
                                   is_pinned[static_cast<std::size_t>(c - 1)]);
      if (split) {
        for (int d = begin; d < c; ++d) group_end[static_cast<std::size_t>(d)] = c;
        begin = c;
      }
      group_begin[static_cast<std::size_t>(c)] = begin;
    }
    for (int d = begin; d < k; ++d) group_end[static_cast<std::size_t>(d)] = k;
  }

  int size() const { return static_cast<int>(reach.size()); }
};

// age[c]: steps since color c was last placed, saturating at reach[c] (free).
// first[c]: 1-based position of the first use of c if it is <= reach[c], else
// 0. Only tracked on cycles, where it decides the wrap-around check.
struct State {
  std::vector<std::uint16_t> age;
  std::vector<std::uint16_t> first;
};

State initial_state(const ColorTable& colors, bool track_first) {
  State st;
  st.age.reserve(colors.reach.size());
  for (int r : colors.reach) st.age.push_back(static_cast<std::uint16_t>(r));
  if (track_first) st.first.assign(colors.reach.size(), 0);
  return st;
}

bool can_place(const ColorTable& colors, const State& st, int c) {
  return st.age[static_cast<std::size_t>(c)] >= colors.reach[static_cast<std::size_t>(c)];
}

// Places color c at position t + 1.
void place(const ColorTable& colors, State& st, int c, int t) {
  for (std::size_t d = 0; d < st.age.size(); ++d) {
    if (st.age[d] < colors.reach[d]) ++st.age[d];
  }
  const auto cu = static_cast<std::size_t>(c);
  st.age[cu] = 0;
  if (!st.first.empty() && st.first[cu] == 0 && t + 1 <= colors.reach[cu]) {
    st.first[cu] = static_cast<std::uint16_t>(t + 1);
  }
}

// Same-color pairs straddling the seam: for each color only its first and last
// occurrence can be too close, at wrap distance age + first.
bool closes_cycle(const ColorTable& colors, const State& st, int n) {
  for (std::size_t c = 0; c < st.age.size(); ++c) {
    const int first = st.first[c];
    const int age = st.age[c];
    const int reach = colors.reach[c];
    if (first == 0 || age >= reach) continue;
    const int last = n - age;
    if (last != first && age + first <= reach) return false;
  }
  return true;
}

std::string state_key(const ColorTable& colors, const State& st, int t) {
  const std::size_t k = st.age.size();
  std::vector<std::uint32_t> cells(k);
  for (std::size_t c = 0; c < k; ++c) {
    const std::uint32_t first = st.first.empty() ? 0 : st.first[c];
    cells[c] = (static_cast<std::uint32_t>(st.age[c]) << 16) | first;
  }
  for (std::size_t c = 0; c < k;) {
    const auto end = static_cast<std::size_t>(colors.group_end[c]);
    std::sort(cells.begin() + static_cast<std::ptrdiff_t>(c), cells.begin() + static_cast<std::ptrdiff_t>(end));
    c = end;
  }
  std::string key;
  key.reserve(4 * (k + 1));
  auto put = [&key](std::uint32_t v) {
    for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  };
  put(static_cast<std::uint32_t>(t));
  for (auto v : cells) put(v);
  return key;
}

// True when an earlier color of the same group is in exactly the same state;
// the two are interchangeable and only the smaller one needs exploring.
bool shadowed(const ColorTable& colors, const State& st, int c) {
  const auto cu = static_cast<std::size_t>(c);
  for (int d = colors.group_begin[cu]; d < c; ++d) {
    const auto du = static_cast<std::size_t>(d);
    if (st.age[du] == st.age[cu] && (st.first.empty() || st.first[du] == st.first[cu])) {
      return true;
    }
  }
  return false;
}

// Counting bound: how many of the positions t+1..n each color could still
// take, spaced reach + 1 apart from its earliest legal slot and, on cycles,
// ending early enough to clear its own first use across the seam. Too few in
// total means no completion exists.
bool short_of_slots(const ColorTable& colors, const State& st, int t, int n) {
  long long total = 0;
  const long long need = n - t;
  for (std::size_t c = 0; c < st.age.size(); ++c) {
    const int reach = colors.reach[c];
    const int earliest = t + std::max(0, reach - static_cast<int>(st.age[c]));  // 0-based
    int latest = n - 1;
    if (!st.first.empty() && st.first[c] != 0) latest = std::min(latest, n + st.first[c] - reach - 2);
    if (earliest > latest) continue;
    total += 1 + (latest - earliest) / (reach + 1);
    if (total >= need) return false;
  }
  return true;
}

class WindowSearch {
 public:
  WindowSearch(const GraphSpec& graph, const PackingSequence& seq, int k, std::span<const int> pinned)
      : n_(graph.order()), cycle_(graph.is_cycle()), colors_(seq, k, graph.order(), pinned), pinned_(pinned) {
    path_.reserve(static_cast<std::size_t>(n_));
  }

  std::optional<Coloring> run() {
    State st = initial_state(colors_, cycle_);
    if (!extend(0, st)) return std::nullopt;
    return Coloring(path_);
  }

 private:
  bool extend(int t, const State& st) {
    if (t == n_) return !cycle_ || closes_cycle(colors_, st, n_);
    if (short_of_slots(colors_, st, t, n_)) return false;
    std::string key = state_key(colors_, st, t);
    if (dead_.contains(key)) return false;

    const int pin = pinned_.empty() ? 0 : pinned_[static_cast<std::size_t>(t)];
    for (int c = 0; c < colors_.size(); ++c) {
      if (pin != 0 && pin != c + 1) continue;
      if (!can_place(colors_, st, c) || shadowed(colors_, st, c)) continue;
      State next = st;
      place(colors_, next, c, t);
      path_.push_back(c + 1);
      if (extend(t + 1, next)) return true;
      path_.pop_back();
    }
    dead_.insert(std::move(key));
    return false;
  }

  int n_;
  bool cycle_;
  ColorTable colors_;
  std::span<const int> pinned_;
  std::vector<int> path_;
  std::unordered_set<std::string> dead_;
};

// Longest path order that admits a k-coloring, saturating at n_max.
int longest_colorable_path(const PackingSequence& seq, int k, int n_max) {
  const ColorTable colors(seq, k, n_max, {});
  std::unordered_set<std::string> layer;
  std::vector<State> frontier{initial_state(colors, false)};
  int t = 0;
  while (t < n_max) {
    std::vector<State> next_frontier;
    layer.clear();
    for (const auto& st : frontier) {
      for (int c = 0; c < k; ++c) {
        if (!can_place(colors, st, c) || shadowed(colors, st, c)) continue;
        State next = st;
        place(colors, next, c, t);
        if (layer.insert(state_key(colors, next, t + 1)).second) {
          next_frontier.push_back(std::move(next));
        }
      }
    }
    if (next_frontier.empty()) break;
    frontier = std::move(next_frontier);
    ++t;
  }
  return t;
}

class BruteForce {
 public:
  BruteForce(const GraphSpec& graph, const PackingSequence& seq, int k)
      : graph_(graph), seq_(seq), k_(k), colors_(static_cast<std::size_t>(graph.order()) + 1, 0),
        uses_(static_cast<std::size_t>(k) + 1, 0) {}

  std::optional<Coloring> run() {
    if (!assign(1)) return std::nullopt;
    return Coloring(std::vector<int>(colors_.begin() + 1, colors_.end()));
  }

 private:
  // A color not used yet is only tried if it is the smallest unused color
  // among those with the same separation.
  bool symmetric_duplicate(int c) const {
    if (uses_[static_cast<std::size_t>(c)] > 0) return false;
    const int s = seq_.entry(static_cast<std::size_t>(c));
    for (int d = c - 1; d >= 1 && seq_.entry(static_cast<std::size_t>(d)) == s; --d) {
      if (uses_[static_cast<std::size_t>(d)] == 0) return true;
    }
    return false;
  }

  bool fits(int v, int c) const {
    const int s = seq_.entry(static_cast<std::size_t>(c));
    for (int u = 1; u < v; ++u) {
      if (colors_[static_cast<std::size_t>(u)] == c && graph_.distance(u, v) <= s) return false;
    }
    return true;
  }

  bool assign(int v) {
    if (v > graph_.order()) return true;
    for (int c = 1; c <= k_; ++c) {
      if (symmetric_duplicate(c) || !fits(v, c)) continue;
      colors_[static_cast<std::size_t>(v)] = c;
      ++uses_[static_cast<std::size_t>(c)];
      if (assign(v + 1)) return true;
      --uses_[static_cast<std::size_t>(c)];
      colors_[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  }

  const GraphSpec& graph_;
  const PackingSequence& seq_;
  int k_;
  std::vector<int> colors_;
  std::vector<int> uses_;
};

std::string cache_key(const GraphSpec& graph, const PackingSequence& seq) {
  return graph.to_string() + "|" + seq.canonical().to_string();
}

}  // namespace

std::optional<Coloring> find_coloring(const GraphSpec& graph, const PackingSequence& seq, int k,
                                      std::span<const int> pinned) {
  if (k < 1) throw std::invalid_argument("need at least one color");
  if (!pinned.empty() && static_cast<int>(pinned.size()) != graph.order()) {
    throw std::invalid_argument("pinned colors must cover every vertex");
  }
  return WindowSearch(graph, seq, k, pinned).run();
}

SolveResult chromatic(const GraphSpec& graph, const PackingSequence& seq, std::span<const int> pinned) {
  int limit = graph.order();
  for (int p : pinned) limit = std::max(limit, p);
  for (int k = 1; k <= limit; ++k) {
    if (auto witness = find_coloring(graph, seq, k, pinned)) return {k, std::move(*witness)};
  }
  throw std::domain_error("pinned colors admit no valid coloring");
}

SolveResult brute_force_chromatic(const GraphSpec& graph, const PackingSequence& seq, int k_max,
                                  int size_bound) {
  if (graph.order() > size_bound) {
    throw std::invalid_argument("brute force limited to " + std::to_string(size_bound) + " vertices");
  }
  if (k_max < 1) throw std::invalid_argument("k_max must be positive");
  for (int k = 1; k <= k_max; ++k) {
    if (auto witness = BruteForce(graph, seq, k).run()) return {k, std::move(*witness)};
  }
  throw std::domain_error("no coloring of " + graph.to_string() + " with at most " +
                          std::to_string(k_max) + " colors");
}

std::vector<int> path_chromatic_profile(const PackingSequence& seq, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  std::vector<int> chi(static_cast<std::size_t>(n_max) + 1, 0);
  int covered = 0;
  for (int k = 1; covered < n_max; ++k) {
    const int longest = longest_colorable_path(seq, k, n_max);
    for (int n = covered + 1; n <= longest; ++n) chi[static_cast<std::size_t>(n)] = k;
    covered = std::max(covered, longest);
  }
  return chi;
}

int ChromaticCache::chromatic(const GraphSpec& graph, const PackingSequence& seq) {
  const std::string key = cache_key(graph, seq);
  {
    std::shared_lock lock(mutex_);
    if (auto it = values_.find(key); it != values_.end()) return it->second;
  }
  const int value = spack::chromatic(graph, seq).chromatic;
  std::unique_lock lock(mutex_);
  values_.emplace(key, value);
  return value;
}

std::size_t ChromaticCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

}  // namespace spack
