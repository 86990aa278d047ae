#include "spack/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "parse_util.hpp"

namespace spack {

GraphSpec GraphSpec::path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  return GraphSpec(GraphKind::Path, n);
}

GraphSpec GraphSpec::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  return GraphSpec(GraphKind::Cycle, n);
}

int GraphSpec::distance(int u, int v) const {
  const int d = std::abs(u - v);
  return kind_ == GraphKind::Cycle ? std::min(d, n_ - d) : d;
}

int GraphSpec::diameter() const { return kind_ == GraphKind::Cycle ? n_ / 2 : n_ - 1; }

std::string GraphSpec::to_string() const {
  return (kind_ == GraphKind::Cycle ? "C" : "P") + std::to_string(n_);
}

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
  for (int c : colors_) {
    if (c < 1) throw std::invalid_argument("colors must be >= 1");
  }
}

Coloring Coloring::parse(std::string_view text) {
  text = detail::trim(text);
  std::vector<int> colors;
  if (text.find(',') != std::string_view::npos) {
    for (auto field : detail::split(text, ',')) colors.push_back(detail::parse_int(field, "color"));
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') {
        throw std::invalid_argument(std::string("bad color digit '") + ch + "'");
      }
      colors.push_back(ch - '0');
    }
  }
  return Coloring(std::move(colors));
}

int Coloring::max_color() const {
  return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

Coloring Coloring::reversed() const {
  return Coloring(std::vector<int>(colors_.rbegin(), colors_.rend()));
}

Coloring Coloring::rotated(int offset) const {
  std::vector<int> out = colors_;
  if (!out.empty()) {
    const int n = size();
    std::rotate(out.begin(), out.begin() + ((offset % n) + n) % n, out.end());
  }
  return Coloring(std::move(out));
}

std::string Coloring::to_string() const {
  std::ostringstream os;
  if (max_color() <= 9) {
    for (int c : colors_) os << c;
  } else {
    for (std::size_t i = 0; i < colors_.size(); ++i) {
      if (i) os << ',';
      os << colors_[i];
    }
  }
  return os.str();
}

ValidationReport validate(const GraphSpec& graph, const PackingSequence& seq,
                          const Coloring& coloring) {
  const int n = graph.order();
  if (coloring.size() != n) {
    throw std::invalid_argument("coloring has " + std::to_string(coloring.size()) +
                                " vertices, graph has " + std::to_string(n));
  }
  // Pairs farther apart than the largest separation in use cannot conflict.
  const int reach = std::min(seq.entry(static_cast<std::size_t>(coloring.max_color())), n);

  for (int u = 1; u <= n; ++u) {
    const int c = coloring.at(u);
    const int s = seq.entry(static_cast<std::size_t>(c));
    auto check = [&](int v) -> std::optional<Violation> {
      const int d = graph.distance(u, v);
      if (coloring.at(v) == c && d <= s) return Violation{u, v, c, d};
      return std::nullopt;
    };
    for (int v = u + 1; v <= std::min(n, u + reach); ++v) {
      if (auto bad = check(v)) return {bad};
    }
    if (graph.is_cycle()) {
      // Vertices reached the short way round the seam.
      for (int v = std::max(u + reach + 1, n - reach + u); v <= n; ++v) {
        if (auto bad = check(v)) return {bad};
      }
    }
  }
  return {};
}

Coloring canonical_path_coloring(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("canonical coloring needs n >= 1, k >= 1");
  std::vector<int> colors(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int low_bit = std::countr_zero(static_cast<unsigned>(i)) + 1;
    colors[static_cast<std::size_t>(i - 1)] = std::min(low_bit, k);
  }
  return Coloring(std::move(colors));
}

int used_colors(const Coloring& coloring) {
  return static_cast<int>(std::set<int>(coloring.colors().begin(), coloring.colors().end()).size());
}

}  // namespace spack
