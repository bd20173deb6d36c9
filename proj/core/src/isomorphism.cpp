#include "sgk/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "sgk/error.hpp"

namespace sgk {

namespace {

using Colors = std::vector<std::uint32_t>;

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b) : a_(a), b_(b) {}

  std::optional<std::vector<Vertex>> run(Colors ca, Colors cb) {
    if (!refine(ca, cb)) return std::nullopt;
    return search(std::move(ca), std::move(cb));
  }

 private:
  // Joint refinement: both graphs share one colour numbering so classes stay
  // comparable. Returns false as soon as class sizes disagree.
  bool refine(Colors& ca, Colors& cb) const {
    std::size_t classes = count_classes(ca, cb);
    while (true) {
      using Signature = std::pair<std::uint32_t, std::vector<std::uint32_t>>;
      auto signature = [](const Graph& g, const Colors& c, Vertex v) {
        Signature s{c[v], {}};
        s.second.reserve(g.valency(v));
        for (Vertex w : g.neighbors(v)) s.second.push_back(c[w]);
        std::sort(s.second.begin(), s.second.end());
        return s;
      };
      std::vector<Signature> sa, sb;
      sa.reserve(ca.size());
      sb.reserve(cb.size());
      for (Vertex v = 0; v < ca.size(); ++v) sa.push_back(signature(a_, ca, v));
      for (Vertex v = 0; v < cb.size(); ++v) sb.push_back(signature(b_, cb, v));
      std::map<Signature, std::uint32_t> index;
      for (const auto& s : sa) index.emplace(s, 0);
      for (const auto& s : sb) index.emplace(s, 0);
      std::uint32_t next = 0;
      for (auto& [s, id] : index) id = next++;
      for (Vertex v = 0; v < ca.size(); ++v) ca[v] = index[sa[v]];
      for (Vertex v = 0; v < cb.size(); ++v) cb[v] = index[sb[v]];
      if (!same_histogram(ca, cb)) return false;
      std::size_t now = count_classes(ca, cb);
      if (now == classes) return true;
      classes = now;
    }
  }

  static std::size_t count_classes(const Colors& ca, const Colors& cb) {
    Colors all = ca;
    all.insert(all.end(), cb.begin(), cb.end());
    std::sort(all.begin(), all.end());
    return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  }

  static bool same_histogram(Colors ca, Colors cb) {
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
  }

  std::optional<std::vector<Vertex>> search(Colors ca, Colors cb) const {
    const std::size_t n = ca.size();
    std::vector<std::uint32_t> size(n + 1, 0);
    std::uint32_t top = 0;
    for (auto c : ca) {
      if (c >= size.size()) size.resize(c + 1, 0);
      ++size[c];
      top = std::max(top, c);
    }
    // Smallest non-singleton class, ties by colour.
    std::optional<std::uint32_t> target;
    for (std::uint32_t c = 0; c < size.size(); ++c) {
      if (size[c] > 1 && (!target || size[c] < size[*target])) target = c;
    }
    if (!target) {
      std::vector<Vertex> map(n);
      std::vector<Vertex> where(size.size());
      for (Vertex v = 0; v < n; ++v) where[cb[v]] = v;
      for (Vertex v = 0; v < n; ++v) map[v] = where[ca[v]];
      if (!preserves(map)) return std::nullopt;
      return map;
    }
    Vertex pick = 0;
    while (ca[pick] != *target) ++pick;
    for (Vertex w = 0; w < n; ++w) {
      if (cb[w] != *target) continue;
      Colors na = ca, nb = cb;
      na[pick] = top + 1;
      nb[w] = top + 1;
      if (!refine(na, nb)) continue;
      if (auto found = search(std::move(na), std::move(nb))) return found;
    }
    return std::nullopt;
  }

  bool preserves(const std::vector<Vertex>& map) const {
    for (const auto& [u, v] : a_.arcs()) {
      if (!b_.has_arc(map[u], map[v])) return false;
    }
    return true;
  }

  const Graph& a_;
  const Graph& b_;
};

}  // namespace

std::optional<std::vector<Vertex>> are_isomorphic(const Graph& first, const Graph& second,
                                                  std::span<const std::uint32_t> first_colors,
                                                  std::span<const std::uint32_t> second_colors) {
  if (first_colors.size() != first.vertex_count() || second_colors.size() != second.vertex_count()) {
    fail(ErrorCode::InvalidArgument, "colour list length differs from vertex count");
  }
  if (first.vertex_count() != second.vertex_count() || first.arc_count() != second.arc_count()) {
    return std::nullopt;
  }
  if (first.vertex_count() == 0) return std::vector<Vertex>{};
  Matcher matcher(first, second);
  return matcher.run(Colors(first_colors.begin(), first_colors.end()),
                     Colors(second_colors.begin(), second_colors.end()));
}

std::optional<std::vector<Vertex>> are_isomorphic(const Graph& first, const Graph& second) {
  Colors a(first.vertex_count(), 0), b(second.vertex_count(), 0);
  return are_isomorphic(first, second, a, b);
}

}  // namespace sgk
