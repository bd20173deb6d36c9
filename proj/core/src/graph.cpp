#include "sgk/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sgk/error.hpp"

namespace sgk {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  return labels;
}

}  // namespace

Graph::Graph(std::size_t vertex_count) : labels_(default_labels(vertex_count)) { build({}); }

void Graph::build(std::vector<Arc> arcs) {
  const std::size_t n = labels_.size();
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n) fail(ErrorCode::InvalidGraph, "arc endpoint outside the vertex set");
    if (u == v) fail(ErrorCode::InvalidGraph, "loop at vertex " + std::to_string(u + 1));
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  arcs_ = std::move(arcs);
  offsets_.assign(n + 1, 0);
  adjacency_.clear();
  adjacency_.reserve(arcs_.size());
  for (const auto& [u, v] : arcs_) {
    ++offsets_[u + 1];
    adjacency_.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
}

Graph Graph::from_edges(std::vector<std::string> labels, std::span<const Arc> edges) {
  Graph g;
  g.labels_ = std::move(labels);
  std::vector<Arc> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  g.build(std::move(arcs));
  return g;
}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Arc> edges) {
  return from_edges(default_labels(vertex_count), edges);
}

Graph Graph::from_arcs(std::vector<std::string> labels, std::span<const Arc> arcs) {
  Graph g;
  g.labels_ = std::move(labels);
  g.build({arcs.begin(), arcs.end()});
  for (const auto& [u, v] : g.arcs_) {
    if (!g.has_arc(v, u)) {
      fail(ErrorCode::InvalidGraph, "arc (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                        ") has no reverse");
    }
  }
  return g;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (labels.size() != labels_.size()) fail(ErrorCode::InvalidGraph, "label count differs from vertex count");
  labels_ = std::move(labels);
}

std::optional<std::size_t> Graph::regular_valency() const {
  if (labels_.empty()) return std::nullopt;
  std::size_t k = valency(0);
  for (Vertex v = 1; v < labels_.size(); ++v) {
    if (valency(v) != k) return std::nullopt;
  }
  return k;
}

bool Graph::has_arc(Vertex u, Vertex v) const {
  if (u >= labels_.size()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> Graph::arc_index(Vertex u, Vertex v) const {
  if (u >= labels_.size()) return std::nullopt;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return offsets_[u] + static_cast<std::size_t>(it - nb.begin());
}

std::vector<Arc> Graph::edges() const {
  std::vector<Arc> result;
  for (const auto& a : arcs_) {
    if (a.first < a.second) result.push_back(a);
  }
  return result;
}

std::vector<std::uint32_t> Graph::components() const {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> comp(labels_.size(), kUnset);
  std::uint32_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < labels_.size(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : neighbors(u)) {
        if (comp[w] == kUnset) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool Graph::is_connected() const {
  auto comp = components();
  return std::all_of(comp.begin(), comp.end(), [](std::uint32_t c) { return c == 0; });
}

bool Graph::is_automorphism(const Permutation& p) const {
  if (p.degree() != labels_.size()) return false;
  for (const auto& [u, v] : arcs_) {
    if (!has_arc(p(u), p(v))) return false;
  }
  return true;
}

Graph Graph::induced_subgraph(std::span<const Vertex> vertices) const {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::string> labels;
  for (Vertex v : keep) labels.push_back(labels_.at(v));
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (has_arc(keep[i], keep[j])) arcs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return from_arcs(std::move(labels), arcs);
}

Graph complete_graph(std::size_t n) {
  std::vector<Arc> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Arc> edges;
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return Graph::from_edges(n, edges);
}

DirectedSubgraph::DirectedSubgraph(const Graph& host, std::vector<Vertex> vertices, std::vector<Arc> arcs) {
  for (const auto& [u, v] : arcs) {
    if (!host.has_arc(u, v)) {
      fail(ErrorCode::NotSubgraph, "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                       ") is not an arc of the host graph");
    }
    vertices.push_back(u);
    vertices.push_back(v);
  }
  for (Vertex v : vertices) {
    if (v >= host.vertex_count()) fail(ErrorCode::NotSubgraph, "vertex outside the host graph");
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  vertices_ = std::move(vertices);
  arcs_ = std::move(arcs);
}

DirectedSubgraph DirectedSubgraph::image(const Permutation& g) const {
  DirectedSubgraph result;
  for (Vertex v : vertices_) result.vertices_.push_back(g(v));
  for (const auto& [u, v] : arcs_) result.arcs_.emplace_back(g(u), g(v));
  std::sort(result.vertices_.begin(), result.vertices_.end());
  std::sort(result.arcs_.begin(), result.arcs_.end());
  return result;
}

std::string DirectedSubgraph::describe(const Graph& host) const {
  std::string out = "{";
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (i) out += ",";
    out += host.label(arcs_[i].first) + "->" + host.label(arcs_[i].second);
  }
  if (arcs_.empty()) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) out += (i ? "," : "") + host.label(vertices_[i]);
  }
  return out + "}";
}

Graph read_graph(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<std::string> labels;
  std::vector<Arc> edges;
  std::string line;
  int line_no = 0;
  auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
  auto vertex = [&](long long value) {
    if (value < 1 || static_cast<std::size_t>(value) > *n) {
      fail(ErrorCode::PointOutOfRange, where() + "vertex " + std::to_string(value) + " out of range");
    }
    return static_cast<Vertex>(value - 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    if (keyword == "vertices:") {
      long long count = -1;
      if (n || !(fields >> count) || count < 0) fail(ErrorCode::SyntaxError, where() + "bad vertices line");
      n = static_cast<std::size_t>(count);
      labels = default_labels(*n);
    } else if (!n) {
      fail(ErrorCode::SyntaxError, where() + "expected 'vertices: <n>' first");
    } else if (keyword == "label") {
      long long i = 0;
      if (!(fields >> i)) fail(ErrorCode::SyntaxError, where() + "bad label line");
      Vertex v = vertex(i);
      std::string text;
      std::getline(fields >> std::ws, text);
      while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.pop_back();
      if (text.empty()) fail(ErrorCode::SyntaxError, where() + "empty label");
      labels[v] = text;
    } else if (keyword == "edge") {
      long long u = 0, v = 0;
      std::string rest;
      if (!(fields >> u >> v) || (fields >> rest)) fail(ErrorCode::SyntaxError, where() + "bad edge line");
      edges.emplace_back(vertex(u), vertex(v));
    } else {
      fail(ErrorCode::SyntaxError, where() + "unknown keyword '" + keyword + "'");
    }
  }
  if (!n) fail(ErrorCode::SyntaxError, "missing 'vertices: <n>' line");
  return Graph::from_edges(std::move(labels), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& graph) {
  out << "vertices: " << graph.vertex_count() << '\n';
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    if (graph.label(v) != std::to_string(v + 1)) out << "label " << v + 1 << ' ' << graph.label(v) << '\n';
  }
  for (const auto& [u, v] : graph.edges()) out << "edge " << u + 1 << ' ' << v + 1 << '\n';
}

void write_dot(std::ostream& out, const Graph& graph, const std::string& name) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  out << "graph " << quote(name) << " {\n";
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    out << "  " << v + 1 << " [label=" << quote(graph.label(v)) << "];\n";
  }
  for (const auto& [u, v] : graph.edges()) out << "  " << u + 1 << " -- " << v + 1 << ";\n";
  out << "}\n";
}

}  // namespace sgk
