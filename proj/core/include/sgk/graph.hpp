#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sgk/permutation.hpp"

namespace sgk {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

// Simple loopless undirected graph, stored as a symmetric arc set.
// Neighbour lists are sorted; arcs are numbered in lexicographic order.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph with labels "1".."n".
  explicit Graph(std::size_t vertex_count);

  // Each edge {u,v} contributes both arcs; duplicates are merged.
  // Throws InvalidGraph on loops or out-of-range endpoints.
  static Graph from_edges(std::vector<std::string> labels, std::span<const Arc> edges);
  static Graph from_edges(std::size_t vertex_count, std::span<const Arc> edges);
  // Throws InvalidGraph unless the arc set is symmetric and loopless.
  static Graph from_arcs(std::vector<std::string> labels, std::span<const Arc> arcs);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  std::size_t edge_count() const noexcept { return arcs_.size() / 2; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_[v]; }
  void set_labels(std::vector<std::string> labels);

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t valency(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  // Common valency, or nullopt for irregular (or empty) graphs.
  std::optional<std::size_t> regular_valency() const;

  bool has_arc(Vertex u, Vertex v) const;
  // Arcs in lexicographic order; arc id i is arcs()[i].
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::optional<std::size_t> arc_index(Vertex u, Vertex v) const;
  // Each edge once, as (u,v) with u < v.
  std::vector<Arc> edges() const;

  bool is_connected() const;
  // Component index per vertex, numbered by least vertex.
  std::vector<std::uint32_t> components() const;

  // Whether p (of degree vertex_count) maps arcs onto arcs.
  bool is_automorphism(const Permutation& p) const;

  Graph induced_subgraph(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.arcs_ == b.arcs_ && a.labels_ == b.labels_; }

 private:
  void build(std::vector<Arc> arcs);

  std::vector<std::string> labels_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

// A set of vertices and arcs of a host graph; arcs need not be symmetric.
class DirectedSubgraph {
 public:
  DirectedSubgraph() = default;
  // Endpoints are added to the vertex set. Throws NotSubgraph when an arc is
  // missing from the host.
  DirectedSubgraph(const Graph& host, std::vector<Vertex> vertices, std::vector<Arc> arcs);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  // Image under a vertex permutation.
  DirectedSubgraph image(const Permutation& g) const;
  std::string describe(const Graph& host) const;

  friend bool operator==(const DirectedSubgraph&, const DirectedSubgraph&) = default;
  friend auto operator<=>(const DirectedSubgraph&, const DirectedSubgraph&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
};

// Graph file: "vertices: <n>", optional "label <i> <text>", then "edge <u> <v>"
// (1-based). Blank lines and '#' comments are ignored.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& graph);
void write_dot(std::ostream& out, const Graph& graph, const std::string& name = "G");

}  // namespace sgk
