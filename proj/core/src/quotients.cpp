#include "sgk/quotients.hpp"

#include <algorithm>

#include "sgk/error.hpp"
#include "sgk/isomorphism.hpp"

namespace sgk {

namespace {

void require_partition_of(const Graph& graph, const BlockSystem& partition) {
  if (partition.domain_size() != graph.vertex_count()) {
    fail(ErrorCode::InvalidPartition, "partition domain differs from the vertex count");
  }
}

}  // namespace

Graph quotient_graph(const Graph& graph, const BlockSystem& partition) {
  require_partition_of(graph, partition);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < partition.block_count(); ++i) {
    labels.push_back("B" + std::to_string(i + 1) + ":" + graph.label(partition.block(i).front()));
  }
  std::vector<Arc> arcs;
  for (const auto& [u, v] : graph.arcs()) {
    auto bu = partition.block_of(u), bv = partition.block_of(v);
    if (bu != bv) arcs.emplace_back(bu, bv);
  }
  return Graph::from_arcs(std::move(labels), arcs);
}

Graph quotient_graph(const Graph& graph, const GroupTable& group, const BlockSystem& partition) {
  require_partition_of(graph, partition);
  for (const auto& g : group.generators()) (void)partition.block_permutation(g);
  if (!verify_action(graph, group).symmetric()) {
    fail(ErrorCode::NotSymmetric, "the group does not act symmetrically on the graph");
  }
  return quotient_graph(graph, partition);
}

PointAction block_action(const GroupTable& group, const BlockSystem& partition) {
  PointAction action;
  action.domain_size = partition.block_count();
  action.images.reserve(group.order());
  for (const auto& g : group.elements()) {
    auto p = partition.block_permutation(g);
    action.images.emplace_back(p.images().begin(), p.images().end());
  }
  return action;
}

Graph induced_bipartite(const Graph& graph, const BlockSystem& partition, std::uint32_t b, std::uint32_t c) {
  require_partition_of(graph, partition);
  if (b >= partition.block_count() || c >= partition.block_count() || b == c) {
    fail(ErrorCode::NotQuotientArc, "blocks are not two distinct blocks of the partition");
  }
  std::vector<Vertex> keep;
  for (Vertex u : partition.block(b)) {
    for (Vertex w : graph.neighbors(u)) {
      if (partition.block_of(w) == c) {
        keep.push_back(u);
        keep.push_back(w);
      }
    }
  }
  if (keep.empty()) {
    fail(ErrorCode::NotQuotientArc, "blocks " + std::to_string(b + 1) + " and " + std::to_string(c + 1) +
                                        " are not adjacent in the quotient");
  }
  // Edges inside a block are not part of Γ[B,C].
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::string> labels;
  for (Vertex v : keep) labels.push_back(graph.label(v));
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (partition.block_of(keep[i]) != partition.block_of(keep[j]) && graph.has_arc(keep[i], keep[j])) {
        arcs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph::from_arcs(std::move(labels), arcs);
}

std::string to_string(CoverClass cls) {
  switch (cls) {
    case CoverClass::Cover: return "cover";
    case CoverClass::MulticoverProper: return "multicover_proper";
    case CoverClass::Neither: return "neither";
  }
  return "neither";
}

CoverClass cover_class(const Graph& graph, const BlockSystem& partition) {
  auto quotient = quotient_graph(graph, partition);
  if (quotient.arc_count() == 0) fail(ErrorCode::TrivialQuotient, "the quotient has no arcs");
  bool multiple = false;
  std::vector<std::size_t> count(partition.block_count(), 0);
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    std::fill(count.begin(), count.end(), 0);
    for (Vertex w : graph.neighbors(v)) ++count[partition.block_of(w)];
    for (Vertex c : quotient.neighbors(partition.block_of(v))) {
      if (count[c] == 0) return CoverClass::Neither;
      if (count[c] > 1) multiple = true;
    }
  }
  return multiple ? CoverClass::MulticoverProper : CoverClass::Cover;
}

CrossSectionDesign cross_section_design(const Graph& graph, const GroupTable& group, const BlockSystem& partition,
                                        std::uint32_t b) {
  auto quotient = quotient_graph(graph, partition);
  if (quotient.arc_count() == 0) fail(ErrorCode::TrivialQuotient, "the quotient has no arcs");
  if (b >= partition.block_count()) fail(ErrorCode::InvalidArgument, "block index out of range");
  const auto& points = partition.block(b);
  std::vector<std::string> point_labels, block_labels;
  for (Vertex v : points) point_labels.push_back(graph.label(v));
  std::vector<std::vector<Point>> blocks;
  for (Vertex c : quotient.neighbors(b)) {
    block_labels.push_back(quotient.label(c));
    std::vector<Point> block;
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (Vertex w : graph.neighbors(points[i])) {
        if (partition.block_of(w) == c) {
          block.push_back(static_cast<Point>(i));
          break;
        }
      }
    }
    blocks.push_back(std::move(block));
  }
  CrossSectionDesign result{IncidenceStructure(std::move(point_labels), std::move(block_labels), std::move(blocks)),
                            {}, false};
  result.params = validate_design(result.design);

  // Flag-transitivity of G_B: flags (α, C) with α ∈ B adjacent to C.
  auto stab = setwise_stabilizer(group, points);
  auto flags = result.design.flags();
  auto nb = quotient.neighbors(b);
  std::vector<bool> hit(flags.size(), false);
  std::size_t reached = 0;
  const auto& [p0, c0] = flags.front();
  for (ElementId g : stab.ids()) {
    const auto& perm = group.element(g);
    Vertex alpha = perm(points[p0]);
    Vertex c = partition.block_of(perm(partition.block(nb[c0]).front()));
    std::pair<Point, BlockId> image{
        static_cast<Point>(std::lower_bound(points.begin(), points.end(), alpha) - points.begin()),
        static_cast<BlockId>(std::lower_bound(nb.begin(), nb.end(), c) - nb.begin())};
    auto j = static_cast<std::size_t>(std::lower_bound(flags.begin(), flags.end(), image) - flags.begin());
    if (j < flags.size() && flags[j] == image && !hit[j]) {
      hit[j] = true;
      ++reached;
    }
  }
  result.flag_transitive = reached == flags.size();
  return result;
}

QuotientCertificate certify_quotient(const Graph& graph, const GroupTable& group, const BlockSystem& partition,
                                     bool allow_trivial) {
  QuotientCertificate cert;
  cert.quotient = quotient_graph(graph, group, partition);
  cert.partition = partition;
  cert.nontrivial = cert.quotient.arc_count() > 0;
  if (!cert.nontrivial && !allow_trivial) fail(ErrorCode::TrivialQuotient, "the quotient has no arcs");

  cert.blocks_independent = true;
  for (const auto& [u, v] : graph.arcs()) {
    if (partition.block_of(u) == partition.block_of(v)) cert.blocks_independent = false;
  }
  auto action = block_action(group, partition);
  cert.quotient_report = verify_action(cert.quotient, group, action);
  cert.homomorphism_law = true;
  for (ElementId g : group.generator_ids()) {
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
      if (partition.block_of(group.element(g)(v)) != action.apply(g, partition.block_of(v))) {
        cert.homomorphism_law = false;
      }
    }
  }
  if (!cert.nontrivial || !cert.blocks_independent) return cert;

  cert.cover = cover_class(graph, partition);
  const auto& [b0, c0] = cert.quotient.arcs().front();
  cert.bipartite_pattern = induced_bipartite(graph, partition, b0, c0);
  cert.bipartite_all_isomorphic = true;
  for (const auto& [b, c] : cert.quotient.arcs()) {
    if (!are_isomorphic(cert.bipartite_pattern, induced_bipartite(graph, partition, b, c))) {
      cert.bipartite_all_isomorphic = false;
      break;
    }
  }
  cert.design = cross_section_design(graph, group, partition, 0);
  return cert;
}

CosetQuotient quotient_as_coset_graph(const GroupTable& group, const Subgroup& h, ElementId a, const Subgroup& k) {
  require_subgroup_of(group, h);
  require_subgroup_of(group, k);
  if (!h.is_subset_of(k) || h.order() == k.order() || k.order() == group.order()) {
    fail(ErrorCode::NotNested, "need H < K < G with both inclusions strict");
  }
  if (k.contains(a)) fail(ErrorCode::DegenerateQuotient, "a lies in K, so the quotient has valency one");
  CosetQuotient result;
  result.fine = symmetric_coset_graph(group, h, a);
  result.coarse = symmetric_coset_graph(group, k, a);

  // Coset Hx lies in block Kx.
  const auto& fine = result.fine.cosets;
  const auto& coarse = result.coarse.cosets;
  std::vector<std::uint32_t> labels(fine.size());
  for (std::uint32_t c = 0; c < fine.size(); ++c) labels[c] = coarse.coset_of[fine.representatives[c]];
  result.partition = BlockSystem::from_labels(labels);

  // The block containing H is H-cosets inside K; it must match K's entry in
  // the lattice of the coset action.
  auto induced = fine.action(group);
  std::vector<Point> block;
  for (ElementId x : k.ids()) block.push_back(fine.coset_of[x]);
  std::sort(block.begin(), block.end());
  block.erase(std::unique(block.begin(), block.end()), block.end());
  result.block_in_lattice = block == result.partition.block(result.partition.block_of(0));
  for (ElementId g : group.generator_ids()) {
    std::vector<bool> in(fine.size(), false);
    for (Point p : block) in[p] = true;
    bool stable = true, disjoint = true;
    for (Point p : block) {
      Point q = induced.apply(g, p);
      if (in[q]) disjoint = false; else stable = false;
    }
    if (!stable && !disjoint) result.block_in_lattice = false;
  }

  result.quotient = quotient_graph(result.fine.graph, result.partition);
  result.isomorphism = are_isomorphic(result.quotient, result.coarse.graph);
  return result;
}

}  // namespace sgk
