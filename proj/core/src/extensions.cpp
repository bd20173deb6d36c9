#include "sgk/extensions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sgk/error.hpp"
#include "sgk/isomorphism.hpp"
#include "sgk/quotients.hpp"

namespace sgk {

namespace {

std::uint32_t position_in(std::span<const Vertex> sorted, Vertex v) {
  return static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

}  // namespace

std::optional<std::vector<Vertex>> check_condition_pe(const Graph& graph, const GroupTable& group,
                                                      const BlockSystem& partition) {
  auto quotient = quotient_graph(graph, partition);
  if (quotient.arc_count() == 0) fail(ErrorCode::TrivialQuotient, "the quotient has no arcs");
  const auto& block = partition.block(0);
  auto nb = quotient.neighbors(0);
  if (block.size() != nb.size()) return std::nullopt;

  auto stab = setwise_stabilizer(group, block).as_table(group);
  PointAction on_block, on_neighbors;
  on_block.domain_size = block.size();
  on_neighbors.domain_size = nb.size();
  for (const auto& g : stab.elements()) {
    std::vector<Point> first, second;
    for (Vertex v : block) first.push_back(position_in(block, g(v)));
    for (Vertex c : nb) second.push_back(position_in(nb, partition.block_of(g(partition.block(c).front()))));
    on_block.images.push_back(std::move(first));
    on_neighbors.images.push_back(std::move(second));
  }
  auto eta = permutation_equivalent(stab, on_block, on_neighbors);
  if (!eta) return std::nullopt;
  std::vector<Vertex> rho;
  for (Point i : *eta) rho.push_back(nb[i]);
  return rho;
}

std::vector<Arc> pe_labelling(const Graph& graph, const GroupTable& group, const BlockSystem& partition,
                              const std::vector<Vertex>& rho) {
  const auto& block = partition.block(0);
  if (rho.size() != block.size()) fail(ErrorCode::InvalidArgument, "labelling must cover the base block");
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Arc> label(graph.vertex_count(), {kUnset, kUnset});
  std::vector<Vertex> queue;
  for (std::size_t i = 0; i < block.size(); ++i) {
    label[block[i]] = {0, rho[i]};
    queue.push_back(block[i]);
  }
  auto image_block = [&](const Permutation& g, Vertex b) { return partition.block_of(g(partition.block(b).front())); };
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex v = queue[i];
    for (const auto& g : group.generators()) {
      Vertex w = g(v);
      Arc image{image_block(g, label[v].first), image_block(g, label[v].second)};
      if (label[w].first == kUnset) {
        label[w] = image;
        queue.push_back(w);
      } else if (label[w] != image) {
        fail(ErrorCode::InvalidArgument, "labelling is not well defined at vertex " + graph.label(w));
      }
    }
  }
  for (const auto& l : label) {
    if (l.first == kUnset) fail(ErrorCode::InvalidArgument, "labelling does not reach every vertex");
  }
  return label;
}

bool check_three_arc_necessity(const Graph& graph, const Graph& quotient, const std::vector<Arc>& labelling) {
  auto k = quotient.regular_valency();
  if (!k || *k < 2) fail(ErrorCode::ValencyTooSmall, "the quotient valency is below 2");
  if (labelling.size() != graph.vertex_count()) fail(ErrorCode::InvalidArgument, "labelling must cover every vertex");
  for (const auto& [u, v] : graph.arcs()) {
    auto [b, c] = labelling[u];
    auto [d, e] = labelling[v];
    bool three_arc = quotient.has_arc(c, b) && quotient.has_arc(b, d) && quotient.has_arc(d, e) && c != d && b != e;
    if (!three_arc) return false;
  }
  return true;
}

bool check_three_arc_necessity(const Graph& graph, const GroupTable& group, const BlockSystem& partition,
                               const std::vector<Vertex>& rho) {
  return check_three_arc_necessity(graph, quotient_graph(graph, partition),
                                   pe_labelling(graph, group, partition, rho));
}

SubgraphGraph subgraph_graph(const Graph& graph, const GroupTable& group, const DirectedSubgraph& sub,
                             const Permutation& a) {
  if (group.degree() != graph.vertex_count()) fail(ErrorCode::DegreeMismatch, "group degree differs from the vertex count");
  ElementId a_id = group.id_of(a);
  if (a.is_identity() || !(a * a).is_identity()) fail(ErrorCode::NotInvolution, a.to_cycles() + " is not an involution");
  DirectedSubgraph base(graph, sub.vertices(), sub.arcs());

  SubgraphGraph result;
  std::map<DirectedSubgraph, std::uint32_t> index{{base, 0}};
  result.members.push_back(base);
  for (std::size_t i = 0; i < result.members.size(); ++i) {
    for (const auto& g : group.generators()) {
      auto image = result.members[i].image(g);
      if (index.emplace(image, static_cast<std::uint32_t>(result.members.size())).second) {
        result.members.push_back(std::move(image));
      }
    }
  }
  std::vector<std::uint32_t> image_of(group.order());
  std::vector<ElementId> stab;
  for (ElementId g = 0; g < group.order(); ++g) {
    image_of[g] = index.at(base.image(group.element(g)));
    if (image_of[g] == 0) stab.push_back(g);
  }
  result.stabilizer = Subgroup::from_ids(group, std::move(stab));
  if (image_of[a_id] == 0) fail(ErrorCode::InvalidArgument, a.to_cycles() + " fixes the subgraph");

  std::vector<Arc> arcs;
  for (ElementId g = 0; g < group.order(); ++g) {
    Vertex x = image_of[g], y = image_of[group.multiply(a_id, g)];
    arcs.emplace_back(x, y);
    arcs.emplace_back(y, x);
  }
  std::vector<std::string> labels;
  for (const auto& m : result.members) labels.push_back(m.describe(graph));
  result.graph = Graph::from_arcs(std::move(labels), arcs);

  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) {
    std::vector<Point> images;
    for (const auto& m : result.members) images.push_back(index.at(m.image(g)));
    gens.emplace_back(std::move(images));
  }
  result.group = generate_group(result.members.size(), std::move(gens));
  result.report = verify_action(result.graph, result.group);
  return result;
}

ArcPartitionExtension arc_partition_extension(const GroupTable& group, const Subgroup& h, const Subgroup& k,
                                              ElementId a) {
  require_subgroup_of(group, h);
  require_subgroup_of(group, k);
  if (k.contains(a)) fail(ErrorCode::DegenerateInvolution, group.element(a).to_cycles() + " lies in K");
  ArcPartitionExtension result;
  result.base = symmetric_coset_graph(group, h, a);
  auto arc_stab = intersect(group, conjugate(group, h, a), h);
  if (!arc_stab.is_subset_of(k) || !k.is_subset_of(h) || arc_stab.order() == k.order() || k.order() == h.order()) {
    fail(ErrorCode::NoStrictChain, "need a^-1 H a ∩ H < K < H with both inclusions strict (|a^-1 H a ∩ H| = " +
                                       std::to_string(arc_stab.order()) + ", |K| = " + std::to_string(k.order()) +
                                       ", |H| = " + std::to_string(h.order()) + ")");
  }
  result.expected = symmetric_coset_graph(group, k, a);
  result.r = h.order() / k.order();

  const Graph& gamma = result.base.graph;
  const auto& cosets = result.base.cosets;
  auto arc_image = [&](std::size_t arc, ElementId g) {
    const auto& [u, v] = gamma.arcs()[arc];
    return *gamma.arc_index(cosets.act(group, u, g), cosets.act(group, v, g));
  };
  std::size_t base_arc = *gamma.arc_index(0, cosets.coset_of[a]);
  std::vector<std::size_t> first;
  for (ElementId x : k.ids()) first.push_back(arc_image(base_arc, x));
  std::sort(first.begin(), first.end());
  first.erase(std::unique(first.begin(), first.end()), first.end());

  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> part_of(gamma.arc_count(), kUnset);
  for (std::size_t arc : first) part_of[arc] = 0;
  result.parts.push_back(first);
  for (std::size_t p = 0; p < result.parts.size(); ++p) {
    for (ElementId g : group.generator_ids()) {
      std::vector<std::size_t> image;
      for (std::size_t arc : result.parts[p]) image.push_back(arc_image(arc, g));
      std::sort(image.begin(), image.end());
      std::uint32_t target = part_of[image.front()];
      if (target == kUnset) {
        target = static_cast<std::uint32_t>(result.parts.size());
        for (std::size_t arc : image) {
          if (part_of[arc] != kUnset) fail(ErrorCode::NotInvariant, "arc parts are not permuted by the group");
          part_of[arc] = target;
        }
        result.parts.push_back(std::move(image));
      } else if (result.parts[target] != image) {
        fail(ErrorCode::NotInvariant, "arc parts are not permuted by the group");
      }
    }
  }

  std::vector<std::string> labels;
  std::vector<std::uint32_t> tails;
  for (const auto& part : result.parts) {
    std::string label = "{";
    for (std::size_t i = 0; i < part.size(); ++i) {
      const auto& [u, v] = gamma.arcs()[part[i]];
      label += (i ? "," : "") + gamma.label(u) + "->" + gamma.label(v);
    }
    labels.push_back(label + "}");
    tails.push_back(gamma.arcs()[part.front()].first);
  }
  std::vector<Arc> arcs;
  for (std::uint32_t p = 0; p < result.parts.size(); ++p) {
    for (std::size_t arc : result.parts[p]) {
      const auto& [u, v] = gamma.arcs()[arc];
      arcs.emplace_back(p, part_of[*gamma.arc_index(v, u)]);
    }
  }
  result.extension = Graph::from_arcs(std::move(labels), arcs);

  PointAction action;
  action.domain_size = result.parts.size();
  for (ElementId g = 0; g < group.order(); ++g) {
    std::vector<Point> images;
    for (const auto& part : result.parts) images.push_back(part_of[arc_image(part.front(), g)]);
    action.images.push_back(std::move(images));
  }
  result.report = verify_action(result.extension, group, action);
  result.tail_partition = BlockSystem::from_labels(tails);
  result.quotient = quotient_graph(result.extension, result.tail_partition);
  result.isomorphism = are_isomorphic(result.extension, result.expected.graph);
  result.quotient_isomorphism = are_isomorphic(result.quotient, gamma);

  auto val = gamma.regular_valency();
  auto ext_val = result.extension.regular_valency();
  result.counts_hold = val && ext_val && result.extension.vertex_count() == result.r * gamma.vertex_count() &&
                       *ext_val * result.r == *val && result.extension.edge_count() == gamma.edge_count();
  return result;
}

SplitExtension split_extension(GroupTable group, const Subgroup& normal, const BlockSystem& fibers) {
  require_subgroup_of(group, normal);
  if (fibers.domain_size() != group.degree()) fail(ErrorCode::InvalidPartition, "fibers must partition the domain");
  if (!is_normal(group, normal)) fail(ErrorCode::NotSemidirect, "N is not normal");
  for (const auto& g : group.generators()) (void)fibers.block_permutation(g);
  const auto& base = fibers.block(fibers.block_of(0));
  SplitExtension ext;
  ext.complement = setwise_stabilizer(group, base);
  std::vector<bool> hit(fibers.block_count(), false);
  for (ElementId m : normal.ids()) {
    auto f = fibers.block_of(group.element(m)(0));
    if (hit[f]) fail(ErrorCode::NotSemidirect, "N does not act regularly on the fibers");
    hit[f] = true;
  }
  if (normal.order() != fibers.block_count()) fail(ErrorCode::NotSemidirect, "N does not act regularly on the fibers");
  if (intersect(group, normal, ext.complement).order() != 1) {
    fail(ErrorCode::NotSemidirect, "N meets the fiber stabilizer nontrivially");
  }
  if (normal.order() * ext.complement.order() != group.order()) {
    fail(ErrorCode::NotSemidirect, "|N||H| differs from |G|");
  }
  ext.normal = normal;
  ext.fibers = fibers;
  ext.group = std::move(group);
  return ext;
}

std::optional<Subgroup> find_complement(const GroupTable& group, const Subgroup& normal, std::size_t closure_cap) {
  require_subgroup_of(group, normal);
  if (group.order() % normal.order() != 0) return std::nullopt;
  const std::size_t target = group.order() / normal.order();
  auto trivial = Subgroup::trivial(group);
  if (target == 1) return trivial;
  std::set<std::vector<ElementId>> seen{trivial.ids()};
  std::vector<std::vector<ElementId>> frontier{{}};  // generator lists
  std::size_t closures = 0;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    auto current = close_subgroup(group, frontier[i]);
    std::vector<bool> covered(group.order(), false);
    for (ElementId x : current) covered[x] = true;
    for (ElementId x = 1; x < group.order(); ++x) {
      if (covered[x] || normal.contains(x)) continue;
      if (++closures > closure_cap) {
        fail(ErrorCode::SubgroupEnumerationCapExceeded, "complement search exceeded " + std::to_string(closure_cap) +
                                                            " closures");
      }
      auto gens = frontier[i];
      gens.push_back(x);
      auto ids = close_subgroup(group, gens);
      for (ElementId k1 : current) {
        for (ElementId k2 : current) covered[group.multiply(group.multiply(k1, x), k2)] = true;
      }
      bool meets = std::any_of(ids.begin() + 1, ids.end(), [&](ElementId y) { return normal.contains(y); });
      if (meets || ids.size() > target || !seen.insert(ids).second) continue;
      if (ids.size() == target) return Subgroup::from_ids(group, ids);
      frontier.push_back(std::move(gens));
    }
  }
  return std::nullopt;
}

FlagOrbitalData extract_flag_orbital(const Graph& graph, const SplitExtension& ext) {
  const auto& group = ext.group;
  if (graph.vertex_count() != group.degree()) fail(ErrorCode::DegreeMismatch, "group degree differs from the vertex count");
  const auto& n_ids = ext.normal.ids();
  const auto& base = ext.fibers.block(ext.fibers.block_of(0));
  auto raw = quotient_graph(graph, ext.fibers);

  // Quotient vertex for N element position i is the fiber of 0^{m_i}.
  std::vector<std::uint32_t> fiber_of_pos(n_ids.size()), pos_of_fiber(n_ids.size());
  for (std::uint32_t i = 0; i < n_ids.size(); ++i) {
    fiber_of_pos[i] = ext.fibers.block_of(group.element(n_ids[i])(0));
    pos_of_fiber[fiber_of_pos[i]] = i;
  }
  auto pos_of = [&](ElementId m) {
    return static_cast<std::uint32_t>(std::lower_bound(n_ids.begin(), n_ids.end(), m) - n_ids.begin());
  };

  FlagOrbitalData data;
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < n_ids.size(); ++i) labels.push_back(raw.label(fiber_of_pos[i]));
  std::vector<Arc> arcs;
  for (const auto& [b, c] : raw.arcs()) arcs.emplace_back(pos_of_fiber[b], pos_of_fiber[c]);
  data.quotient = Graph::from_arcs(std::move(labels), arcs);

  std::vector<std::string> point_labels, block_labels;
  for (Vertex v : base) point_labels.push_back(graph.label(v));
  std::vector<std::vector<Point>> blocks;
  data.eta.assign(n_ids.size(), std::nullopt);
  for (Vertex j : data.quotient.neighbors(0)) {
    data.eta[j] = static_cast<BlockId>(blocks.size());
    block_labels.push_back(data.quotient.label(j));
    std::vector<Point> block;
    for (std::size_t x = 0; x < base.size(); ++x) {
      for (Vertex w : graph.neighbors(base[x])) {
        if (ext.fibers.block_of(w) == fiber_of_pos[j]) {
          block.push_back(static_cast<Point>(x));
          break;
        }
      }
    }
    blocks.push_back(std::move(block));
  }
  data.design = IncidenceStructure(std::move(point_labels), std::move(block_labels), std::move(blocks));

  std::set<std::pair<Flag, Flag>> pairs;
  for (const auto& [alpha, beta] : graph.arcs()) {
    ElementId mv = n_ids[pos_of_fiber[ext.fibers.block_of(alpha)]];
    ElementId mw = n_ids[pos_of_fiber[ext.fibers.block_of(beta)]];
    Vertex x = group.element(group.inverse(mv))(alpha);
    Vertex y = group.element(group.inverse(mw))(beta);
    auto s = data.eta[pos_of(group.multiply(mw, group.inverse(mv)))];
    auto t = data.eta[pos_of(group.multiply(mv, group.inverse(mw)))];
    if (!s || !t) fail(ErrorCode::InvalidGraph, "arc joins fibers that are not adjacent from the base");
    pairs.insert({{position_in(base, x), *s}, {position_in(base, y), *t}});
  }
  data.orbital.assign(pairs.begin(), pairs.end());
  return data;
}

Reconstruction flag_orbital_reconstruction(const SplitExtension& ext, const FlagOrbitalData& data) {
  const auto& group = ext.group;
  const auto& n_ids = ext.normal.ids();
  const auto& base = ext.fibers.block(ext.fibers.block_of(0));
  const std::size_t np = data.design.point_count();
  if (np != base.size() || data.quotient.vertex_count() != n_ids.size() || data.eta.size() != n_ids.size()) {
    fail(ErrorCode::InvalidArgument, "reconstruction data does not match the split extension");
  }
  std::set<std::pair<Flag, Flag>> orbital(data.orbital.begin(), data.orbital.end());
  for (const auto& [f1, f2] : data.orbital) {
    if (!orbital.count({f2, f1})) fail(ErrorCode::NotSelfPairedOrbital, "the flag orbital is not self-paired");
  }
  auto pos_of = [&](ElementId m) {
    return static_cast<std::uint32_t>(std::lower_bound(n_ids.begin(), n_ids.end(), m) - n_ids.begin());
  };

  Reconstruction result;
  std::vector<std::string> labels;
  for (std::size_t m = 0; m < n_ids.size(); ++m) {
    for (std::size_t x = 0; x < np; ++x) {
      labels.push_back("(" + data.design.point_labels()[x] + "," + data.quotient.label(static_cast<Vertex>(m)) + ")");
      result.to_omega.push_back(group.element(n_ids[m])(base[x]));
    }
  }
  std::vector<Arc> arcs;
  for (const auto& [v, w] : data.quotient.arcs()) {
    ElementId mv = n_ids[v], mw = n_ids[w];
    auto s = data.eta[pos_of(group.multiply(mw, group.inverse(mv)))];
    auto t = data.eta[pos_of(group.multiply(mv, group.inverse(mw)))];
    if (!s || !t) fail(ErrorCode::InvalidArgument, "eta is undefined on a quotient arc");
    for (Point x = 0; x < np; ++x) {
      if (!data.design.incident(x, *s)) continue;
      for (Point y = 0; y < np; ++y) {
        if (data.design.incident(y, *t) && orbital.count({{x, *s}, {y, *t}})) {
          arcs.emplace_back(static_cast<Vertex>(v * np + x), static_cast<Vertex>(w * np + y));
        }
      }
    }
  }
  result.graph = Graph::from_arcs(std::move(labels), arcs);
  return result;
}

}  // namespace sgk
