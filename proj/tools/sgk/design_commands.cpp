#include <sstream>

#include "commands.hpp"
#include "sgk/designs.hpp"
#include "sgk/error.hpp"
#include "sgk/isomorphism.hpp"
#include "sgk/quotients.hpp"
#include "sgk/transitivity.hpp"

namespace sgk::cli {

namespace {

Json params_json(const DesignParams& p) {
  return Json{{"v", p.v}, {"b", p.b}, {"k", p.k}, {"lambda", p.lambda}, {"m", p.m}};
}

void claim_double_count(Certificate& cert, const DesignParams& p) {
  bool ok = p.v * p.lambda == p.b * p.k;
  cert.claim("double_count", ok, ok ? Json() : params_json(p));
}

void require_degree(const GroupTable& g, std::size_t n, const char* what) {
  if (g.degree() != n) {
    fail(ErrorCode::DegreeMismatch, "group degree " + std::to_string(g.degree()) + " but " + std::to_string(n) +
                                        " " + what);
  }
}

// Uniform block size and point degree, with the first offender on failure.
bool claim_uniform(Certificate& cert, const IncidenceStructure& inc) {
  Json block;
  for (BlockId b = 1; b < inc.block_count(); ++b) {
    if (inc.block(b).size() != inc.block(0).size()) {
      block = Json{{"block", inc.block_labels()[b]}, {"size", inc.block(b).size()}, {"expected", inc.block(0).size()}};
      break;
    }
  }
  cert.claim("uniform_blocks", block.is_null(), block);
  Json point;
  auto degree0 = inc.point_count() ? inc.blocks_through(0).size() : 0;
  for (Point p = 1; p < inc.point_count(); ++p) {
    if (inc.blocks_through(p).size() != degree0) {
      point = Json{{"point", inc.point_labels()[p]}, {"degree", inc.blocks_through(p).size()}, {"expected", degree0}};
      break;
    }
  }
  cert.claim("uniform_points", point.is_null(), point);
  return block.is_null() && point.is_null();
}

Json polarity_json(const IncidenceStructure& inc, const Polarity& pol) {
  Json j = Json::object();
  for (Point p = 0; p < inc.point_count(); ++p) j[inc.point_labels()[p]] = inc.block_labels()[pol.point_map[p]];
  return j;
}

int design_from_graph_command(const Options& opt) {
  Certificate cert("design from-graph");
  require_option(opt.graph, "--graph");
  require_option(opt.group, "--group");
  auto graph = load_graph(cert, opt.graph);
  auto g = load_group(cert, opt.group);
  require_degree(g, graph.vertex_count(), "vertices");
  claim_symmetric(cert, graph, g);
  if (!cert.all_pass()) return finish(opt, cert, false);
  auto d = design_from_graph(graph, g);
  auto params = validate_design(d.design);
  cert.set("params", params_json(params));
  claim_double_count(cert, params);
  validate_polarity(d.design, g, d.polarity);
  cert.claim("canonical_polarity", true);
  cert.claim("flag_transitive", is_flag_transitive(d.design, g, polarity_block_action(d.design, g, d.polarity)));
  std::ostringstream text;
  write_design(text, d.design);
  emit_text(opt, text.str());
  return finish(opt, cert, false);
}

int design_validate_command(const Options& opt) {
  Certificate cert("design validate");
  require_option(opt.design, "--design");
  auto inc = load_design(cert, opt.design);
  cert.set("points", inc.point_count());
  cert.set("blocks", inc.block_count());
  if (!claim_uniform(cert, inc)) return finish(opt, cert, true);
  auto params = validate_design(inc);
  cert.set("params", params_json(params));
  claim_double_count(cert, params);
  if (!opt.group.empty()) {
    auto g = load_group(cert, opt.group);
    require_degree(g, inc.point_count(), "points");
    try {
      block_action(inc, g);
      cert.claim("automorphisms", true);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotAutomorphism) throw;
      cert.claim("automorphisms", false, Json{{"reason", e.what()}});
      return finish(opt, cert, true);
    }
    if (params.m == 1) {
      cert.claim("flag_transitive", is_flag_transitive(inc, g));
    } else {
      cert.set("flag_transitive", "depends on the block action (repeated blocks); see 'design polarities'");
    }
  }
  return finish(opt, cert, true);
}

struct PolarityGraphs {
  std::vector<Polarity> polarities;
  std::vector<std::optional<Graph>> graphs;  // nullopt when degenerate
  std::vector<int> iso_class;                // -1 when degenerate
};

PolarityGraphs all_polarity_graphs(const IncidenceStructure& inc, const GroupTable& g) {
  PolarityGraphs out;
  out.polarities = find_polarities(inc, g);
  std::vector<std::size_t> reps;
  for (const auto& pol : out.polarities) {
    try {
      out.graphs.push_back(graph_from_design(inc, g, pol));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateDesign) throw;
      out.graphs.push_back(std::nullopt);
      out.iso_class.push_back(-1);
      continue;
    }
    int cls = -1;
    for (std::size_t r = 0; r < reps.size() && cls < 0; ++r) {
      if (are_isomorphic(*out.graphs.back(), *out.graphs[reps[r]])) cls = static_cast<int>(r);
    }
    if (cls < 0) {
      cls = static_cast<int>(reps.size());
      reps.push_back(out.graphs.size() - 1);
    }
    out.iso_class.push_back(cls);
  }
  return out;
}

Json polarity_list(const IncidenceStructure& inc, const PolarityGraphs& pg) {
  Json list = Json::array();
  for (std::size_t i = 0; i < pg.polarities.size(); ++i) {
    Json e{{"index", i + 1}, {"map", polarity_json(inc, pg.polarities[i])}, {"degenerate", !pg.graphs[i]}};
    if (pg.graphs[i]) {
      e["edges"] = pg.graphs[i]->edge_count();
      e["isomorphism_class"] = pg.iso_class[i] + 1;
    }
    list.push_back(std::move(e));
  }
  return list;
}

int design_polarities_command(const Options& opt, bool build) {
  Certificate cert(build ? "design to-graph" : "design polarities");
  require_option(opt.design, "--design");
  require_option(opt.group, "--group");
  auto inc = load_design(cert, opt.design);
  auto g = load_group(cert, opt.group);
  require_degree(g, inc.point_count(), "points");
  auto pg = all_polarity_graphs(inc, g);
  cert.set("polarities", polarity_list(inc, pg));
  if (!build) return finish(opt, cert, true);

  cert.claim("polarity_exists", !pg.polarities.empty());
  if (pg.polarities.empty()) return finish(opt, cert, false);
  if (opt.polarity < 1 || static_cast<std::size_t>(opt.polarity) > pg.polarities.size()) {
    fail(ErrorCode::InvalidArgument, "--polarity must lie in 1.." + std::to_string(pg.polarities.size()));
  }
  std::size_t pick = static_cast<std::size_t>(opt.polarity - 1);
  if (!pg.graphs[pick]) fail(ErrorCode::DegenerateDesign, "polarity " + std::to_string(opt.polarity) + " is degenerate");
  const auto& graph = *pg.graphs[pick];
  const auto& pol = pg.polarities[pick];
  cert.set("polarity", opt.polarity);
  // Γ(D, ρ) has Γ(p) = ρ(p).
  Json off;
  for (Point p = 0; p < inc.point_count() && off.is_null(); ++p) {
    auto nb = graph.neighbors(p);
    if (std::vector<Point>(nb.begin(), nb.end()) != inc.block(pol.point_map[p])) off = Json{{"point", inc.point_labels()[p]}};
  }
  cert.claim("neighbourhoods_are_polar_blocks", off.is_null(), off);
  claim_symmetric(cert, graph, g);
  emit_graph(opt, graph, "design");
  return finish(opt, cert, false);
}

}  // namespace

int run_quotient(const Options& opt) {
  Certificate cert("quotient");
  require_option(opt.group, "--group");
  if (!opt.coarse.empty()) {
    require_option(opt.subgroup, "--subgroup");
    require_option(opt.involution, "--involution");
    auto g = load_group(cert, opt.group);
    auto h = parse_subgroup(cert, g, opt.subgroup);
    auto k = parse_subgroup(cert, g, opt.coarse, "coarse");
    auto r = quotient_as_coset_graph(g, h, parse_element(cert, g, opt.involution), k);
    cert.set("fine_vertices", r.fine.graph.vertex_count());
    cert.set("coarse_vertices", r.coarse.graph.vertex_count());
    cert.set("quotient_vertices", r.quotient.vertex_count());
    cert.claim("block_in_lattice", r.block_in_lattice);
    cert.claim("quotient_isomorphic_to_coarse", r.isomorphism.has_value());
    claim_symmetric(cert, r.coarse.graph, g, r.coarse.cosets.action(g), "coarse_");
    emit_graph(opt, r.quotient, "quotient");
    return finish(opt, cert, false);
  }

  require_option(opt.graph, "--graph");
  require_option(opt.blocks, "--blocks");
  auto graph = load_graph(cert, opt.graph);
  auto g = load_group(cert, opt.group);
  require_degree(g, graph.vertex_count(), "vertices");
  auto partition = load_blocks(cert, opt.blocks, graph.vertex_count());
  auto broken = invariance_witness(g, partition);
  cert.claim("blocks_invariant", broken.is_null(), broken);
  claim_symmetric(cert, graph, g);
  if (!cert.all_pass()) return finish(opt, cert, false);

  auto q = certify_quotient(graph, g, partition, opt.allow_trivial);
  cert.set("blocks", partition.block_count());
  cert.set("nontrivial", q.nontrivial);
  cert.set("blocks_independent", q.blocks_independent);
  cert.set("cover_class", q.cover ? Json(to_string(*q.cover)) : Json());
  if (auto k = q.quotient.regular_valency()) cert.set("quotient_valency", *k);
  if (q.design) {
    auto p = params_json(q.design->params);
    p["flag_transitive"] = q.design->flag_transitive;
    cert.set("design", p);
  }
  cert.claim("homomorphism_law", q.homomorphism_law);
  claim_symmetric(cert, q.quotient, g, block_action(g, partition), "quotient_");
  if (q.nontrivial && q.blocks_independent) {
    cert.claim("bipartite_all_isomorphic", q.bipartite_all_isomorphic);
    claim_double_count(cert, q.design->params);
  }
  emit_graph(opt, q.quotient, "quotient");
  return finish(opt, cert, false);
}

int run_design(const Options& opt) {
  if (opt.action == "from-graph") return design_from_graph_command(opt);
  if (opt.action == "validate") return design_validate_command(opt);
  if (opt.action == "polarities") return design_polarities_command(opt, false);
  if (opt.action == "to-graph") return design_polarities_command(opt, true);
  fail(ErrorCode::InvalidArgument, "unknown design action '" + opt.action + "'");
}

}  // namespace sgk::cli
