#include <sstream>

#include "commands.hpp"
#include "sgk/error.hpp"
#include "sgk/extensions.hpp"
#include "sgk/isomorphism.hpp"
#include "sgk/semidirect.hpp"
#include "sgk/three_arc.hpp"
#include "sgk/transitivity.hpp"

namespace sgk::cli {

namespace {

Vertex parse_vertex(const std::string& token, std::size_t n) {
  std::size_t used = 0;
  long long value = -1;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) fail(ErrorCode::SyntaxError, "expected a vertex, got '" + token + "'");
  if (value < 1 || static_cast<std::size_t>(value) > n) {
    fail(ErrorCode::PointOutOfRange, "vertex " + token + " outside 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(value - 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    if (first != std::string::npos) out.push_back(item.substr(first, last - first + 1));
  }
  return out;
}

// "1>2, 2>3, 3>1"
std::vector<Arc> parse_arcs(const std::string& text, std::size_t n) {
  std::vector<Arc> arcs;
  for (const auto& item : split(text, ',')) {
    auto gt = item.find('>');
    if (gt == std::string::npos) fail(ErrorCode::SyntaxError, "arc '" + item + "' is not of the form u>v");
    auto parts = split(item.substr(0, gt), ' ');
    auto rest = split(item.substr(gt + 1), ' ');
    if (parts.size() != 1 || rest.size() != 1) fail(ErrorCode::SyntaxError, "arc '" + item + "' is not of the form u>v");
    arcs.emplace_back(parse_vertex(parts[0], n), parse_vertex(rest[0], n));
  }
  if (arcs.empty()) fail(ErrorCode::SyntaxError, "no arcs given");
  return arcs;
}

void require_degree(const GroupTable& g, const Graph& graph) {
  if (g.degree() != graph.vertex_count()) {
    fail(ErrorCode::DegreeMismatch, "group degree " + std::to_string(g.degree()) + " but " +
                                        std::to_string(graph.vertex_count()) + " vertices");
  }
}

Json walk_json(const Graph& graph, const std::vector<Vertex>& walk) {
  Json j = Json::array();
  for (Vertex v : walk) j.push_back(graph.label(v));
  return j;
}

int extend_via_arcs(const Options& opt) {
  Certificate cert("extend arcs");
  require_option(opt.subgroup, "--subgroup");
  require_option(opt.coarse, "--intermediate");
  require_option(opt.involution, "--involution");
  auto g = load_group(cert, opt.group);
  auto h = parse_subgroup(cert, g, opt.subgroup);
  auto k = parse_subgroup(cert, g, opt.coarse, "intermediate");
  auto e = arc_partition_extension(g, h, k, parse_element(cert, g, opt.involution));
  cert.set("r", e.r);
  cert.set("base_vertices", e.base.graph.vertex_count());
  cert.set("vertices", e.extension.vertex_count());
  cert.set("base_edges", e.base.graph.edge_count());
  cert.set("edges", e.extension.edge_count());
  if (auto val = e.extension.regular_valency()) cert.set("valency", *val);
  cert.claim("counting_identities", e.counts_hold);
  cert.claim("isomorphic_to_expected", e.isomorphism.has_value());
  cert.claim("quotient_is_base", e.quotient_isomorphism.has_value());
  cert.claim("symmetric", e.report.symmetric());
  emit_graph(opt, e.extension, "extension");
  return finish(opt, cert, false);
}

int extend_via_flags(const Options& opt) {
  Certificate cert("extend flags");
  require_option(opt.graph, "--graph");
  require_option(opt.normal, "--normal");
  require_option(opt.blocks, "--fibers");
  auto graph = load_graph(cert, opt.graph);
  auto g = load_group(cert, opt.group);
  require_degree(g, graph);
  auto normal = parse_subgroup(cert, g, opt.normal, "normal");
  auto fibers = load_blocks(cert, opt.blocks, graph.vertex_count(), "fibers");
  auto ext = split_extension(g, normal, fibers);
  auto data = extract_flag_orbital(graph, ext);
  auto rec = flag_orbital_reconstruction(ext, data);
  cert.set("normal_order", ext.normal.order());
  cert.set("complement_order", ext.complement.order());
  cert.set("complement_generators", generators_json(g, ext.complement));
  cert.set("quotient_vertices", data.quotient.vertex_count());
  cert.set("orbital_size", data.orbital.size());
  cert.set("vertices", rec.graph.vertex_count());

  // (x, m) -> x^m must carry the rebuilt arcs exactly onto the input arcs.
  Json off;
  std::vector<bool> hit(graph.vertex_count(), false);
  for (Point w : rec.to_omega) {
    if (w >= hit.size() || hit[w]) off = Json{{"reason", "not a bijection"}};
    if (off.is_null()) hit[w] = true;
  }
  if (off.is_null()) {
    for (const auto& [u, v] : rec.graph.arcs()) {
      if (!graph.has_arc(rec.to_omega[u], rec.to_omega[v])) {
        off = Json{{"arc", {rec.graph.label(u), rec.graph.label(v)}}};
        break;
      }
    }
    if (off.is_null() && rec.graph.arc_count() != graph.arc_count()) {
      off = Json{{"arcs", rec.graph.arc_count()}, {"expected", graph.arc_count()}};
    }
  }
  cert.claim("reconstruction_matches_input", off.is_null(), off);
  cert.claim("reconstruction_isomorphic", are_isomorphic(rec.graph, graph).has_value());
  emit_graph(opt, rec.graph, "reconstruction");
  return finish(opt, cert, false);
}

}  // namespace

int run_threearc(const Options& opt) {
  Certificate cert("threearc");
  auto graph = load_graph(cert, opt.graph);
  auto g = load_group(cert, opt.group);
  require_degree(g, graph);
  claim_symmetric(cert, graph, g);
  if (!cert.all_pass()) return finish(opt, cert, true);
  auto orbs = three_arc_orbits(graph, g);
  Json list = Json::array();
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    list.push_back(Json{{"index", i + 1},
                        {"size", orbs[i].arcs.size()},
                        {"self_paired", orbs[i].self_paired},
                        {"paired_with", orbs[i].paired_with + 1},
                        {"first", walk_json(graph, orbs[i].arcs.front())}});
  }
  cert.set("orbits", list);
  if (opt.orbit_index == 0) return finish(opt, cert, true);
  if (opt.orbit_index < 1 || static_cast<std::size_t>(opt.orbit_index) > orbs.size()) {
    fail(ErrorCode::InvalidArgument, "--orbit-index must lie in 1.." + std::to_string(orbs.size()));
  }
  const auto& orbit = orbs[opt.orbit_index - 1];
  cert.claim("self_paired", orbit.self_paired,
             orbit.self_paired ? Json() : Json{{"paired_with", orbit.paired_with + 1}});
  if (!orbit.self_paired) return finish(opt, cert, false);

  auto t = three_arc_graph(graph, g, orbit);
  if (t.reverse_adjacent) cert.warn("some arc is adjacent to its own reverse in the chosen orbit");
  cert.set("vertices", t.graph.vertex_count());
  if (auto k = t.graph.regular_valency()) cert.set("valency", *k);
  cert.set("reverse_adjacent", t.reverse_adjacent);
  cert.set("cover_class", t.certificate.cover ? Json(to_string(*t.certificate.cover)) : Json());
  claim_symmetric(cert, t.graph, t.group, "three_arc_");
  cert.claim("quotient_is_base", t.quotient_isomorphism.has_value());
  auto qk = t.certificate.quotient.regular_valency();
  if (t.certificate.nontrivial && qk && *qk >= 2) {
    auto rho = check_condition_pe(t.graph, t.group, t.partition);
    cert.claim("condition_pe", rho.has_value());
    if (rho) cert.claim("three_arc_necessity", check_three_arc_necessity(t.graph, t.group, t.partition, *rho));
  }
  emit_graph(opt, t.graph, "threearc");
  return finish(opt, cert, false);
}

int run_biggs(const Options& opt) {
  Certificate cert("biggs");
  auto graph = load_graph(cert, opt.graph);
  auto g = load_group(cert, opt.group);
  require_degree(g, graph);
  auto n = load_group(cert, opt.n_group, "n");
  auto sd = [&] {
    if (opt.twist.empty()) return SemidirectGroup::direct(n, g);
    cert.input_file("twist", opt.twist);
    return SemidirectGroup::build(n, g, read_twist_file(opt.twist, n, g));
  }();
  cert.input_file("chain", opt.chain);
  auto chain = propagate_nchain(graph, sd, read_chain_file(opt.chain, graph, n));
  validate_nchain(graph, sd, chain);
  auto b = biggs_cover(graph, sd, chain);

  cert.set("group_order", b.group.order());
  cert.set("vertices", b.cover.vertex_count());
  cert.set("edges", b.cover.edge_count());
  cert.set("connected", b.cover.is_connected());
  cert.set("cover_class", b.certificate.cover ? Json(to_string(*b.certificate.cover)) : Json());
  cert.set("twist_trivial", sd.twist_is_trivial());

  Json off;
  for (Vertex v = 0; v < b.cover.vertex_count(); ++v) {
    Vertex base = b.fibers.block_of(v);
    if (b.cover.valency(v) != graph.valency(base)) {
      off = Json{{"vertex", b.cover.label(v)}, {"valency", b.cover.valency(v)}, {"base", graph.valency(base)}};
      break;
    }
  }
  cert.claim("valency_preserved", off.is_null(), off);
  cert.claim("fibers_are_matchings", b.fibers_are_matchings);
  cert.claim("quotient_is_base", b.quotient_isomorphism.has_value());
  cert.claim("normal_part_fiber_transitive", b.normal_part_fiber_transitive);
  claim_symmetric(cert, b.cover, b.group, "cover_");
  emit_graph(opt, b.cover, "biggs");
  return finish(opt, cert, false);
}

int run_subgraph_graph(const Options& opt) {
  Certificate cert("subgraph-graph");
  auto graph = load_graph(cert, opt.graph);
  auto g = load_group(cert, opt.group);
  require_degree(g, graph);
  cert.input_text("arcs", opt.arcs);
  auto arcs = parse_arcs(opt.arcs, graph.vertex_count());
  std::vector<Vertex> vertices;
  if (!opt.vertices.empty()) {
    cert.input_text("vertices", opt.vertices);
    for (const auto& item : split(opt.vertices, ',')) vertices.push_back(parse_vertex(item, graph.vertex_count()));
  }
  DirectedSubgraph sub(graph, vertices, arcs);
  cert.input_text("involution", opt.involution);
  auto sg = subgraph_graph(graph, g, sub, parse_cycles(opt.involution, g.degree()));
  cert.set("vertices", sg.graph.vertex_count());
  cert.set("edges", sg.graph.edge_count());
  if (auto k = sg.graph.regular_valency()) cert.set("valency", *k);
  cert.set("stabilizer_order", sg.stabilizer.order());
  cert.set("arc_transitive", sg.report.arc_transitive);
  Json members = Json::array();
  for (const auto& m : sg.members) members.push_back(m.describe(graph));
  cert.set("members", members);
  claim_symmetric(cert, sg.graph, sg.group);
  emit_graph(opt, sg.graph, "subgraph");
  return finish(opt, cert, false);
}

int run_extend(const Options& opt) {
  if (opt.via == "arcs") return extend_via_arcs(opt);
  if (opt.via == "flags") return extend_via_flags(opt);
  fail(ErrorCode::InvalidArgument, "--via must be arcs or flags");
}

}  // namespace sgk::cli
