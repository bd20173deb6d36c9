#include <set>
#include <sstream>

#include "commands.hpp"
#include "sgk/coset_graphs.hpp"
#include "sgk/error.hpp"
#include "sgk/transitivity.hpp"

namespace sgk::cli {

namespace {

Json orbits_json(const GroupTable& g) {
  Json j = Json::array();
  for (const auto& o : orbits(g)) j.push_back(points_json(o));
  return j;
}

Point parse_point(const std::string& text, std::size_t degree) {
  std::size_t used = 0;
  long long value = -1;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::SyntaxError, "expected a point, got '" + text + "'");
  }
  if (used != text.size()) fail(ErrorCode::SyntaxError, "expected a point, got '" + text + "'");
  if (value < 1 || static_cast<std::size_t>(value) > degree) {
    fail(ErrorCode::PointOutOfRange, "point " + text + " outside 1.." + std::to_string(degree));
  }
  return static_cast<Point>(value - 1);
}

}  // namespace

int run_group(const Options& opt) {
  Certificate cert("group");
  auto g = load_group(cert, opt.group);
  cert.set("degree", g.degree());
  cert.set("order", g.order());
  Json gens = Json::array();
  for (const auto& s : g.generators()) gens.push_back(s.to_cycles());
  cert.set("generators", gens);
  cert.set("orbits", orbits_json(g));
  cert.set("transitive", g.degree() > 0 && orbit(g, 0).size() == g.degree());

  std::uint64_t factorial = 1 % g.order();
  for (std::uint64_t i = 2; i <= g.degree(); ++i) factorial = factorial * i % g.order();
  cert.claim("order_divides_factorial", factorial == 0, factorial ? Json{{"order", g.order()}} : Json());
  cert.claim("identity_first", g.element(0).is_identity());
  Json open;
  for (ElementId x = 0; x < g.order() && open.is_null(); ++x) {
    for (const auto& s : g.generators()) {
      if (!g.contains(g.element(x) * s)) {
        open = Json{{"element", g.element(x).to_cycles()}, {"generator", s.to_cycles()}};
        break;
      }
    }
  }
  cert.claim("closed", open.is_null(), open);

  if (!opt.subgroup.empty()) {
    auto h = parse_subgroup(cert, g, opt.subgroup);
    auto c = core(g, h);
    cert.set("subgroup", Json{{"order", h.order()},
                              {"index", g.order() / h.order()},
                              {"generators", generators_json(g, h)},
                              {"normal", is_normal(g, h)},
                              {"core_order", c.order()}});
    auto kernel = right_cosets(g, h).kernel(g);
    cert.claim("core_is_kernel", c.ids() == kernel,
               c.ids() == kernel ? Json() : Json{{"core_order", c.order()}, {"kernel_order", kernel.size()}});
  }
  if (opt.elements) {
    Json all = Json::array();
    for (const auto& e : g.elements()) all.push_back(e.to_cycles());
    cert.set("elements", all);
  }
  return finish(opt, cert, true);
}

int run_cosetgraph(const Options& opt) {
  Certificate cert("cosetgraph");
  auto g = load_group(cert, opt.group);
  auto h = parse_subgroup(cert, g, opt.subgroup);

  if (!opt.connectors.empty()) {
    cert.input_text("connectors", opt.connectors);
    std::set<ElementId> d;
    for (const auto& x : parse_permutation_list(opt.connectors, g.degree())) {
      for (ElementId y : double_coset(g, h, g.id_of(x))) d.insert(y);
    }
    std::vector<ElementId> connector(d.begin(), d.end());
    auto graph = sabidussi_graph(g, h, connector);
    auto cosets = right_cosets(g, h);
    auto report = verify_action(graph, g, cosets.action(g));
    cert.set("vertices", graph.vertex_count());
    cert.set("connector_size", connector.size());
    if (auto k = graph.regular_valency()) cert.set("valency", *k);
    cert.set("connected", graph.is_connected());
    cert.set("arc_transitive", report.arc_transitive);
    cert.set("s_arc_transitive_up_to", report.s_arc_transitive_up_to);
    claim_symmetric(cert, graph, g, cosets.action(g));
    emit_graph(opt, graph, "Sab");
    return finish(opt, cert, false);
  }

  if (opt.involution.empty()) fail(ErrorCode::InvalidArgument, "give --involution or --connectors");
  auto r = symmetric_coset_graph(g, h, parse_element(cert, g, opt.involution));
  cert.set("vertices", r.graph.vertex_count());
  cert.set("valency", r.valency_formula);
  cert.set("arc_stabilizer_order", r.arc_stabilizer_order);
  cert.set("kernel_order", r.kernel_order);
  cert.set("connected", r.connected);
  cert.set("generates", r.generates);
  cert.set("vertex_transitive", r.report.vertex_transitive);
  cert.set("arc_transitive", r.report.arc_transitive);
  cert.set("locally_transitive", r.report.locally_transitive);
  cert.set("s_arc_transitive_up_to", r.report.s_arc_transitive_up_to);

  Json off;
  for (Vertex v = 0; v < r.graph.vertex_count(); ++v) {
    if (r.graph.valency(v) != r.valency_formula) {
      off = Json{{"vertex", r.graph.label(v)}, {"valency", r.graph.valency(v)}, {"formula", r.valency_formula}};
      break;
    }
  }
  cert.claim("valency_formula", off.is_null(), off);
  cert.claim("arc_stabilizer", r.arc_stabilizer_matches,
             r.arc_stabilizer_matches ? Json() : Json{{"measured", r.arc_stabilizer_order}});
  claim_symmetric(cert, r.graph, g, r.cosets.action(g));
  cert.claim("connected_iff_generates", r.connected == r.generates,
             r.connected == r.generates ? Json() : Json{{"connected", r.connected}, {"generates", r.generates}});
  emit_graph(opt, r.graph, "Sab");
  return finish(opt, cert, false);
}

int run_orbitals(const Options& opt) {
  Certificate cert("orbitals");
  auto g = load_group(cert, opt.group);

  if (!opt.subgroup.empty()) {
    auto h = parse_subgroup(cert, g, opt.subgroup);
    auto dict = orbital_double_coset_map(g, h);
    Json classes = Json::array();
    std::size_t total = 0;
    Json size_law;
    for (std::size_t i = 0; i < dict.classes.size(); ++i) {
      ElementId x = dict.classes.representatives[i];
      const auto& orb = dict.orbitals[dict.orbital_of[i]];
      classes.push_back(Json{{"representative", g.element(x).to_cycles()},
                             {"size", dict.classes.classes[i].size()},
                             {"involution", static_cast<bool>(dict.classes.contains_involution[i])},
                             {"orbital", dict.orbital_of[i] + 1},
                             {"self_paired", orb.self_paired}});
      total += dict.classes.classes[i].size();
      auto meet = intersect(g, h, conjugate(g, h, x));
      if (size_law.is_null() && dict.classes.classes[i].size() * meet.order() != h.order() * h.order()) {
        size_law = Json{{"representative", g.element(x).to_cycles()}, {"size", dict.classes.classes[i].size()}};
      }
    }
    cert.set("classes", classes);
    cert.set("rank", dict.orbitals.size());
    cert.claim("bijective", dict.bijective);
    cert.claim("involution_flags_agree", dict.flags_agree);
    cert.claim("classes_partition_group", total == g.order(), total == g.order() ? Json() : Json{{"total", total}});
    cert.claim("double_coset_size_law", size_law.is_null(), size_law);
    return finish(opt, cert, true);
  }

  auto orbs = orbitals(g, g.degree());
  Json list = Json::array();
  std::size_t total = 0;
  bool involutive = true;
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    const auto& o = orbs[i];
    list.push_back(Json{{"index", i + 1},
                        {"size", o.pairs.size()},
                        {"diagonal", o.diagonal},
                        {"self_paired", o.self_paired},
                        {"paired_with", o.paired_with + 1},
                        {"first_pair", {o.pairs[0].first + 1, o.pairs[0].second + 1}}});
    total += o.pairs.size();
    involutive = involutive && orbs[o.paired_with].paired_with == i;
  }
  cert.set("orbitals", list);
  cert.claim("pairs_partition", total == g.degree() * g.degree(), total == g.degree() * g.degree() ? Json() : Json{{"total", total}});
  cert.claim("pairing_involutive", involutive);
  if (opt.orbital > 0) {
    if (static_cast<std::size_t>(opt.orbital) > orbs.size()) {
      fail(ErrorCode::InvalidArgument, "there are only " + std::to_string(orbs.size()) + " orbitals");
    }
    auto graph = orbital_graph(g, g.degree(), orbs[opt.orbital - 1].pairs);
    claim_symmetric(cert, graph, g);
    emit_graph(opt, graph, "orbital");
    return finish(opt, cert, false);
  }
  return finish(opt, cert, true);
}

int run_blocks(const Options& opt) {
  Certificate cert("blocks");
  auto g = load_group(cert, opt.group);
  std::vector<BlockSystem> systems;
  if (!opt.pair.empty()) {
    cert.input_text("pair", opt.pair);
    auto comma = opt.pair.find(',');
    if (comma == std::string::npos) fail(ErrorCode::SyntaxError, "--pair expects 'a,b'");
    std::vector<Point> seeds{parse_point(opt.pair.substr(0, comma), g.degree()),
                             parse_point(opt.pair.substr(comma + 1), g.degree())};
    minimal_block(g, seeds[0], seeds[1]);  // rejects intransitive groups and equal points
    systems.push_back(minimal_block_system(g, seeds));
  } else {
    systems = all_block_systems(g);
  }
  std::ostringstream text;
  Json list = Json::array();
  Json broken;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const auto& s = systems[i];
    list.push_back(Json{{"blocks", s.block_count()}, {"block_size", s.block(0).size()}, {"trivial", s.is_trivial()}});
    if (systems.size() > 1) {
      text << (i ? "\n" : "") << "# system " << i + 1 << ": " << s.block_count() << " blocks of size "
           << s.block(0).size() << '\n';
    }
    write_block_system(text, s);
    if (broken.is_null()) broken = invariance_witness(g, s);
  }
  cert.set("systems", list);
  cert.claim("invariant", broken.is_null(), broken);
  if (opt.pair.empty()) cert.set("primitive", systems.size() <= 2);
  emit_text(opt, text.str());
  return finish(opt, cert, false);
}

int run_lattice(const Options& opt) {
  Certificate cert("lattice");
  auto g = load_group(cert, opt.group);
  if (opt.base < 1 || static_cast<std::size_t>(opt.base) > g.degree()) {
    fail(ErrorCode::PointOutOfRange, "base point outside 1.." + std::to_string(g.degree()));
  }
  Point base = static_cast<Point>(opt.base - 1);
  auto lattice = subgroup_block_lattice(g, base);
  auto stab = stabilizer_ids(g, base).size();
  Json entries = Json::array();
  Json bad;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& e = lattice[i];
    entries.push_back(Json{{"order", e.subgroup.order()},
                           {"generators", generators_json(g, e.subgroup)},
                           {"block", points_json(e.block)}});
    std::set<Point> orbit_of_base;
    for (ElementId x : e.subgroup.ids()) orbit_of_base.insert(g.element(x)(base));
    bool ok = std::vector<Point>(orbit_of_base.begin(), orbit_of_base.end()) == e.block &&
              e.subgroup.order() == stab * e.block.size();
    if (!ok && bad.is_null()) bad = Json{{"entry", i + 1}, {"order", e.subgroup.order()}};
  }
  cert.set("base", opt.base);
  cert.set("entries", entries);
  cert.claim("block_is_orbit_of_base", bad.is_null(), bad);
  cert.claim("order_isomorphic", lattice_is_order_isomorphic(lattice));
  return finish(opt, cert, true);
}

int run_verify(const Options& opt) {
  Certificate cert("verify");
  auto graph = load_graph(cert, opt.graph);
  auto g = load_group(cert, opt.group);
  if (g.degree() != graph.vertex_count()) {
    fail(ErrorCode::DegreeMismatch, "group degree " + std::to_string(g.degree()) + " but " +
                                        std::to_string(graph.vertex_count()) + " vertices");
  }
  auto report = verify_action(graph, g);
  cert.set("vertices", graph.vertex_count());
  cert.set("edges", graph.edge_count());
  if (auto k = graph.regular_valency()) cert.set("valency", *k);
  cert.set("connected", graph.is_connected());
  cert.set("symmetric", report.symmetric());
  cert.set("vertex_transitive", report.vertex_transitive);
  cert.set("locally_transitive", report.locally_transitive);
  cert.set("arc_transitive", report.arc_transitive);
  cert.set("arc_orbits", report.arc_orbit_count);
  cert.set("s_arc_transitive_up_to", report.s_arc_transitive_up_to);
  cert.set("action_kernel_size", report.action_kernel_size);
  claim_symmetric(cert, graph, g);
  if (!opt.blocks.empty()) {
    auto partition = load_blocks(cert, opt.blocks, graph.vertex_count());
    auto broken = invariance_witness(g, partition);
    cert.claim("blocks_invariant", broken.is_null(), broken);
  }
  return finish(opt, cert, true);
}

}  // namespace sgk::cli
