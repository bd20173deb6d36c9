#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "sgk/error.hpp"

using namespace sgk::cli;

namespace {

void add_outputs(CLI::App* cmd, Options& opt, bool graph_output) {
  if (graph_output) {
    cmd->add_option("--out", opt.out, "graph output format")->check(CLI::IsMember({"edges", "dot"}));
  }
  cmd->add_option("--output", opt.output, "write the main output here instead of stdout");
  cmd->add_option("--certificate", opt.certificate, "write the JSON certificate here");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric graphs from permutation groups: construct, quotient, extend and certify."};
  app.require_subcommand(1);
  Options opt;
  std::function<int(const Options&)> run;
  auto bind = [&](CLI::App* cmd, int (*fn)(const Options&)) { cmd->callback([&run, fn] { run = fn; }); };

  auto group = app.add_subcommand("group", "enumerate a group; orbits, order, optional subgroup data");
  group->add_option("--group", opt.group, "group file")->required();
  group->add_option("--subgroup", opt.subgroup, "subgroup generators, e.g. \"(2 3),(3 4)\"");
  group->add_flag("--elements", opt.elements, "list every element");
  add_outputs(group, opt, false);
  bind(group, run_group);

  auto coset = app.add_subcommand("cosetgraph", "Sab(G,H,HaH) or Sab(G,H,D)");
  coset->add_option("--group", opt.group, "group file")->required();
  coset->add_option("--subgroup", opt.subgroup, "generators of H")->required();
  auto inv = coset->add_option("--involution", opt.involution, "a with a^2 = 1, a outside H");
  coset->add_option("--connectors", opt.connectors, "double coset representatives for D")->excludes(inv);
  add_outputs(coset, opt, true);
  bind(coset, run_cosetgraph);

  auto orbs = app.add_subcommand("orbitals", "orbitals, or the double coset / orbital dictionary of H");
  orbs->add_option("--group", opt.group, "group file")->required();
  orbs->add_option("--subgroup", opt.subgroup, "generators of H (coset action)");
  orbs->add_option("--orbital", opt.orbital, "emit the orbital graph of this orbital (1-based)");
  add_outputs(orbs, opt, true);
  bind(orbs, run_orbitals);

  auto quotient = app.add_subcommand("quotient", "quotient of a symmetric graph by a block system");
  quotient->add_option("--graph", opt.graph, "graph file");
  quotient->add_option("--group", opt.group, "group file")->required();
  quotient->add_option("--blocks", opt.blocks, "block file, one block per line");
  quotient->add_option("--subgroup", opt.subgroup, "coset mode: H");
  quotient->add_option("--involution", opt.involution, "coset mode: a");
  quotient->add_option("--coarse", opt.coarse, "coset mode: K with H < K < G");
  quotient->add_flag("--allow-trivial", opt.allow_trivial, "accept quotients without arcs");
  add_outputs(quotient, opt, true);
  bind(quotient, run_quotient);

  auto blocks = app.add_subcommand("blocks", "block systems of a transitive group");
  blocks->add_option("--group", opt.group, "group file")->required();
  blocks->add_option("--pair", opt.pair, "only the minimal system joining two points, e.g. 1,3");
  add_outputs(blocks, opt, false);
  bind(blocks, run_blocks);

  auto lattice = app.add_subcommand("lattice", "subgroups above a point stabilizer and their blocks");
  lattice->add_option("--group", opt.group, "group file")->required();
  lattice->add_option("--base", opt.base, "base point (1-based)");
  add_outputs(lattice, opt, false);
  bind(lattice, run_lattice);

  auto design = app.add_subcommand("design", "symmetric designs and polarities");
  design->add_option("action", opt.action, "from-graph | to-graph | polarities | validate")
      ->required()
      ->check(CLI::IsMember({"from-graph", "to-graph", "polarities", "validate"}));
  design->add_option("--graph", opt.graph, "graph file (from-graph)");
  design->add_option("--design", opt.design, "design file");
  design->add_option("--group", opt.group, "group file");
  design->add_option("--polarity", opt.polarity, "polarity to build (to-graph, 1-based)");
  add_outputs(design, opt, true);
  bind(design, run_design);

  auto threearc = app.add_subcommand("threearc", "three-arc graphs; lists the 3-arc orbits without --orbit-index");
  threearc->add_option("--graph", opt.graph, "graph file")->required();
  threearc->add_option("--group", opt.group, "group file")->required();
  threearc->add_option("--orbit-index", opt.orbit_index, "3-arc orbit to use (1-based)");
  add_outputs(threearc, opt, true);
  bind(threearc, run_threearc);

  auto biggs = app.add_subcommand("biggs", "cover on N x V from an N-chain");
  biggs->add_option("--graph", opt.graph, "graph file")->required();
  biggs->add_option("--group", opt.group, "group G acting on the graph")->required();
  biggs->add_option("--n", opt.n_group, "group file for N")->required();
  biggs->add_option("--twist", opt.twist, "twist file (default: trivial)");
  biggs->add_option("--chain", opt.chain, "chain file")->required();
  add_outputs(biggs, opt, true);
  bind(biggs, run_biggs);

  auto sub = app.add_subcommand("subgraph-graph", "graph on the images of a directed subgraph");
  sub->add_option("--graph", opt.graph, "graph file")->required();
  sub->add_option("--group", opt.group, "group file")->required();
  sub->add_option("--arcs", opt.arcs, "arcs of the subgraph, e.g. \"2>3,3>4,4>2\"")->required();
  sub->add_option("--vertices", opt.vertices, "extra vertices, e.g. \"1,5\"");
  sub->add_option("--involution", opt.involution, "the involution a")->required();
  add_outputs(sub, opt, true);
  bind(sub, run_subgraph_graph);

  auto extend = app.add_subcommand("extend", "arc-partition extension or flag-orbital reconstruction");
  extend->add_option("--via", opt.via, "arcs | flags")->check(CLI::IsMember({"arcs", "flags"}));
  extend->add_option("--group", opt.group, "group file")->required();
  extend->add_option("--subgroup", opt.subgroup, "arcs: H");
  extend->add_option("--intermediate", opt.coarse, "arcs: K between the arc stabilizer and H");
  extend->add_option("--involution", opt.involution, "arcs: a");
  extend->add_option("--graph", opt.graph, "flags: graph file");
  extend->add_option("--normal", opt.normal, "flags: generators of N");
  extend->add_option("--fibers", opt.blocks, "flags: block file of the fibers");
  add_outputs(extend, opt, true);
  bind(extend, run_extend);

  auto verify = app.add_subcommand("verify", "check that a group acts symmetrically on a graph");
  verify->add_option("--graph", opt.graph, "graph file")->required();
  verify->add_option("--group", opt.group, "group file")->required();
  verify->add_option("--blocks", opt.blocks, "also check this block system is invariant");
  add_outputs(verify, opt, false);
  bind(verify, run_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return run(opt);
  } catch (const sgk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 1;
}
