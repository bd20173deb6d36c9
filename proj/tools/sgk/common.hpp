#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgk/designs.hpp"
#include "sgk/graph.hpp"
#include "sgk/group.hpp"
#include "sgk/subgroups.hpp"

namespace sgk::cli {

using Json = nlohmann::ordered_json;

// Everything a subcommand can be given; each subcommand registers the subset it reads.
struct Options {
  std::string group;
  std::string graph;
  std::string design;
  std::string blocks;
  std::string subgroup;
  std::string involution;
  std::string connectors;
  std::string coarse;
  std::string normal;
  std::string n_group;
  std::string twist;
  std::string chain;
  std::string arcs;
  std::string vertices;
  std::string pair;
  std::string via = "arcs";
  std::string action;
  int base = 1;
  int orbit_index = 0;
  int orbital = 0;
  int polarity = 1;
  bool elements = false;
  bool allow_trivial = false;

  std::string out = "edges";
  std::string output;
  std::string certificate;
};

class Certificate {
 public:
  explicit Certificate(std::string construction);

  void input_file(const std::string& name, const std::string& path);
  void input_text(const std::string& name, const std::string& text);
  void set(const std::string& key, Json value) { summary_[key] = std::move(value); }
  void warn(const std::string& message);
  void claim(const std::string& id, bool pass, Json witness = nullptr);
  bool all_pass() const noexcept { return pass_; }
  Json to_json() const;

 private:
  std::string construction_;
  Json inputs_ = Json::object();
  Json summary_ = Json::object();
  Json warnings_ = Json::array();
  Json claims_ = Json::array();
  bool pass_ = true;
  std::chrono::steady_clock::time_point start_;
};

// InvalidArgument when a flag needed by this mode was not given.
void require_option(const std::string& value, const std::string& flag);

GroupTable load_group(Certificate& cert, const std::string& path, const std::string& name = "group");
Graph load_graph(Certificate& cert, const std::string& path);
IncidenceStructure load_design(Certificate& cert, const std::string& path);
BlockSystem load_blocks(Certificate& cert, const std::string& path, std::size_t domain_size,
                        const std::string& name = "blocks");
Subgroup parse_subgroup(Certificate& cert, const GroupTable& group, const std::string& gens,
                        const std::string& name = "subgroup");
ElementId parse_element(Certificate& cert, const GroupTable& group, const std::string& text,
                        const std::string& name = "involution");

Json points_json(const std::vector<Point>& points);  // 1-based
Json generators_json(const GroupTable& parent, const Subgroup& sub);

// A generator and a block whose image is not a block, or null.
Json invariance_witness(const GroupTable& g, const BlockSystem& partition);

// Automorphism, vertex- and local-transitivity claims for `action` on the
// graph, each failure carrying a replayable counterexample.
void claim_symmetric(Certificate& cert, const Graph& graph, const GroupTable& group, const PointAction& action,
                     const std::string& prefix = "");
void claim_symmetric(Certificate& cert, const Graph& graph, const GroupTable& group,
                     const std::string& prefix = "");

void emit_graph(const Options& opt, const Graph& graph, const std::string& name);
void emit_text(const Options& opt, const std::string& text);

// Writes the certificate (to stdout when `primary` and no file was asked
// for) and returns the exit status: 0 when every claim passed, else 2.
int finish(const Options& opt, const Certificate& cert, bool primary);

}  // namespace sgk::cli
