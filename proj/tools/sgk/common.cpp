#include "common.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sgk/error.hpp"
#include "sgk/transitivity.hpp"

namespace sgk::cli {

namespace {

std::string sha256(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) {
    fail(ErrorCode::IoError, "digest failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

Certificate::Certificate(std::string construction)
    : construction_(std::move(construction)), start_(std::chrono::steady_clock::now()) {}

void Certificate::input_file(const std::string& name, const std::string& path) {
  inputs_[name] = Json{{"path", path}, {"sha256", sha256(slurp(path))}};
}

void Certificate::input_text(const std::string& name, const std::string& text) {
  inputs_[name] = Json{{"text", text}, {"sha256", sha256(text)}};
}

void Certificate::warn(const std::string& message) {
  warnings_.push_back(message);
  std::cerr << "warning: " << message << '\n';
}

void Certificate::claim(const std::string& id, bool pass, Json witness) {
  Json c{{"id", id}, {"pass", pass}};
  if (!witness.is_null()) c["witness"] = std::move(witness);
  claims_.push_back(std::move(c));
  pass_ = pass_ && pass;
}

Json Certificate::to_json() const {
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  Json j{{"construction", construction_}, {"inputs", inputs_}, {"summary", summary_}};
  if (!warnings_.empty()) j["warnings"] = warnings_;
  j["claims"] = claims_;
  j["timing_ms"] = static_cast<long long>(ms);
  return j;
}

void require_option(const std::string& value, const std::string& flag) {
  if (value.empty()) fail(ErrorCode::InvalidArgument, flag + " is required here");
}

GroupTable load_group(Certificate& cert, const std::string& path, const std::string& name) {
  cert.input_file(name, path);
  return enumerate_group(read_group_spec_file(path));
}

Graph load_graph(Certificate& cert, const std::string& path) {
  cert.input_file("graph", path);
  return read_graph_file(path);
}

IncidenceStructure load_design(Certificate& cert, const std::string& path) {
  cert.input_file("design", path);
  return read_design_file(path);
}

BlockSystem load_blocks(Certificate& cert, const std::string& path, std::size_t domain_size,
                        const std::string& name) {
  cert.input_file(name, path);
  return read_block_system_file(path, domain_size);
}

Subgroup parse_subgroup(Certificate& cert, const GroupTable& group, const std::string& gens,
                        const std::string& name) {
  cert.input_text(name, gens);
  return Subgroup::generated_by(group, parse_permutation_list(gens, group.degree()));
}

ElementId parse_element(Certificate& cert, const GroupTable& group, const std::string& text,
                        const std::string& name) {
  cert.input_text(name, text);
  return group.id_of(parse_cycles(text, group.degree()));
}

Json points_json(const std::vector<Point>& points) {
  Json j = Json::array();
  for (Point p : points) j.push_back(p + 1);
  return j;
}

Json generators_json(const GroupTable& parent, const Subgroup& sub) {
  Json j = Json::array();
  for (const auto& g : greedy_generators(parent.degree(), sub.elements(parent))) j.push_back(g.to_cycles());
  return j;
}

// A generator and a block whose image is not a block, if any.
Json invariance_witness(const GroupTable& g, const BlockSystem& partition) {
  for (const auto& s : g.generators()) {
    for (const auto& block : partition.blocks()) {
      auto target = partition.block_of(s(block[0]));
      for (Point p : block) {
        if (partition.block_of(s(p)) != target) {
          return Json{{"element", s.to_cycles()}, {"block", points_json(block)}};
        }
      }
    }
  }
  return nullptr;
}

void claim_symmetric(Certificate& cert, const Graph& graph, const GroupTable& group, const PointAction& action,
                     const std::string& prefix) {
  if (action.domain_size != graph.vertex_count()) {
    fail(ErrorCode::DegreeMismatch, "action on " + std::to_string(action.domain_size) + " points, graph has " +
                                        std::to_string(graph.vertex_count()) + " vertices");
  }
  const auto n = static_cast<Vertex>(graph.vertex_count());

  Json bad_arc;
  for (ElementId g : group.generator_ids()) {
    for (const auto& [u, v] : graph.arcs()) {
      if (!graph.has_arc(action.apply(g, u), action.apply(g, v))) {
        bad_arc = Json{{"element", group.element(g).to_cycles()}, {"arc", {graph.label(u), graph.label(v)}}};
        break;
      }
    }
    if (!bad_arc.is_null()) break;
  }
  cert.claim(prefix + "acts_as_automorphisms", bad_arc.is_null(), bad_arc);

  Json missed;
  if (n > 0) {
    auto orb = action_orbit(group, action, 0);
    if (orb.size() != n) {
      std::vector<bool> in(n, false);
      for (Point p : orb) in[p] = true;
      for (Vertex v = 0; v < n; ++v) {
        if (!in[v]) {
          missed = Json{{"vertex", graph.label(v)}, {"not_in_orbit_of", graph.label(0)}};
          break;
        }
      }
    }
  }
  cert.claim(prefix + "vertex_transitive", missed.is_null(), missed);

  // Local transitivity at every vertex: orbit of the first neighbour under the stabilizer.
  Json local;
  for (Vertex v = 0; v < n && local.is_null(); ++v) {
    auto nb = graph.neighbors(v);
    if (nb.size() < 2) continue;
    std::vector<ElementId> stab;
    for (ElementId g = 0; g < group.order(); ++g)
      if (action.apply(g, v) == v) stab.push_back(g);
    std::vector<bool> reached(n, false);
    for (ElementId g : stab) reached[action.apply(g, nb[0])] = true;
    for (Vertex w : nb) {
      if (!reached[w]) {
        local = Json{{"vertex", graph.label(v)}, {"neighbours", {graph.label(nb[0]), graph.label(w)}}};
        break;
      }
    }
    if (missed.is_null()) break;  // vertex-transitive: one vertex decides
  }
  cert.claim(prefix + "locally_transitive", local.is_null(), local);
}

void claim_symmetric(Certificate& cert, const Graph& graph, const GroupTable& group, const std::string& prefix) {
  claim_symmetric(cert, graph, group, natural_action(group), prefix);
}

void emit_text(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) fail(ErrorCode::IoError, "cannot write " + opt.output);
  out << text;
}

void emit_graph(const Options& opt, const Graph& graph, const std::string& name) {
  std::ostringstream s;
  if (opt.out == "dot") {
    write_dot(s, graph, name);
  } else {
    write_graph(s, graph);
  }
  emit_text(opt, s.str());
}

int finish(const Options& opt, const Certificate& cert, bool primary) {
  std::string text = cert.to_json().dump(2) + "\n";
  if (!opt.certificate.empty()) {
    std::ofstream out(opt.certificate);
    if (!out) fail(ErrorCode::IoError, "cannot write " + opt.certificate);
    out << text;
  } else if (primary) {
    emit_text(opt, text);
  }
  if (cert.all_pass()) return 0;
  auto j = cert.to_json();
  for (const auto& c : j["claims"]) {
    if (!c["pass"].get<bool>()) std::cerr << "failed: " << c["id"].get<std::string>() << '\n';
  }
  return 2;
}

}  // namespace sgk::cli
