#include "sgk/designs.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "sgk/error.hpp"
#include "sgk/isomorphism.hpp"
#include "sgk/transitivity.hpp"

namespace sgk {

namespace {

std::vector<std::string> numbered(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return labels;
}

}  // namespace

IncidenceStructure::IncidenceStructure(std::size_t point_count, std::vector<std::vector<Point>> blocks)
    : IncidenceStructure(numbered(point_count, ""), {}, std::move(blocks)) {}

IncidenceStructure::IncidenceStructure(std::vector<std::string> point_labels, std::vector<std::string> block_labels,
                                       std::vector<std::vector<Point>> blocks)
    : point_labels_(std::move(point_labels)), block_labels_(std::move(block_labels)), blocks_(std::move(blocks)) {
  if (block_labels_.empty() && !blocks_.empty()) block_labels_ = numbered(blocks_.size(), "b");
  if (block_labels_.size() != blocks_.size()) fail(ErrorCode::InvalidDesign, "block label count differs from block count");
  incidence_.assign(blocks_.size() * point_labels_.size(), false);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    auto& block = blocks_[b];
    std::sort(block.begin(), block.end());
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] >= point_labels_.size()) {
        fail(ErrorCode::InvalidDesign, "block " + block_labels_[b] + " has a point outside the point set");
      }
      if (i > 0 && block[i] == block[i - 1]) {
        fail(ErrorCode::InvalidDesign, "block " + block_labels_[b] + " repeats a point");
      }
      incidence_[b * point_labels_.size() + block[i]] = true;
    }
  }
}

std::vector<BlockId> IncidenceStructure::blocks_through(Point p) const {
  std::vector<BlockId> result;
  for (BlockId b = 0; b < blocks_.size(); ++b) {
    if (incident(p, b)) result.push_back(b);
  }
  return result;
}

std::vector<std::pair<Point, BlockId>> IncidenceStructure::flags() const {
  std::vector<std::pair<Point, BlockId>> result;
  for (BlockId b = 0; b < blocks_.size(); ++b) {
    for (Point p : blocks_[b]) result.emplace_back(p, b);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::size_t IncidenceStructure::flag_count() const {
  std::size_t total = 0;
  for (const auto& b : blocks_) total += b.size();
  return total;
}

DesignParams validate_design(const IncidenceStructure& inc) {
  DesignParams params;
  params.v = inc.point_count();
  params.b = inc.block_count();
  if (params.b > 0) params.k = inc.block(0).size();
  for (BlockId b = 0; b < params.b; ++b) {
    if (inc.block(b).size() != params.k) {
      fail(ErrorCode::NotUniformBlocks, "block " + inc.block_labels()[b] + " has " +
                                            std::to_string(inc.block(b).size()) + " points, expected " +
                                            std::to_string(params.k));
    }
  }
  std::vector<std::size_t> degree(params.v, 0);
  for (const auto& block : inc.blocks()) {
    for (Point p : block) ++degree[p];
  }
  if (params.v > 0) params.lambda = degree[0];
  for (Point p = 0; p < params.v; ++p) {
    if (degree[p] != params.lambda) {
      fail(ErrorCode::NotUniformPoints, "point " + inc.point_labels()[p] + " lies on " + std::to_string(degree[p]) +
                                            " blocks, expected " + std::to_string(params.lambda));
    }
  }
  std::map<std::vector<Point>, std::size_t> traces;
  for (const auto& block : inc.blocks()) ++traces[block];
  params.m = 0;
  for (const auto& [trace, count] : traces) params.m = std::gcd(params.m, count);
  if (params.m == 0) params.m = 1;
  return params;
}

IncidenceStructure dual(const IncidenceStructure& inc) {
  std::vector<std::vector<Point>> blocks(inc.point_count());
  for (BlockId b = 0; b < inc.block_count(); ++b) {
    for (Point p : inc.block(b)) blocks[p].push_back(b);
  }
  return IncidenceStructure(inc.block_labels(), inc.point_labels(), std::move(blocks));
}

IncidenceStructure identify_repeated_blocks(const IncidenceStructure& inc) {
  std::map<std::vector<Point>, bool> seen;
  std::vector<std::string> labels;
  std::vector<std::vector<Point>> blocks;
  for (BlockId b = 0; b < inc.block_count(); ++b) {
    if (seen.emplace(inc.block(b), true).second) {
      labels.push_back(inc.block_labels()[b]);
      blocks.push_back(inc.block(b));
    }
  }
  return IncidenceStructure(inc.point_labels(), std::move(labels), std::move(blocks));
}

PointAction block_action(const IncidenceStructure& inc, const GroupTable& group) {
  if (group.degree() != inc.point_count()) {
    fail(ErrorCode::DegreeMismatch, "group degree differs from the number of points");
  }
  // Blocks sharing a trace, in ascending order, and each block's rank among them.
  std::map<std::vector<Point>, std::vector<BlockId>> by_trace;
  for (BlockId b = 0; b < inc.block_count(); ++b) by_trace[inc.block(b)].push_back(b);
  std::vector<std::size_t> rank(inc.block_count());
  for (const auto& [trace, ids] : by_trace) {
    for (std::size_t i = 0; i < ids.size(); ++i) rank[ids[i]] = i;
  }
  PointAction action;
  action.domain_size = inc.block_count();
  action.images.assign(group.order(), std::vector<Point>(inc.block_count()));
  for (ElementId g = 0; g < group.order(); ++g) {
    const auto& perm = group.element(g);
    for (BlockId b = 0; b < inc.block_count(); ++b) {
      std::vector<Point> image;
      for (Point p : inc.block(b)) image.push_back(perm(p));
      std::sort(image.begin(), image.end());
      auto it = by_trace.find(image);
      if (it == by_trace.end() || it->second.size() != by_trace[inc.block(b)].size()) {
        fail(ErrorCode::NotAutomorphism, perm.to_cycles() + " does not map block " + inc.block_labels()[b] +
                                             " to a block");
      }
      action.images[g][b] = it->second[rank[b]];
    }
  }
  return action;
}

bool is_flag_transitive(const IncidenceStructure& inc, const GroupTable& group, const PointAction& blocks) {
  if (group.degree() != inc.point_count() || blocks.domain_size != inc.block_count()) {
    fail(ErrorCode::DegreeMismatch, "actions do not match the incidence structure");
  }
  auto flags = inc.flags();
  if (flags.empty()) return true;
  std::vector<bool> seen(flags.size(), false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto& [p, b] = flags[queue[i]];
    for (ElementId g : group.generator_ids()) {
      std::pair<Point, BlockId> image{group.element(g)(p), blocks.apply(g, b)};
      auto it = std::lower_bound(flags.begin(), flags.end(), image);
      if (it == flags.end() || *it != image) return false;
      auto j = static_cast<std::size_t>(it - flags.begin());
      if (!seen[j]) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  return queue.size() == flags.size();
}

bool is_flag_transitive(const IncidenceStructure& inc, const GroupTable& group) {
  return is_flag_transitive(inc, group, block_action(inc, group));
}

namespace {

std::vector<Point> image_of(const Permutation& g, const std::vector<Point>& set) {
  std::vector<Point> out;
  out.reserve(set.size());
  for (Point p : set) out.push_back(g(p));
  std::sort(out.begin(), out.end());
  return out;
}

// Transitivity on pairs (point, distinct trace through it).
bool trace_flag_transitive(const IncidenceStructure& inc, const GroupTable& group) {
  std::set<std::pair<Point, std::vector<Point>>> flags;
  for (BlockId b = 0; b < inc.block_count(); ++b) {
    for (Point p : inc.block(b)) flags.emplace(p, inc.block(b));
  }
  if (flags.empty()) return true;
  std::set<std::pair<Point, std::vector<Point>>> seen{*flags.begin()};
  std::vector<std::pair<Point, std::vector<Point>>> queue{*flags.begin()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : group.generators()) {
      std::pair<Point, std::vector<Point>> image{g(queue[i].first), image_of(g, queue[i].second)};
      if (!flags.count(image)) return false;
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return seen.size() == flags.size();
}

}  // namespace

PointAction polarity_block_action(const IncidenceStructure& inc, const GroupTable& group, const Polarity& pol) {
  validate_polarity(inc, group, pol);
  PointAction action;
  action.domain_size = inc.block_count();
  action.images.assign(group.order(), std::vector<Point>(inc.block_count()));
  for (ElementId g = 0; g < group.order(); ++g) {
    const auto& perm = group.element(g);
    for (BlockId b = 0; b < inc.block_count(); ++b) action.images[g][b] = pol.point_map[perm(pol.block_map[b])];
  }
  return action;
}

void validate_polarity(const IncidenceStructure& inc, const GroupTable& group, const Polarity& pol) {
  const std::size_t v = inc.point_count();
  if (pol.point_map.size() != v || pol.block_map.size() != inc.block_count() || v != inc.block_count()) {
    fail(ErrorCode::NotPolarity, "polarity maps have the wrong size");
  }
  for (Point p = 0; p < v; ++p) {
    if (pol.point_map[p] >= v || pol.block_map[pol.point_map[p]] != p) {
      fail(ErrorCode::NotPolarity, "point and block maps are not mutually inverse");
    }
  }
  for (Point p = 0; p < v; ++p) {
    for (Point q = 0; q < v; ++q) {
      if (inc.incident(p, pol.point_map[q]) != inc.incident(q, pol.point_map[p])) {
        fail(ErrorCode::NotPolarity, "incidence is not preserved at points " + inc.point_labels()[p] + ", " +
                                         inc.point_labels()[q]);
      }
    }
  }
  for (const auto& g : group.generators()) {
    if (g.degree() != v) fail(ErrorCode::DegreeMismatch, "group degree differs from the number of points");
    for (Point p = 0; p < v; ++p) {
      if (inc.block(pol.point_map[g(p)]) != image_of(g, inc.block(pol.point_map[p]))) {
        fail(ErrorCode::NotPolarity, "polarity does not commute with " + g.to_cycles());
      }
    }
  }
}

SymmetricDesign design_from_graph(const Graph& graph, const GroupTable& group) {
  auto report = verify_action(graph, group);
  if (!report.symmetric()) fail(ErrorCode::NotSymmetric, "the group does not act symmetrically on the graph");
  std::vector<std::vector<Point>> blocks;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    if (graph.valency(v) == 0) fail(ErrorCode::NotSymmetric, "vertex " + graph.label(v) + " is isolated");
    auto nb = graph.neighbors(v);
    blocks.emplace_back(nb.begin(), nb.end());
    labels.push_back("N(" + graph.label(v) + ")");
  }
  SymmetricDesign result{IncidenceStructure(graph.labels(), std::move(labels), std::move(blocks)), {}};
  result.polarity.point_map.resize(graph.vertex_count());
  result.polarity.block_map.resize(graph.vertex_count());
  std::iota(result.polarity.point_map.begin(), result.polarity.point_map.end(), BlockId{0});
  std::iota(result.polarity.block_map.begin(), result.polarity.block_map.end(), Point{0});
  return result;
}

Graph graph_from_design(const IncidenceStructure& inc, const GroupTable& group, const Polarity& pol) {
  validate_polarity(inc, group, pol);
  std::vector<Arc> arcs;
  for (Point p = 0; p < inc.point_count(); ++p) {
    BlockId polar = pol.point_map[p];
    if (inc.incident(p, polar)) {
      fail(ErrorCode::DegenerateDesign, "point " + inc.point_labels()[p] + " lies on its polar block");
    }
    for (Point q : inc.block(polar)) arcs.emplace_back(p, q);
  }
  return Graph::from_arcs(inc.point_labels(), arcs);
}

std::vector<Polarity> find_polarities(const IncidenceStructure& inc, const GroupTable& group) {
  if (group.degree() != inc.point_count()) {
    fail(ErrorCode::DegreeMismatch, "group degree differs from the number of points");
  }
  if (!trace_flag_transitive(inc, group)) fail(ErrorCode::NotFlagTransitive, "design is not flag-transitive");
  const std::size_t v = inc.point_count();
  std::vector<Polarity> result;
  if (v != inc.block_count() || v == 0) return result;
  std::map<std::vector<Point>, std::vector<BlockId>> by_trace;
  for (BlockId b = 0; b < inc.block_count(); ++b) by_trace[inc.block(b)].push_back(b);
  // An equivariant map from points to traces is fixed by the trace of point 0;
  // any bijective lift to block ids is then a polarity, take the ascending one.
  for (const auto& [seed, seed_ids] : by_trace) {
    std::vector<const std::vector<Point>*> trace(v, nullptr);
    trace[0] = &by_trace.find(seed)->first;
    std::vector<Point> queue{0};
    bool ok = true;
    for (std::size_t i = 0; ok && i < queue.size(); ++i) {
      Point p = queue[i];
      for (const auto& g : group.generators()) {
        Point q = g(p);
        auto it = by_trace.find(image_of(g, *trace[p]));
        if (it == by_trace.end()) {
          ok = false;
          break;
        }
        if (!trace[q]) {
          trace[q] = &it->first;
          queue.push_back(q);
        } else if (trace[q] != &it->first) {
          ok = false;
          break;
        }
      }
    }
    if (!ok || queue.size() != v) continue;
    std::map<const std::vector<Point>*, std::size_t> used;
    Polarity pol;
    pol.point_map.resize(v);
    pol.block_map.resize(v);
    for (Point p = 0; ok && p < v; ++p) {
      const auto& ids = by_trace.find(*trace[p])->second;
      std::size_t& k = used[trace[p]];
      if (k == ids.size()) {
        ok = false;
        break;
      }
      pol.point_map[p] = ids[k++];
      pol.block_map[pol.point_map[p]] = p;
    }
    if (!ok) continue;
    try {
      validate_polarity(inc, group, pol);
    } catch (const Error&) {
      continue;
    }
    result.push_back(std::move(pol));
  }
  return result;
}

Graph incidence_graph(const IncidenceStructure& inc) {
  std::vector<std::string> labels = inc.point_labels();
  labels.insert(labels.end(), inc.block_labels().begin(), inc.block_labels().end());
  std::vector<Arc> edges;
  const auto v = static_cast<Vertex>(inc.point_count());
  for (const auto& [p, b] : inc.flags()) edges.emplace_back(p, v + b);
  return Graph::from_edges(std::move(labels), edges);
}

std::optional<std::pair<std::vector<Point>, std::vector<BlockId>>> design_isomorphism(
    const IncidenceStructure& first, const IncidenceStructure& second) {
  if (first.point_count() != second.point_count() || first.block_count() != second.block_count()) {
    return std::nullopt;
  }
  auto colors = [](const IncidenceStructure& inc) {
    std::vector<std::uint32_t> c(inc.point_count(), 0);
    c.resize(inc.point_count() + inc.block_count(), 1);
    return c;
  };
  auto map = are_isomorphic(incidence_graph(first), incidence_graph(second), colors(first), colors(second));
  if (!map) return std::nullopt;
  const auto v = static_cast<Vertex>(first.point_count());
  std::vector<Point> points(map->begin(), map->begin() + v);
  std::vector<BlockId> blocks;
  for (auto it = map->begin() + v; it != map->end(); ++it) blocks.push_back(*it - v);
  return std::make_pair(std::move(points), std::move(blocks));
}

IncidenceStructure read_design(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<std::string> point_labels, block_labels;
  std::vector<std::vector<Point>> blocks;
  std::string line;
  int line_no = 0;
  auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    if (keyword == "points:") {
      long long count = -1;
      if (n || !(fields >> count) || count < 0) fail(ErrorCode::SyntaxError, where() + "bad points line");
      n = static_cast<std::size_t>(count);
      point_labels = numbered(*n, "");
    } else if (!n) {
      fail(ErrorCode::SyntaxError, where() + "expected 'points: <n>' first");
    } else if (keyword == "label") {
      long long i = 0;
      std::string text;
      if (!(fields >> i) || i < 1 || static_cast<std::size_t>(i) > *n) fail(ErrorCode::SyntaxError, where() + "bad label line");
      std::getline(fields >> std::ws, text);
      while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
      if (text.empty()) fail(ErrorCode::SyntaxError, where() + "empty label");
      point_labels[i - 1] = text;
    } else if (keyword == "block") {
      std::string rest;
      std::getline(fields, rest);
      auto colon = rest.rfind(':');
      if (colon == std::string::npos) fail(ErrorCode::SyntaxError, where() + "block line needs 'name:'");
      std::string name = rest.substr(0, colon);
      name.erase(0, name.find_first_not_of(" \t"));
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      if (name.empty()) fail(ErrorCode::SyntaxError, where() + "empty block name");
      std::istringstream points(rest.substr(colon + 1));
      std::vector<Point> block;
      long long p = 0;
      while (points >> p) {
        if (p < 1 || static_cast<std::size_t>(p) > *n) {
          fail(ErrorCode::PointOutOfRange, where() + "point " + std::to_string(p) + " out of range");
        }
        block.push_back(static_cast<Point>(p - 1));
      }
      if (!points.eof()) fail(ErrorCode::SyntaxError, where() + "non-numeric point");
      block_labels.push_back(name);
      blocks.push_back(std::move(block));
    } else {
      fail(ErrorCode::SyntaxError, where() + "unknown keyword '" + keyword + "'");
    }
  }
  if (!n) fail(ErrorCode::SyntaxError, "missing 'points: <n>' line");
  return IncidenceStructure(std::move(point_labels), std::move(block_labels), std::move(blocks));
}

IncidenceStructure read_design_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  return read_design(in);
}

void write_design(std::ostream& out, const IncidenceStructure& inc) {
  out << "points: " << inc.point_count() << '\n';
  for (Point p = 0; p < inc.point_count(); ++p) {
    if (inc.point_labels()[p] != std::to_string(p + 1)) out << "label " << p + 1 << ' ' << inc.point_labels()[p] << '\n';
  }
  for (BlockId b = 0; b < inc.block_count(); ++b) {
    out << "block " << inc.block_labels()[b] << ':';
    for (Point p : inc.block(b)) out << ' ' << p + 1;
    out << '\n';
  }
}

}  // namespace sgk
