#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgk/graph.hpp"
#include "sgk/group.hpp"

namespace sgk {

using BlockId = std::uint32_t;

// Points 0..v-1 and labelled blocks, each block a set of points. Blocks with
// the same point set are kept as distinct blocks.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  // Throws InvalidDesign on out-of-range or repeated points in a block.
  IncidenceStructure(std::size_t point_count, std::vector<std::vector<Point>> blocks);
  IncidenceStructure(std::vector<std::string> point_labels, std::vector<std::string> block_labels,
                     std::vector<std::vector<Point>> blocks);

  std::size_t point_count() const noexcept { return point_labels_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::string>& point_labels() const noexcept { return point_labels_; }
  const std::vector<std::string>& block_labels() const noexcept { return block_labels_; }
  const std::vector<Point>& block(BlockId b) const { return blocks_[b]; }
  const std::vector<std::vector<Point>>& blocks() const noexcept { return blocks_; }
  bool incident(Point p, BlockId b) const { return incidence_[std::size_t{b} * point_count() + p]; }
  // Blocks through p, ascending.
  std::vector<BlockId> blocks_through(Point p) const;
  std::vector<std::pair<Point, BlockId>> flags() const;
  std::size_t flag_count() const;

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.blocks_ == b.blocks_ && a.point_labels_ == b.point_labels_ && a.block_labels_ == b.block_labels_;
  }

 private:
  std::vector<std::string> point_labels_;
  std::vector<std::string> block_labels_;
  std::vector<std::vector<Point>> blocks_;
  std::vector<bool> incidence_;
};

struct DesignParams {
  std::size_t v = 0;
  std::size_t b = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t m = 1;  // blocks sharing a trace

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

// Throws NotUniformBlocks, NotUniformPoints. When trace classes differ in
// size, m is their gcd.
DesignParams validate_design(const IncidenceStructure& inc);

IncidenceStructure dual(const IncidenceStructure& inc);

// One block per distinct trace, keeping the first label.
IncidenceStructure identify_repeated_blocks(const IncidenceStructure& inc);

// Action on blocks induced by the natural action on points; repeated blocks
// are matched by their rank among equal traces. Throws NotAutomorphism.
PointAction block_action(const IncidenceStructure& inc, const GroupTable& group);

bool is_flag_transitive(const IncidenceStructure& inc, const GroupTable& group);
bool is_flag_transitive(const IncidenceStructure& inc, const GroupTable& group, const PointAction& blocks);

struct Polarity {
  std::vector<BlockId> point_map;  // rho_P
  std::vector<Point> block_map;    // rho_B = rho_P^-1

  friend bool operator==(const Polarity&, const Polarity&) = default;
};

// Checks mutual inverseness, (p, rho(q)) in I iff (q, rho(p)) in I, and
// that rho(p^g) has the trace rho(p)^g for every generator. Throws NotPolarity.
void validate_polarity(const IncidenceStructure& inc, const GroupTable& group, const Polarity& pol);

struct SymmetricDesign {
  IncidenceStructure design;
  Polarity polarity;
};

// Points are vertices, block v is the neighbourhood of v. Throws
// NotSymmetric (including isolated vertices).
SymmetricDesign design_from_graph(const Graph& graph, const GroupTable& group);

// Arcs (p,q) with q incident to rho_P(p). Throws NotPolarity, DegenerateDesign.
Graph graph_from_design(const IncidenceStructure& inc, const GroupTable& group, const Polarity& pol);

// Block action b -> rho(rho^-1(b)^g). Agrees with block_action when no block
// is repeated; with repeated blocks it is the one to test flag transitivity with.
PointAction polarity_block_action(const IncidenceStructure& inc, const GroupTable& group, const Polarity& pol);

// One group-equivariant polarity per equivariant point-to-trace map (all of
// them when blocks are not repeated). Throws NotFlagTransitive.
std::vector<Polarity> find_polarities(const IncidenceStructure& inc, const GroupTable& group);

// Bipartite incidence graph: points 0..v-1 then blocks v..v+b-1.
Graph incidence_graph(const IncidenceStructure& inc);
// Point bijection and block bijection carrying flags to flags, if any.
std::optional<std::pair<std::vector<Point>, std::vector<BlockId>>> design_isomorphism(
    const IncidenceStructure& first, const IncidenceStructure& second);

// Design file: "points: <n>", optional "label <i> <text>", then
// "block <name>: p1 p2 ..." with 1-based points.
IncidenceStructure read_design(std::istream& in);
IncidenceStructure read_design_file(const std::string& path);
void write_design(std::ostream& out, const IncidenceStructure& inc);

}  // namespace sgk
