#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgk/graph.hpp"

namespace sgk {

// Vertex bijection m with (u,v) an arc of `first` iff (m[u],m[v]) is an arc
// of `second`, or nullopt. Colour refinement plus individualisation with
// backtracking; deterministic.
std::optional<std::vector<Vertex>> are_isomorphic(const Graph& first, const Graph& second);

// Same, restricted to bijections that preserve the given vertex colours.
std::optional<std::vector<Vertex>> are_isomorphic(const Graph& first, const Graph& second,
                                                  std::span<const std::uint32_t> first_colors,
                                                  std::span<const std::uint32_t> second_colors);

}  // namespace sgk
