// Deliberately naive reference implementations used to cross-check the
// library. They work on raw image vectors and never call into sgk.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;  // 0-based images
using Edges = std::set<std::pair<int, int>>;

inline Perm compose(const Perm& a, const Perm& b) {  // a then b
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

inline Perm invert(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

inline Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Closure by multiplying every pair until nothing new appears.
inline std::set<Perm> closure(const std::vector<Perm>& gens, int n) {
  std::set<Perm> all{identity(n)};
  all.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> current(all.begin(), all.end());
    for (const auto& a : current) {
      for (const auto& b : current) {
        if (all.insert(compose(a, b)).second) grew = true;
      }
    }
  }
  return all;
}

inline std::set<int> orbit(const std::set<Perm>& group, int point) {
  std::set<int> out;
  for (const auto& g : group) out.insert(g[point]);
  return out;
}

inline bool adjacent(const Edges& e, int u, int v) { return e.count({u, v}) > 0; }

inline Edges symmetric(const std::vector<std::pair<int, int>>& edges) {
  Edges e;
  for (auto [u, v] : edges) {
    e.insert({u, v});
    e.insert({v, u});
  }
  return e;
}

// Tries all n! bijections.
inline bool isomorphic(int n, const Edges& a, int m, const Edges& b) {
  if (n != m || a.size() != b.size()) return false;
  Perm p = identity(n);
  do {
    bool ok = true;
    for (auto [u, v] : a) {
      if (!b.count({p[u], p[v]})) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline int components(int n, const Edges& e) {
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (comp[v] < 0 && e.count({u, v})) {
          comp[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }
  return count;
}

inline int girth(int n, const Edges& e) {
  int best = 1 << 20;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int u = queue[i];
      for (int v = 0; v < n; ++v) {
        if (!e.count({u, v})) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best;
}

// Every set partition of {0..n-1}, as block labels (restricted growth strings).
inline std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> labels(n, 0);
  auto rec = [&](auto&& self, int i, int max_label) -> void {
    if (i == n) {
      out.push_back(labels);
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      labels[i] = l;
      self(self, i + 1, std::max(max_label, l));
    }
  };
  if (n == 0) return {{}};
  labels[0] = 0;
  rec(rec, 1, 0);
  return out;
}

inline bool partition_invariant(const std::vector<int>& labels, const std::vector<Perm>& gens) {
  for (const auto& g : gens) {
    std::map<int, int> image;
    for (std::size_t p = 0; p < labels.size(); ++p) {
      auto [it, fresh] = image.emplace(labels[p], labels[g[p]]);
      if (!fresh && it->second != labels[g[p]]) return false;
    }
  }
  return true;
}

inline Edges random_graph(int n, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return symmetric(edges);
}

}  // namespace oracle
