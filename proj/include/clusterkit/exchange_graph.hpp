// Bounded breadth-first enumeration of the exchange graph: unlabeled seeds
// (canonical keys) as nodes, single mutations as edges.
#pragma once

#include "clusterkit/parallel.hpp"
#include "clusterkit/seed.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace clusterkit {

struct ExploreOptions {
  std::size_t max_nodes = 10000;
  std::size_t max_depth = 64;
  unsigned jobs = 1;
};

class ExchangeGraph {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Node {
    Seed seed;   // first-discovered labeled representative
    SeedKey key;
    std::vector<std::size_t> neighbors;  // per mutation direction; npos = unexplored
  };

  std::vector<Node> nodes;  // BFS discovery order
  std::unordered_map<SeedKey, std::size_t> index;
  std::size_t initial = 0;
  bool complete = false;

  int rank() const { return nodes.at(initial).seed.rank(); }
};

/// BFS over all mutation directions with deduplication by canonical key.
/// Frontier seeds are mutated in parallel when jobs > 1, but discovered nodes
/// are merged serially in (BFS order, direction) order, so the resulting graph
/// is identical at any job count. When a bound binds, the partial graph is
/// returned with complete = false.
inline ExchangeGraph explore(const Seed& start, const ExploreOptions& options = {}) {
  const int n = start.rank();
  ExchangeGraph g;
  if (options.max_nodes == 0) return g;

  g.nodes.push_back({start, canonical_key(start), std::vector<std::size_t>(n, ExchangeGraph::npos)});
  g.index.emplace(g.nodes[0].key, 0);
  g.initial = 0;

  struct Candidate {
    Seed seed;
    SeedKey key;
  };

  std::vector<std::size_t> frontier{0};
  std::size_t depth = 0;
  bool truncated = false;
  while (!frontier.empty() && !truncated) {
    if (depth >= options.max_depth) {
      truncated = true;  // frontier nodes would have to expand past the bound
      break;
    }
    std::vector<std::optional<Candidate>> found(frontier.size() * n);
    parallel_for(frontier.size(), options.jobs, [&](std::size_t fi) {
      const Seed& u = g.nodes[frontier[fi]].seed;
      for (int k = 0; k < n; ++k) {
        Seed next = mutate_seed(u, k);
        SeedKey key = canonical_key(next);
        found[fi * n + k] = Candidate{std::move(next), std::move(key)};
      }
    });

    std::vector<std::size_t> next_frontier;
    for (std::size_t fi = 0; fi < frontier.size() && !truncated; ++fi) {
      const std::size_t u = frontier[fi];
      for (int k = 0; k < n; ++k) {
        Candidate& cand = *found[fi * n + k];
        std::size_t v;
        if (auto it = g.index.find(cand.key); it != g.index.end()) {
          v = it->second;
        } else {
          if (g.nodes.size() >= options.max_nodes) {
            truncated = true;
            break;
          }
          v = g.nodes.size();
          g.index.emplace(cand.key, v);
          g.nodes.push_back({std::move(cand.seed), std::move(cand.key),
                             std::vector<std::size_t>(n, ExchangeGraph::npos)});
          next_frontier.push_back(v);
        }
        g.nodes[u].neighbors[k] = v;
      }
    }
    frontier = std::move(next_frontier);
    ++depth;
  }
  g.complete = !truncated;
  return g;
}

/// All cluster variables of a fully enumerated graph, deduplicated and sorted
/// in the canonical Laurent order. Partial graphs are rejected: their variable
/// set would be understated.
inline std::vector<LaurentPolynomial> cluster_variables(const ExchangeGraph& g) {
  if (!g.complete)
    throw std::invalid_argument("cluster_variables: exchange graph is incomplete");
  std::vector<LaurentPolynomial> vars;
  for (const auto& node : g.nodes)
    for (const auto& entry : node.seed.cluster()) vars.push_back(entry);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

}  // namespace clusterkit
