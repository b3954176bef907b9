#pragma once

// Random instances shared by the oracle property tests and the acceptance
// suite.

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "sispread/generators.hpp"
#include "sispread/iet.hpp"
#include "sispread/rng.hpp"
#include "sispread/temporal.hpp"

namespace cases {

using namespace sispread;

inline RoleGraph white_graph(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::vector<NodeSpec> nodes;
  for (NodeId i = 0; i < n; ++i) nodes.push_back({i, NodeRole::White});
  return RoleGraph::build(nodes, edges);
}

struct ReplayCase {
  RoleGraph g;
  EventLog log;
  std::vector<oracle::Contact> contacts;
  NodeIndex source = 0;
  double t0 = 0.0;
  bool periodic = false;
};

/// Up to 8 nodes and 50 events on half-unit times, so simultaneous contacts
/// are common.
inline ReplayCase random_replay_case(Rng& rng) {
  const std::size_t n = 2 + uniform_index(rng, 7);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (bernoulli(rng, 0.4)) edges.emplace_back(u, v);
    }
  }
  if (edges.empty()) edges.emplace_back(0, 1);
  const double length = 1.0 + static_cast<double>(uniform_index(rng, 20));
  std::vector<Event> events;
  const std::size_t count = uniform_index(rng, 51);
  for (std::size_t i = 0; i < count; ++i) {
    auto [u, v] = edges[uniform_index(rng, edges.size())];
    if (bernoulli(rng, 0.5)) std::swap(u, v);
    events.push_back({u, v, std::floor(uniform01(rng) * length * 2.0) / 2.0, 0.0});
  }
  ReplayCase c{white_graph(n, edges), EventLog(std::move(events), {0.0, length}), {}, 0, 0.0, bernoulli(rng, 0.5)};
  for (const Event& e : c.log.events()) c.contacts.push_back({*c.g.index_of(e.u), *c.g.index_of(e.v), e.start});
  c.source = static_cast<NodeIndex>(uniform_index(rng, n));
  c.t0 = std::floor(uniform01(rng) * length * 4.0) / 4.0;
  return c;
}

struct WeightedCase {
  RoleGraph g;
  std::vector<double> weight;  ///< per edge index
  std::vector<oracle::WeightedEdge> edges;
  NodeIndex source = 0;
};

/// Up to 50 nodes with power-law weights.
inline WeightedCase random_weighted_case(Rng& rng) {
  const std::size_t n = 2 + uniform_index(rng, 49);
  WeightedCase c;
  c.g = gen_er(n, std::min(1.0 + uniform01(rng) * 4.0, 0.9 * static_cast<double>(n - 1)), rng());
  const auto dist = IetDistribution::power_law(0.008, 1.2);
  for (EdgeIndex e = 0; e < c.g.num_edges(); ++e) {
    c.weight.push_back(dist.sample(rng));
    c.edges.push_back({c.g.edge(e).first, c.g.edge(e).second, c.weight.back()});
  }
  c.source = static_cast<NodeIndex>(uniform_index(rng, n));
  return c;
}

}  // namespace cases
