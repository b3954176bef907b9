#include "sispread/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sispread/error.hpp"

namespace sispread {

std::string_view to_string(NodeRole role) {
  switch (role) {
    case NodeRole::White: return "white";
    case NodeRole::Grey: return "grey";
    case NodeRole::Black: return "black";
    case NodeRole::Model: return "model";
  }
  return "unknown";
}

NodeRole parse_role(std::string_view text) {
  if (text == "white") return NodeRole::White;
  if (text == "grey") return NodeRole::Grey;
  if (text == "black") return NodeRole::Black;
  if (text == "model") return NodeRole::Model;
  throw DataError("unknown node role '" + std::string(text) + "'");
}

RoleGraph RoleGraph::build(std::vector<NodeSpec> nodes,
                           std::span<const std::pair<NodeId, NodeId>> edges) {
  std::unordered_map<NodeId, NodeIndex> position;
  position.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!position.emplace(nodes[i].id, static_cast<NodeIndex>(i)).second) {
      throw std::invalid_argument("duplicate node id " + std::to_string(nodes[i].id));
    }
  }
  std::vector<std::pair<NodeIndex, NodeIndex>> indexed;
  indexed.reserve(edges.size());
  for (auto [u, v] : edges) {
    auto iu = position.find(u);
    auto iv = position.find(v);
    if (iu == position.end() || iv == position.end()) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") references an unknown node");
    }
    indexed.emplace_back(iu->second, iv->second);
  }
  return from_indices(std::move(nodes), std::move(indexed));
}

RoleGraph RoleGraph::from_indices(std::vector<NodeSpec> nodes,
                                  std::vector<std::pair<NodeIndex, NodeIndex>> edges) {
  const std::size_t n = nodes.size();
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
  }

  // Canonical node order: ascending id.
  if (!std::is_sorted(nodes.begin(), nodes.end(),
                      [](const NodeSpec& a, const NodeSpec& b) { return a.id < b.id; })) {
    std::vector<NodeIndex> order(n);
    std::iota(order.begin(), order.end(), NodeIndex{0});
    std::sort(order.begin(), order.end(),
              [&](NodeIndex a, NodeIndex b) { return nodes[a].id < nodes[b].id; });
    std::vector<NodeIndex> rank(n);
    std::vector<NodeSpec> sorted(n);
    for (NodeIndex r = 0; r < n; ++r) {
      rank[order[r]] = r;
      sorted[r] = nodes[order[r]];
    }
    nodes = std::move(sorted);
    for (auto& [u, v] : edges) {
      u = rank[u];
      v = rank[v];
    }
  }

  RoleGraph g;
  g.ids_.reserve(n);
  g.roles_.reserve(n);
  g.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && nodes[i].id == nodes[i - 1].id) {
      throw std::invalid_argument("duplicate node id " + std::to_string(nodes[i].id));
    }
    g.ids_.push_back(nodes[i].id);
    g.roles_.push_back(nodes[i].role);
    g.index_.emplace(nodes[i].id, static_cast<NodeIndex>(i));
  }

  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(g.ids_[u]));
    if (is_external(g.roles_[u]) && is_external(g.roles_[v])) {
      throw std::invalid_argument("edge (" + std::to_string(g.ids_[u]) + "," +
                                  std::to_string(g.ids_[v]) + ") joins two external nodes");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges_ = std::move(edges);

  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : g.edges_) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adjacency_.resize(2 * g.edges_.size());
  g.adjacency_edges_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in edge order leaves every
  // adjacency list sorted by neighbour index.
  for (EdgeIndex e = 0; e < g.edges_.size(); ++e) {
    auto [u, v] = g.edges_[e];
    g.adjacency_[cursor[v]] = u;
    g.adjacency_edges_[cursor[v]++] = e;
  }
  for (EdgeIndex e = 0; e < g.edges_.size(); ++e) {
    auto [u, v] = g.edges_[e];
    g.adjacency_[cursor[u]] = v;
    g.adjacency_edges_[cursor[u]++] = e;
  }
  return g;
}

std::optional<NodeIndex> RoleGraph::index_of(NodeId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> RoleGraph::find_edge(NodeIndex u, NodeIndex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
}

std::vector<NodeSpec> RoleGraph::node_specs() const {
  std::vector<NodeSpec> out;
  out.reserve(num_nodes());
  for (NodeIndex i = 0; i < num_nodes(); ++i) out.push_back({ids_[i], roles_[i]});
  return out;
}

ComponentLabeling components(const RoleGraph& g) {
  constexpr auto unset = std::uint32_t(-1);
  ComponentLabeling out;
  out.component.assign(g.num_nodes(), unset);
  std::vector<NodeIndex> stack;
  for (NodeIndex start = 0; start < g.num_nodes(); ++start) {
    if (out.component[start] != unset) continue;
    const auto id = static_cast<std::uint32_t>(out.sizes.size());
    std::size_t size = 0;
    out.component[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      NodeIndex u = stack.back();
      stack.pop_back();
      ++size;
      for (NodeIndex v : g.neighbors(u)) {
        if (out.component[v] == unset) {
          out.component[v] = id;
          stack.push_back(v);
        }
      }
    }
    out.sizes.push_back(size);
    if (!out.largest || size > out.sizes[*out.largest]) out.largest = id;
  }
  return out;
}

double percolation_fraction(const RoleGraph& g) {
  if (g.empty()) throw std::invalid_argument("percolation_fraction of an empty graph");
  return static_cast<double>(components(g).largest_size()) / static_cast<double>(g.num_nodes());
}

double avg_degree(const RoleGraph& g, std::optional<NodeRole> role_filter) {
  std::size_t count = 0;
  std::size_t degree_sum = 0;
  for (NodeIndex i = 0; i < g.num_nodes(); ++i) {
    if (role_filter && g.role(i) != *role_filter) continue;
    ++count;
    degree_sum += g.degree(i);
  }
  if (count == 0) throw std::invalid_argument("avg_degree: no node matches the role filter");
  return static_cast<double>(degree_sum) / static_cast<double>(count);
}

RoleGraph prune_degree_one_externals(const RoleGraph& g) {
  return induced_subgraph(g, [&](NodeIndex i) { return !(is_external(g.role(i)) && g.degree(i) == 1); });
}

RoleGraph prune_degree_one_externals_fixpoint(const RoleGraph& g) {
  RoleGraph current = prune_degree_one_externals(g);
  while (true) {
    RoleGraph next = prune_degree_one_externals(current);
    if (next.num_nodes() == current.num_nodes()) return current;
    current = std::move(next);
  }
}

double average_clustering(const RoleGraph& g) {
  if (g.empty()) return 0.0;
  double total = 0.0;
  std::vector<char> marked(g.num_nodes(), 0);
  for (NodeIndex u = 0; u < g.num_nodes(); ++u) {
    const auto k = g.degree(u);
    if (k < 2) continue;
    auto nb = g.neighbors(u);
    for (NodeIndex v : nb) marked[v] = 1;
    std::size_t links = 0;
    for (NodeIndex v : nb) {
      for (NodeIndex w : g.neighbors(v)) links += marked[w];
    }
    for (NodeIndex v : nb) marked[v] = 0;
    // Every link among neighbours was seen from both ends.
    total += static_cast<double>(links) / static_cast<double>(k * (k - 1));
  }
  return total / static_cast<double>(g.num_nodes());
}

}  // namespace sispread
