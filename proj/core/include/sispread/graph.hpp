#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sispread {

using NodeId = std::uint64_t;
using NodeIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;

/// White: company user with a city ZIP. Grey: company user without ZIP.
/// Black: non-company user. Model: synthetic node of a topology model, counted
/// like a white node.
enum class NodeRole : std::uint8_t { White, Grey, Black, Model };

std::string_view to_string(NodeRole role);
/// Accepts the lower-case names produced by to_string. Throws DataError.
NodeRole parse_role(std::string_view text);

/// Grey and black nodes never link to each other.
constexpr bool is_external(NodeRole role) {
  return role == NodeRole::Grey || role == NodeRole::Black;
}

/// Nodes that count towards spreading curves.
constexpr bool counts_as_white(NodeRole role) {
  return role == NodeRole::White || role == NodeRole::Model;
}

struct NodeSpec {
  NodeId id;
  NodeRole role;
};

using RoleMap = std::unordered_map<NodeId, NodeRole>;

/// Immutable undirected simple graph with role-labelled nodes.
///
/// Nodes are stored sorted by id, so node index order agrees with id order.
/// Edges are stored once as (u, v) with u < v in lexicographic order and get
/// stable indices; adjacency lists are sorted by neighbour index.
class RoleGraph {
 public:
  RoleGraph() = default;

  /// Builds from opaque ids. Duplicate and reversed edges collapse. Throws
  /// std::invalid_argument on duplicate node ids, self-loops, unknown
  /// endpoints and edges between two external (grey/black) nodes.
  static RoleGraph build(std::vector<NodeSpec> nodes,
                         std::span<const std::pair<NodeId, NodeId>> edges);

  /// Same contract as build() but with edges given as positions into `nodes`.
  static RoleGraph from_indices(std::vector<NodeSpec> nodes,
                                std::vector<std::pair<NodeIndex, NodeIndex>> edges);

  std::size_t num_nodes() const noexcept { return ids_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return ids_.empty(); }

  NodeId id(NodeIndex i) const { return ids_[i]; }
  NodeRole role(NodeIndex i) const { return roles_[i]; }
  std::optional<NodeIndex> index_of(NodeId id) const;

  std::size_t degree(NodeIndex i) const { return offsets_[i + 1] - offsets_[i]; }
  std::span<const NodeIndex> neighbors(NodeIndex i) const {
    return {adjacency_.data() + offsets_[i], degree(i)};
  }
  /// Edge index of each entry of neighbors(i), position for position.
  std::span<const EdgeIndex> incident_edges(NodeIndex i) const {
    return {adjacency_edges_.data() + offsets_[i], degree(i)};
  }

  std::pair<NodeIndex, NodeIndex> edge(EdgeIndex e) const { return edges_[e]; }
  std::span<const std::pair<NodeIndex, NodeIndex>> edges() const { return edges_; }
  std::optional<EdgeIndex> find_edge(NodeIndex u, NodeIndex v) const;
  bool has_edge(NodeIndex u, NodeIndex v) const { return find_edge(u, v).has_value(); }

  std::span<const NodeId> ids() const { return ids_; }
  std::span<const NodeRole> roles() const { return roles_; }
  std::vector<NodeSpec> node_specs() const;

 private:
  std::vector<NodeId> ids_;
  std::vector<NodeRole> roles_;
  std::unordered_map<NodeId, NodeIndex> index_;
  std::vector<std::pair<NodeIndex, NodeIndex>> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeIndex> adjacency_;
  std::vector<EdgeIndex> adjacency_edges_;
};

struct ComponentLabeling {
  /// Component id per node index. Ids are numbered in order of each
  /// component's smallest node.
  std::vector<std::uint32_t> component;
  std::vector<std::size_t> sizes;
  /// Largest component; ties go to the smaller id. Empty for an empty graph.
  std::optional<std::uint32_t> largest;

  std::size_t largest_size() const { return largest ? sizes[*largest] : 0; }
};

ComponentLabeling components(const RoleGraph& g);

/// |LCC| / |V|. Throws std::invalid_argument for an empty graph.
double percolation_fraction(const RoleGraph& g);

/// Mean degree over nodes with the given role (all nodes when unset); degrees
/// count every incident edge. Throws std::invalid_argument if no node matches.
double avg_degree(const RoleGraph& g, std::optional<NodeRole> role_filter = std::nullopt);

/// Removes every grey/black node whose degree in `g` is exactly 1, in a single
/// pass. White and model nodes are never removed.
RoleGraph prune_degree_one_externals(const RoleGraph& g);

/// Repeats the single pass until no degree-1 external remains.
RoleGraph prune_degree_one_externals_fixpoint(const RoleGraph& g);

/// Subgraph induced on nodes for which keep(index) is true.
template <typename Pred>
RoleGraph induced_subgraph(const RoleGraph& g, Pred keep) {
  std::vector<NodeSpec> nodes;
  std::vector<NodeIndex> remap(g.num_nodes(), NodeIndex(-1));
  for (NodeIndex i = 0; i < g.num_nodes(); ++i) {
    if (keep(i)) {
      remap[i] = static_cast<NodeIndex>(nodes.size());
      nodes.push_back({g.id(i), g.role(i)});
    }
  }
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  for (auto [u, v] : g.edges()) {
    if (remap[u] != NodeIndex(-1) && remap[v] != NodeIndex(-1)) edges.emplace_back(remap[u], remap[v]);
  }
  return RoleGraph::from_indices(std::move(nodes), std::move(edges));
}

/// Average local clustering coefficient; nodes of degree < 2 contribute 0.
double average_clustering(const RoleGraph& g);

}  // namespace sispread
