#include <gtest/gtest.h>

#include <sstream>

#include "sispread/error.hpp"
#include "sispread/graph.hpp"
#include "sispread/graph_io.hpp"
#include "sispread/generators.hpp"
#include "sispread/rng.hpp"

namespace sispread {
namespace {

using Edges = std::vector<std::pair<NodeId, NodeId>>;

std::vector<NodeSpec> whites(std::initializer_list<NodeId> ids) {
  std::vector<NodeSpec> out;
  for (NodeId id : ids) out.push_back({id, NodeRole::White});
  return out;
}

TEST(BuildGraph, ReversedDuplicateCollapses) {
  Edges edges{{1, 2}, {2, 1}};
  auto g = RoleGraph::build(whites({1, 2, 3}), edges);
  EXPECT_EQ(g.num_nodes(), 3u);
  EXPECT_EQ(g.num_edges(), 1u);
}

TEST(BuildGraph, RejectsGreyGreyEdge) {
  Edges edges{{10, 11}};
  std::vector<NodeSpec> nodes{{10, NodeRole::Grey}, {11, NodeRole::Grey}};
  EXPECT_THROW(RoleGraph::build(nodes, edges), std::invalid_argument);
  nodes[1].role = NodeRole::Black;
  EXPECT_THROW(RoleGraph::build(nodes, edges), std::invalid_argument);
}

TEST(BuildGraph, EmptyEdgeListGivesIsolatedNodes) {
  auto g = RoleGraph::build(whites({5, 6}), {});
  EXPECT_EQ(g.num_edges(), 0u);
  EXPECT_EQ(g.degree(0), 0u);
  EXPECT_EQ(g.degree(1), 0u);
}

TEST(BuildGraph, RejectsSelfLoopsUnknownIdsAndDuplicates) {
  Edges loop{{1, 1}};
  EXPECT_THROW(RoleGraph::build(whites({1}), loop), std::invalid_argument);
  Edges unknown{{1, 9}};
  EXPECT_THROW(RoleGraph::build(whites({1, 2}), unknown), std::invalid_argument);
  EXPECT_THROW(RoleGraph::build(whites({1, 1}), {}), std::invalid_argument);
}

TEST(BuildGraph, NodesSortedById) {
  Edges edges{{30, 10}};
  auto g = RoleGraph::build(whites({30, 20, 10}), edges);
  EXPECT_EQ(g.id(0), 10u);
  EXPECT_EQ(g.id(2), 30u);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_FALSE(g.has_edge(0, 1));
}

TEST(Components, PathPlusIsolated) {
  Edges edges{{1, 2}, {2, 3}};
  auto g = RoleGraph::build(whites({1, 2, 3, 4}), edges);
  auto c = components(g);
  ASSERT_EQ(c.sizes.size(), 2u);
  EXPECT_EQ(c.largest_size(), 3u);
  EXPECT_EQ(c.component[0], *c.largest);
  EXPECT_EQ(c.component[2], *c.largest);
  EXPECT_NE(c.component[3], *c.largest);
}

TEST(Components, EmptyGraph) {
  auto c = components(RoleGraph{});
  EXPECT_TRUE(c.component.empty());
  EXPECT_FALSE(c.largest.has_value());
}

TEST(Components, TieGoesToSmallestNodeId) {
  Edges edges{{7, 8}, {8, 9}, {7, 9}, {1, 2}, {2, 3}, {1, 3}};
  auto g = RoleGraph::build(whites({9, 8, 7, 3, 2, 1}), edges);
  auto c = components(g);
  EXPECT_EQ(c.sizes[*c.largest], 3u);
  EXPECT_EQ(c.component[*g.index_of(1)], *c.largest);
}

TEST(Percolation, FractionOfLargestComponent) {
  Edges edges{{1, 2}, {2, 3}, {4, 5}};
  EXPECT_DOUBLE_EQ(percolation_fraction(RoleGraph::build(whites({1, 2, 3, 4, 5}), edges)), 0.6);
  Edges connected{{1, 2}, {2, 3}};
  EXPECT_DOUBLE_EQ(percolation_fraction(RoleGraph::build(whites({1, 2, 3}), connected)), 1.0);
  EXPECT_THROW(percolation_fraction(RoleGraph{}), std::invalid_argument);
}

TEST(Percolation, DenseErHasGiantComponent) {
  // Direct component count on a generated instance.
  auto g = gen_er(5000, 4.0, 11);
  EXPECT_GE(percolation_fraction(g), 0.95);
}

TEST(AvgDegree, RoleFilter) {
  Edges edges{{1, 2}, {1, 3}, {1, 4}};
  std::vector<NodeSpec> nodes{{1, NodeRole::White}, {2, NodeRole::Black}, {3, NodeRole::Black}, {4, NodeRole::Black}};
  auto g = RoleGraph::build(nodes, edges);
  EXPECT_DOUBLE_EQ(avg_degree(g, NodeRole::White), 3.0);
  EXPECT_DOUBLE_EQ(avg_degree(g, NodeRole::Black), 1.0);
  EXPECT_THROW(avg_degree(g, NodeRole::Grey), std::invalid_argument);
}

TEST(AvgDegree, TriangleUnfiltered) {
  Edges edges{{1, 2}, {2, 3}, {1, 3}};
  EXPECT_DOUBLE_EQ(avg_degree(RoleGraph::build(whites({1, 2, 3}), edges)), 2.0);
}

TEST(Prune, DegreeOneBlackRemoved) {
  Edges edges{{1, 2}};
  auto g = RoleGraph::build({{1, NodeRole::White}, {2, NodeRole::Black}}, edges);
  auto pruned = prune_degree_one_externals(g);
  EXPECT_EQ(pruned.num_nodes(), 1u);
  EXPECT_EQ(pruned.num_edges(), 0u);
  EXPECT_EQ(pruned.id(0), 1u);
}

TEST(Prune, BridgeOfDegreeTwoKept) {
  Edges edges{{1, 2}, {2, 3}};
  auto g = RoleGraph::build({{1, NodeRole::White}, {2, NodeRole::Black}, {3, NodeRole::White}}, edges);
  auto pruned = prune_degree_one_externals(g);
  EXPECT_EQ(pruned.num_nodes(), 3u);
  EXPECT_EQ(pruned.num_edges(), 2u);
}

TEST(Prune, LeafRemovedBridgeKept) {
  // white 1 - black 2 - white 3, black leaf 4 on white 1.
  Edges edges{{1, 2}, {2, 3}, {1, 4}};
  auto g = RoleGraph::build(
      {{1, NodeRole::White}, {2, NodeRole::Black}, {3, NodeRole::White}, {4, NodeRole::Black}}, edges);
  auto pruned = prune_degree_one_externals(g);
  EXPECT_EQ(pruned.num_nodes(), 3u);
  EXPECT_FALSE(pruned.index_of(4).has_value());
  EXPECT_TRUE(pruned.index_of(2).has_value());
}

TEST(Prune, TwoLevelChainSinglePass) {
  // white 1 - grey 2 - white 3 - black 4; only the leaf 4 goes, and white 3
  // keeps its place with degree 1.
  Edges edges{{1, 2}, {2, 3}, {3, 4}};
  auto g = RoleGraph::build(
      {{1, NodeRole::White}, {2, NodeRole::Grey}, {3, NodeRole::White}, {4, NodeRole::Black}}, edges);
  auto once = prune_degree_one_externals(g);
  EXPECT_FALSE(once.index_of(4).has_value());
  ASSERT_TRUE(once.index_of(2).has_value());
  EXPECT_EQ(once.degree(*once.index_of(2)), 2u);
  EXPECT_EQ(once.degree(*once.index_of(3)), 1u);
  EXPECT_EQ(once.num_edges(), 2u);
}

TEST(Prune, SinglePassMatchesFixpointOnValidGraphs) {
  // Externals only neighbour whites, which are never removed, so one pass
  // cannot expose a new degree-1 external.
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<NodeSpec> nodes;
    for (NodeId i = 0; i < 12; ++i) {
      nodes.push_back({i, i < 5 ? NodeRole::White : (i % 2 ? NodeRole::Grey : NodeRole::Black)});
    }
    Edges edges;
    for (NodeId u = 0; u < 12; ++u) {
      for (NodeId v = u + 1; v < 12; ++v) {
        if ((u < 5 || v < 5) && bernoulli(rng, 0.2)) edges.emplace_back(u, v);
      }
    }
    auto g = RoleGraph::build(nodes, edges);
    auto once = prune_degree_one_externals(g);
    auto fix = prune_degree_one_externals_fixpoint(g);
    EXPECT_EQ(once.num_nodes(), fix.num_nodes());
    EXPECT_EQ(once.num_edges(), fix.num_edges());
    for (NodeIndex i = 0; i < once.num_nodes(); ++i) {
      if (is_external(once.role(i))) EXPECT_NE(once.degree(i), 1u);
    }
  }
}

TEST(GraphProperties, PartitionAndDegreeSum) {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = gen_er(200, 1.0 + 3.0 * uniform01(rng), rng());
    auto c = components(g);
    std::size_t total = 0;
    for (auto s : c.sizes) total += s;
    EXPECT_EQ(total, g.num_nodes());
    for (auto [u, v] : g.edges()) EXPECT_EQ(c.component[u], c.component[v]);
    EXPECT_DOUBLE_EQ(avg_degree(g), 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(g.num_nodes()));
    const double p = percolation_fraction(g);
    EXPECT_GT(p, 0.0);
    EXPECT_LE(p, 1.0);
    EXPECT_EQ(p == 1.0, c.sizes.size() == 1);
  }
}

TEST(EdgeList, RoundTripPreservesGraph) {
  Edges edges{{1, 2}, {2, 3}, {1, 4}};
  auto g = RoleGraph::build(
      {{1, NodeRole::White}, {2, NodeRole::Black}, {3, NodeRole::White}, {4, NodeRole::Grey}}, edges);
  std::stringstream buffer;
  write_edge_list(buffer, g);
  auto back = read_edge_list(buffer);
  ASSERT_EQ(back.num_nodes(), g.num_nodes());
  ASSERT_EQ(back.num_edges(), g.num_edges());
  for (NodeIndex i = 0; i < g.num_nodes(); ++i) {
    EXPECT_EQ(back.id(i), g.id(i));
    EXPECT_EQ(back.role(i), g.role(i));
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) EXPECT_EQ(back.edges()[e], g.edges()[e]);
}

TEST(EdgeList, FormatIsDocumentedText) {
  Edges edges{{4, 7}};
  auto g = RoleGraph::build({{7, NodeRole::White}, {4, NodeRole::Grey}}, edges);
  std::stringstream buffer;
  write_edge_list(buffer, g);
  EXPECT_EQ(buffer.str(), "# sispread edge-list\n# node 4 grey\n# node 7 white\n4 7\n");
}

TEST(EdgeList, ErrorsNameTheLine) {
  std::stringstream bad("# node 1 white\n# node 2 purple\n");
  try {
    read_edge_list(bad);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::stringstream undeclared("# node 1 white\n1 2\n");
  EXPECT_THROW(read_edge_list(undeclared), DataError);
}

TEST(Clustering, TriangleAndStar) {
  Edges tri{{1, 2}, {2, 3}, {1, 3}};
  EXPECT_DOUBLE_EQ(average_clustering(RoleGraph::build(whites({1, 2, 3}), tri)), 1.0);
  Edges star{{1, 2}, {1, 3}, {1, 4}};
  EXPECT_DOUBLE_EQ(average_clustering(RoleGraph::build(whites({1, 2, 3, 4}), star)), 0.0);
}

}  // namespace
}  // namespace sispread
