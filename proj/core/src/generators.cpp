#include "sispread/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sispread/rng.hpp"

namespace sispread {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::LatticeNNN: return "lattice";
    case ModelKind::ER: return "er";
    case ModelKind::BA: return "ba";
    case ModelKind::Kumpula: return "kumpula";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view text) {
  if (text == "lattice") return ModelKind::LatticeNNN;
  if (text == "er") return ModelKind::ER;
  if (text == "ba") return ModelKind::BA;
  if (text == "kumpula") return ModelKind::Kumpula;
  throw std::invalid_argument("unknown model '" + std::string(text) + "' (expected lattice, er, ba or kumpula)");
}

namespace {

std::size_t exact_sqrt(std::size_t n) {
  auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  return side * side == n ? side : 0;
}

std::vector<NodeSpec> model_nodes(std::size_t n) {
  std::vector<NodeSpec> nodes(n);
  for (std::size_t i = 0; i < n; ++i) nodes[i] = {i, NodeRole::Model};
  return nodes;
}

}  // namespace

void ModelSpec::validate() const {
  if (n < 2) throw std::invalid_argument("model needs n >= 2");
  switch (kind) {
    case ModelKind::LatticeNNN:
      if (exact_sqrt(n) < 3) throw std::invalid_argument("lattice n must be a perfect square of a side >= 3");
      break;
    case ModelKind::ER:
      if (!(avg_degree > 0.0) || !(avg_degree < static_cast<double>(n - 1))) {
        throw std::invalid_argument("ER average degree must lie in (0, n-1)");
      }
      break;
    case ModelKind::BA:
      if (m < 1 || m >= n) throw std::invalid_argument("BA needs 1 <= m < n");
      break;
    case ModelKind::Kumpula:
      break;
  }
}

RoleGraph gen_lattice_nnn(std::size_t side) {
  if (side < 3) throw std::invalid_argument("lattice side must be >= 3");
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  edges.reserve(side * side * 6);
  auto id = [side](std::size_t i, std::size_t j) { return static_cast<NodeIndex>(i * side + j); };
  // Offsets with |di| + |dj| in {1, 2}, one representative per undirected pair.
  constexpr int offsets[6][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}, {0, 2}, {2, 0}};
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      for (const auto& d : offsets) {
        const auto ii = static_cast<long long>(i) + d[0];
        const auto jj = static_cast<long long>(j) + d[1];
        if (ii < 0 || jj < 0 || ii >= static_cast<long long>(side) || jj >= static_cast<long long>(side)) continue;
        edges.emplace_back(id(i, j), id(static_cast<std::size_t>(ii), static_cast<std::size_t>(jj)));
      }
    }
  }
  return RoleGraph::from_indices(model_nodes(side * side), std::move(edges));
}

RoleGraph gen_er(std::size_t n, double target_avg_degree, std::uint64_t seed) {
  ModelSpec{.kind = ModelKind::ER, .n = n, .avg_degree = target_avg_degree}.validate();
  const double p = target_avg_degree / static_cast<double>(n - 1);
  Rng rng(seed);
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * static_cast<double>(n - 1) / 2 * 1.1) + 16);
  // Geometric skipping over the lower triangle (Batagelj and Brandes).
  const double log_q = std::log1p(-p);
  long long v = 1;
  long long w = -1;
  const auto nn = static_cast<long long>(n);
  while (v < nn) {
    const double r = uniform01(rng);
    w += 1 + static_cast<long long>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace_back(static_cast<NodeIndex>(w), static_cast<NodeIndex>(v));
  }
  return RoleGraph::from_indices(model_nodes(n), std::move(edges));
}

RoleGraph gen_ba(std::size_t n, std::size_t m, std::uint64_t seed) {
  ModelSpec{.kind = ModelKind::BA, .n = n, .m = m}.validate();
  Rng rng(seed);
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  edges.reserve(m * (m + 1) / 2 + (n - m - 1) * m);
  // Every edge endpoint appears once, so a uniform pick is degree-proportional.
  std::vector<NodeIndex> endpoints;
  endpoints.reserve(2 * edges.capacity());
  for (NodeIndex u = 0; u <= m; ++u) {
    for (NodeIndex v = u + 1; v <= m; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<NodeIndex> targets;
  for (auto v = static_cast<NodeIndex>(m + 1); v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      NodeIndex t = endpoints[uniform_index(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeIndex t : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return RoleGraph::from_indices(model_nodes(n), std::move(edges));
}

RoleGraph generate(const ModelSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case ModelKind::LatticeNNN: return gen_lattice_nnn(exact_sqrt(spec.n));
    case ModelKind::ER: return gen_er(spec.n, spec.avg_degree, spec.seed);
    case ModelKind::BA: return gen_ba(spec.n, spec.m, spec.seed);
    case ModelKind::Kumpula: return gen_kumpula(spec.n, spec.kumpula, spec.seed).graph;
  }
  throw std::invalid_argument("unknown model kind");
}

RoleGraph dilute(const RoleGraph& g, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("dilution probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<std::pair<NodeIndex, NodeIndex>> kept;
  kept.reserve(g.num_edges());
  for (auto e : g.edges()) {
    if (!bernoulli(rng, p)) kept.push_back(e);
  }
  auto nodes = g.node_specs();
  for (auto& node : nodes) node.role = NodeRole::White;
  return RoleGraph::from_indices(std::move(nodes), std::move(kept));
}

RoleGraph add_bridges(const RoleGraph& g_w, std::size_t n_bridges, std::uint64_t seed) {
  std::vector<NodeIndex> whites;
  for (NodeIndex i = 0; i < g_w.num_nodes(); ++i) {
    if (counts_as_white(g_w.role(i))) whites.push_back(i);
  }
  if (whites.size() < 2) throw std::invalid_argument("add_bridges needs at least two white nodes");

  Rng rng(seed);
  auto nodes = g_w.node_specs();
  std::vector<std::pair<NodeIndex, NodeIndex>> edges(g_w.edges().begin(), g_w.edges().end());
  edges.reserve(edges.size() + 2 * n_bridges);
  const NodeId first_id = nodes.empty() ? 0 : nodes.back().id + 1;
  for (std::size_t b = 0; b < n_bridges; ++b) {
    const auto bridge = static_cast<NodeIndex>(nodes.size());
    nodes.push_back({first_id + b, NodeRole::Grey});
    const auto a = uniform_index(rng, whites.size());
    auto c = uniform_index(rng, whites.size() - 1);
    if (c >= a) ++c;
    edges.emplace_back(whites[a], bridge);
    edges.emplace_back(whites[c], bridge);
  }
  return RoleGraph::from_indices(std::move(nodes), std::move(edges));
}

}  // namespace sispread
