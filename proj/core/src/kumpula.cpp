#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sispread/generators.hpp"
#include "sispread/rng.hpp"

namespace sispread {

namespace {

struct WeightedLink {
  NodeIndex to;
  double weight;
};

// Weighted adjacency kept as small unsorted vectors; degrees stay around ten
// so linear scans beat anything fancier.
class WeightedGraph {
 public:
  explicit WeightedGraph(std::size_t n) : adj_(n) {}

  std::size_t num_links() const { return links_; }
  const std::vector<WeightedLink>& links(NodeIndex i) const { return adj_[i]; }

  WeightedLink* find(NodeIndex u, NodeIndex v) {
    for (auto& l : adj_[u]) {
      if (l.to == v) return &l;
    }
    return nullptr;
  }

  void reinforce(NodeIndex u, NodeIndex v, double delta) {
    find(u, v)->weight += delta;
    find(v, u)->weight += delta;
  }

  void link(NodeIndex u, NodeIndex v, double w) {
    adj_[u].push_back({v, w});
    adj_[v].push_back({u, w});
    ++links_;
  }

  void isolate(NodeIndex u) {
    for (const auto& l : adj_[u]) {
      auto& other = adj_[l.to];
      auto it = std::find_if(other.begin(), other.end(), [u](const WeightedLink& x) { return x.to == u; });
      *it = other.back();
      other.pop_back();
    }
    links_ -= adj_[u].size();
    adj_[u].clear();
  }

  // Picks a neighbour of u with probability proportional to link weight,
  // skipping `exclude`. Returns nullptr when nothing is eligible.
  const WeightedLink* pick(NodeIndex u, NodeIndex exclude, Rng& rng) const {
    double total = 0.0;
    for (const auto& l : adj_[u]) {
      if (l.to != exclude) total += l.weight;
    }
    if (!(total > 0.0)) return nullptr;
    double r = uniform01(rng) * total;
    const WeightedLink* last = nullptr;
    for (const auto& l : adj_[u]) {
      if (l.to == exclude) continue;
      last = &l;
      r -= l.weight;
      if (r < 0.0) return &l;
    }
    return last;
  }

 private:
  std::vector<std::vector<WeightedLink>> adj_;
  std::size_t links_ = 0;
};

void local_attachment(WeightedGraph& g, NodeIndex i, const KumpulaParams& params, Rng& rng) {
  const WeightedLink* ij = g.pick(i, NodeIndex(-1), rng);
  if (!ij) return;
  const NodeIndex j = ij->to;
  const WeightedLink* jk = g.pick(j, i, rng);
  if (!jk) return;
  const NodeIndex k = jk->to;
  g.reinforce(i, j, params.delta);
  g.reinforce(j, k, params.delta);
  if (g.find(i, k)) {
    g.reinforce(i, k, params.delta);
  } else if (bernoulli(rng, params.p_delta)) {
    g.link(i, k, params.w0 + params.delta);
  }
}

void global_attachment(WeightedGraph& g, NodeIndex i, std::size_t n, const KumpulaParams& params, Rng& rng) {
  if (!g.links(i).empty() && !bernoulli(rng, params.p_r)) return;
  auto k = static_cast<NodeIndex>(uniform_index(rng, n - 1));
  if (k >= i) ++k;
  if (!g.find(i, k)) g.link(i, k, params.w0);
}

}  // namespace

KumpulaResult gen_kumpula(std::size_t n, const KumpulaParams& params, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("kumpula model needs n >= 2");
  auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!in_unit(params.p_r) || !in_unit(params.p_d) || !in_unit(params.p_delta) || !(params.delta >= 0.0) ||
      !(params.w0 > 0.0)) {
    throw std::invalid_argument("kumpula parameters out of range");
  }
  Rng rng(seed);
  WeightedGraph g(n);
  KumpulaResult result;
  result.degree_trace.reserve(params.sweeps);
  for (std::size_t sweep = 0; sweep < params.sweeps; ++sweep) {
    for (NodeIndex i = 0; i < n; ++i) {
      local_attachment(g, i, params, rng);
      global_attachment(g, i, n, params, rng);
    }
    for (NodeIndex i = 0; i < n; ++i) {
      if (bernoulli(rng, params.p_d)) g.isolate(i);
    }
    result.degree_trace.push_back(2.0 * static_cast<double>(g.num_links()) / static_cast<double>(n));
  }

  const std::size_t window = params.sweeps / 10;
  if (window >= 2) {
    const auto& trace = result.degree_trace;
    const std::size_t half = window / 2;
    double early = 0.0, late = 0.0;
    for (std::size_t s = trace.size() - window; s < trace.size() - half; ++s) early += trace[s];
    for (std::size_t s = trace.size() - half; s < trace.size(); ++s) late += trace[s];
    early /= static_cast<double>(window - half);
    late /= static_cast<double>(half);
    result.stationary = late > 0.0 && std::abs(late - early) < 0.01 * late;
  }

  std::vector<NodeSpec> nodes(n);
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  edges.reserve(g.num_links());
  for (NodeIndex i = 0; i < n; ++i) {
    nodes[i] = {i, NodeRole::Model};
    for (const auto& l : g.links(i)) {
      if (i < l.to) edges.emplace_back(i, l.to);
    }
  }
  result.graph = RoleGraph::from_indices(std::move(nodes), std::move(edges));
  return result;
}

KumpulaParams calibrate_kumpula(std::size_t n, double target_k, KumpulaParams base, std::uint64_t seed, double lo,
                                double hi, int iterations) {
  for (int it = 0; it < iterations; ++it) {
    base.delta = 0.5 * (lo + hi);
    const double k = gen_kumpula(n, base, seed).degree_trace.back();
    if (k > target_k) {
      lo = base.delta;
    } else {
      hi = base.delta;
    }
  }
  base.delta = 0.5 * (lo + hi);
  return base;
}

}  // namespace sispread
