#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sispread/graph.hpp"

namespace sispread {

enum class ModelKind { LatticeNNN, ER, BA, Kumpula };

std::string_view to_string(ModelKind kind);
/// Accepts "lattice", "er", "ba", "kumpula". Throws std::invalid_argument.
ModelKind parse_model_kind(std::string_view text);

/// Parameters of the weighted social-network model with local (triadic)
/// and global attachment plus node deletion.
struct KumpulaParams {
  double p_r = 0.0005;     ///< global attachment probability per node and sweep
  double p_d = 0.001;      ///< node deletion probability per node and sweep
  double p_delta = 0.05;   ///< probability of closing an open triangle
  double delta = 0.5;      ///< weight reinforcement
  double w0 = 1.0;         ///< weight of new links
  std::size_t sweeps = 25000;
};

struct ModelSpec {
  ModelKind kind = ModelKind::ER;
  std::size_t n = 5000;         ///< node count; a perfect square for the lattice
  double avg_degree = 12.0;     ///< ER target mean degree
  std::size_t m = 6;            ///< BA links per new node
  KumpulaParams kumpula{};
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument when parameters are out of range.
  void validate() const;
};

/// Side x side square lattice where nodes at Manhattan distance 1 or 2 are
/// linked. Node [i, j] (1-based) gets id (i-1)*side + (j-1). Throws for side < 3.
RoleGraph gen_lattice_nnn(std::size_t side);

/// G(n, p) with p = target_avg_degree / (n - 1).
RoleGraph gen_er(std::size_t n, double target_avg_degree, std::uint64_t seed);

/// Preferential attachment grown from a clique on m + 1 nodes.
RoleGraph gen_ba(std::size_t n, std::size_t m, std::uint64_t seed);

struct KumpulaResult {
  RoleGraph graph;
  /// Mean degree after each sweep.
  std::vector<double> degree_trace;
  /// Mean degree drifted by less than 1% over the last 10% of sweeps.
  bool stationary = false;
};

/// Runs the weighted model for params.sweeps sweeps from an empty graph and
/// returns the unweighted projection.
KumpulaResult gen_kumpula(std::size_t n, const KumpulaParams& params, std::uint64_t seed);

/// Bisects the reinforcement delta in [lo, hi] so that the final mean degree
/// hits target_k; mean degree falls as delta grows.
KumpulaParams calibrate_kumpula(std::size_t n, double target_k, KumpulaParams base, std::uint64_t seed,
                                double lo = 0.0, double hi = 1.0, int iterations = 8);

RoleGraph generate(const ModelSpec& spec);

/// Removes each edge independently with probability p and relabels every
/// node white. Isolated nodes stay.
RoleGraph dilute(const RoleGraph& g, double p, std::uint64_t seed);

/// Adds n_bridges grey nodes, each linked to two distinct white nodes drawn
/// uniformly. Bridge ids continue after the largest existing id.
RoleGraph add_bridges(const RoleGraph& g_w, std::size_t n_bridges, std::uint64_t seed);

}  // namespace sispread
