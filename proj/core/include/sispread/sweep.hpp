#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sispread/generators.hpp"
#include "sispread/iet.hpp"
#include "sispread/si.hpp"

namespace sispread {

enum class SyntheticKind { LinkDelay, Renewal };

struct SweepOptions {
  std::vector<double> p_grid;
  std::vector<IetDistribution> dists;
  std::size_t runs = 100;
  double bridges_ratio = 5.0;
  bool bridges = true;
  double p_inf_cutoff = 0.2;
  SyntheticKind mode = SyntheticKind::LinkDelay;
  double renewal_horizon = kNever;
  std::uint64_t master_seed = 1;
  std::size_t grid_points = 2000;
  unsigned workers = 1;
};

/// Row flags.
inline constexpr const char* kFlagOk = "ok";
inline constexpr const char* kFlagLowPInf = "low_p_inf";
inline constexpr const char* kFlagNoInitiator = "no_initiator";
inline constexpr const char* kFlagHorizon = "horizon";

struct SweepRow {
  std::string model;
  double p = 0.0;
  double avg_k_w = 0.0;
  double p_inf = 0.0;
  std::string dist;
  std::optional<double> tau_w;
  std::optional<double> tau;
  std::string flag = kFlagOk;
  std::size_t n_bridges = 0;
};

/// 0, step, 2*step, ..., 1 (inclusive, rounded to the step).
std::vector<double> p_grid(double step);

/// Everything measured for one dilution level of one base graph.
struct DilutionPoint {
  double p = 0.0;
  double avg_k_w = 0.0;
  double p_inf = 0.0;
  std::size_t n_bridges = 0;
  RoleGraph g_w;
  RoleGraph g;  ///< empty when bridges are disabled
};

/// Dilutes `base`, measures it and (optionally) attaches bridges. Seeds are
/// derived from (master_seed, stream).
DilutionPoint make_dilution_point(const RoleGraph& base, double p, const SweepOptions& options, std::uint64_t stream);

/// The ensemble mode used by sweeps for a distribution.
SpreadMode synthetic_mode(const SweepOptions& options, const IetDistribution& dist);

/// For each p: dilute the model graph, measure <k_w> and P_inf, add bridges,
/// then run ensembles on both graphs for every distribution. Rows come out in
/// (p, dist) order and do not depend on the worker count.
std::vector<SweepRow> sweep(const ModelSpec& model, const SweepOptions& options);

/// Same, on an already generated base graph.
std::vector<SweepRow> sweep(const RoleGraph& base, std::string_view model_name, const SweepOptions& options);

/// CSV with header model,p,avg_k_w,p_inf,dist,tau_w,tau,flag; reals at 9
/// significant digits, missing values empty.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows, bool header = true);

/// Least-squares slope of log tau_w against log <k_w> over rows flagged ok
/// for the given distribution. Unset with fewer than two usable rows.
std::optional<double> fit_tau_exponent(std::span<const SweepRow> rows, const std::string& dist);

/// Spearman rank correlation with average ranks for ties.
double spearman(std::span<const double> x, std::span<const double> y);

}  // namespace sispread
