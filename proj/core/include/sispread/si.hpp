#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "sispread/graph.hpp"
#include "sispread/iet.hpp"
#include "sispread/rng.hpp"
#include "sispread/temporal.hpp"

namespace sispread {

inline constexpr double kNever = std::numeric_limits<double>::infinity();

/// One SI realisation. Times are elapsed since the initiator was infected.
struct SpreadRun {
  NodeIndex initiator = 0;
  /// Per node index; kNever for nodes that were never reached.
  std::vector<double> infection_time;
  /// White (or model) nodes in the initiator's component.
  std::size_t denominator = 0;
};

/// Replays the recorded contacts of a log.
struct ReplayLog {
  EventLog log;
  bool periodic = true;
  /// Start of the process in log time; drawn uniformly from the span when unset.
  std::optional<double> fixed_t0;
};

/// One i.i.d. delay per link (first-passage percolation).
struct LinkDelay {
  IetDistribution dist;
};

/// A renewal sequence of contacts per link starting at time 0.
struct Renewal {
  IetDistribution dist;
  double horizon = kNever;
};

using SyntheticMode = std::variant<LinkDelay, Renewal>;
using SpreadMode = std::variant<ReplayLog, LinkDelay, Renewal>;

/// Nodes that may start a run: white nodes of degree >= 2 in the largest
/// component of g_w, ascending by index.
std::vector<NodeIndex> eligible_initiators(const RoleGraph& g_w);

/// Uniform over eligible_initiators(g_w). Throws NoInitiatorError.
NodeIndex select_initiator(const RoleGraph& g_w, Rng& rng);

/// A log's contacts mapped onto node indices of one graph.
class ReplaySchedule {
 public:
  struct Contact {
    NodeIndex u;
    NodeIndex v;
    double start;
  };

  /// Throws DataError when a contact is not an edge of g.
  ReplaySchedule(const RoleGraph& g, const EventLog& log);

  std::span<const Contact> contacts() const { return contacts_; }
  TimeSpan span() const { return span_; }

 private:
  std::vector<Contact> contacts_;
  TimeSpan span_;
};

/// Contacts are scanned in time order from t0. A contact at (unwrapped) time T
/// infects a susceptible endpoint when the other endpoint was infected at or
/// before T; simultaneous contacts chain. In periodic mode the log repeats
/// with the span's length until a full lap brings no new infection.
SpreadRun run_si_replay(const RoleGraph& g, const ReplaySchedule& schedule, NodeIndex initiator, double t0,
                        bool periodic);

/// Convenience overload by node id. Throws std::invalid_argument for an
/// unknown initiator.
SpreadRun run_si_replay(const RoleGraph& g, const EventLog& log, NodeId initiator, double t0, bool periodic);

/// Label-setting shortest paths where delay(e) is queried at most once per
/// edge, when the edge is first relaxed.
std::vector<double> first_passage_times(const RoleGraph& g, NodeIndex source,
                                        const std::function<double(EdgeIndex)>& delay);

/// Each edge carries contacts at t1 = x1, tk = t(k-1) + xk with gaps from
/// next_gap(); a node is infected at the first contact on an edge at or after
/// its neighbour's infection. Contacts beyond `horizon` are never generated.
std::vector<double> renewal_times(const RoleGraph& g, NodeIndex source, const std::function<double()>& next_gap,
                                  double horizon = kNever);

SpreadRun run_si_synthetic(const RoleGraph& g, const SyntheticMode& mode, NodeIndex initiator, Rng& rng);

/// White nodes in the component of `node`.
std::size_t white_component_size(const RoleGraph& g, NodeIndex node);

/// N(t) on the grid: infected white nodes by t over run.denominator.
std::vector<double> spreading_curve(const RoleGraph& g, const SpreadRun& run, std::span<const double> grid);

/// `points` log-spaced times from first to last inclusive.
std::vector<double> log_grid(double first, double last, std::size_t points);

struct EnsembleOptions {
  std::size_t runs = 100;
  std::uint64_t master_seed = 1;
  /// Used as is when non-empty; otherwise grid_points log-spaced times from
  /// the earliest positive to the latest finite infection time of all runs.
  std::vector<double> grid;
  std::size_t grid_points = 2000;
  /// 0 picks the hardware concurrency.
  unsigned workers = 1;
};

struct CurveEnsemble {
  std::vector<double> grid;
  std::vector<std::vector<double>> curves;
  std::vector<double> average;
  std::vector<NodeId> initiators;
  /// Unset when the average never reaches 1/2 on the grid.
  std::optional<double> tau;
};

/// Runs on g with initiators drawn from g_w (matched by node id). Run i uses
/// the random stream (master_seed, i), so results do not depend on workers.
CurveEnsemble ensemble(const RoleGraph& g, const RoleGraph& g_w, const SpreadMode& mode,
                       const EnsembleOptions& options);

/// First grid time where average >= 1/2, refined by linear interpolation with
/// the previous grid point. Throws HorizonError when 1/2 is never reached.
double characteristic_time(std::span<const double> grid, std::span<const double> average);

/// Pointwise q-quantile across the ensemble's curves (linear interpolation
/// between order statistics).
std::vector<double> curve_quantile(const CurveEnsemble& e, double q);

}  // namespace sispread
