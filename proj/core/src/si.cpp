#include "sispread/si.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include "sispread/error.hpp"
#include "sispread/parallel.hpp"

namespace sispread {

std::vector<NodeIndex> eligible_initiators(const RoleGraph& g_w) {
  std::vector<NodeIndex> out;
  const auto labels = components(g_w);
  if (!labels.largest) return out;
  for (NodeIndex i = 0; i < g_w.num_nodes(); ++i) {
    if (labels.component[i] == *labels.largest && counts_as_white(g_w.role(i)) && g_w.degree(i) >= 2) {
      out.push_back(i);
    }
  }
  return out;
}

NodeIndex select_initiator(const RoleGraph& g_w, Rng& rng) {
  const auto eligible = eligible_initiators(g_w);
  if (eligible.empty()) throw NoInitiatorError("no white node of degree >= 2 in the largest component");
  return eligible[uniform_index(rng, eligible.size())];
}

ReplaySchedule::ReplaySchedule(const RoleGraph& g, const EventLog& log) : span_(log.span()) {
  contacts_.reserve(log.size());
  for (const Event& e : log.events()) {
    auto u = g.index_of(e.u);
    auto v = g.index_of(e.v);
    if (!u || !v || !g.has_edge(*u, *v)) {
      throw DataError("contact (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge of the graph");
    }
    contacts_.push_back({*u, *v, e.start});
  }
}

std::size_t white_component_size(const RoleGraph& g, NodeIndex node) {
  std::vector<char> seen(g.num_nodes(), 0);
  std::vector<NodeIndex> stack{node};
  seen[node] = 1;
  std::size_t whites = 0;
  while (!stack.empty()) {
    NodeIndex u = stack.back();
    stack.pop_back();
    whites += counts_as_white(g.role(u)) ? 1 : 0;
    for (NodeIndex v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return whites;
}

namespace {

void check_initiator(const RoleGraph& g, NodeIndex initiator) {
  if (initiator >= g.num_nodes()) throw std::invalid_argument("initiator is not a node of the graph");
}

}  // namespace

SpreadRun run_si_replay(const RoleGraph& g, const ReplaySchedule& schedule, NodeIndex initiator, double t0,
                        bool periodic) {
  check_initiator(g, initiator);
  SpreadRun run{initiator, std::vector<double>(g.num_nodes(), kNever), white_component_size(g, initiator)};
  auto& time = run.infection_time;
  time[initiator] = 0.0;

  const auto contacts = schedule.contacts();
  const double lap = schedule.span().length();
  if (!(lap > 0.0)) periodic = false;
  const auto first = static_cast<std::size_t>(
      std::lower_bound(contacts.begin(), contacts.end(), t0,
                       [](const ReplaySchedule::Contact& c, double t) { return c.start < t; }) -
      contacts.begin());

  std::size_t infected = 1;
  const std::size_t reachable = [&] {
    // Every node of the component, white or not, can be reached.
    std::vector<char> seen(g.num_nodes(), 0);
    std::vector<NodeIndex> stack{initiator};
    seen[initiator] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      NodeIndex u = stack.back();
      stack.pop_back();
      ++count;
      for (NodeIndex v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    return count;
  }();

  // Scans contacts [begin, end) at lap offset k; returns newly infected nodes.
  auto scan = [&](std::size_t begin, std::size_t end, std::size_t k) {
    const double offset = static_cast<double>(k) * lap;
    std::size_t fresh = 0;
    for (std::size_t group = begin; group < end;) {
      std::size_t group_end = group + 1;
      while (group_end < end && contacts[group_end].start == contacts[group].start) ++group_end;
      const double at = (contacts[group].start - t0) + offset;
      // Simultaneous contacts may chain, so repeat until the group is stable.
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t c = group; c < group_end; ++c) {
          auto [u, v, start] = contacts[c];
          if (time[u] <= at && time[v] == kNever) {
            time[v] = at;
            changed = true;
          } else if (time[v] <= at && time[u] == kNever) {
            time[u] = at;
            changed = true;
          } else {
            continue;
          }
          ++fresh;
        }
      }
      group = group_end;
    }
    return fresh;
  };

  for (std::size_t k = 0;; ++k) {
    std::size_t fresh = scan(first, contacts.size(), k);
    if (periodic) fresh += scan(0, first, k + 1);
    infected += fresh;
    if (!periodic || fresh == 0 || infected == reachable) break;
  }
  return run;
}

SpreadRun run_si_replay(const RoleGraph& g, const EventLog& log, NodeId initiator, double t0, bool periodic) {
  auto index = g.index_of(initiator);
  if (!index) throw std::invalid_argument("initiator " + std::to_string(initiator) + " is not in the graph");
  return run_si_replay(g, ReplaySchedule(g, log), *index, t0, periodic);
}

namespace {

// Label-setting search where arrival(from_time, edge) gives the arrival time
// at the far end of an edge leaving a node settled at from_time. Requires
// arrival(t, e) >= t and monotone in t.
template <typename Arrival>
std::vector<double> label_setting(const RoleGraph& g, NodeIndex source, Arrival&& arrival) {
  std::vector<double> time(g.num_nodes(), kNever);
  std::vector<char> settled(g.num_nodes(), 0);
  using Entry = std::pair<double, NodeIndex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  time[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    auto [t, u] = queue.top();
    queue.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    auto nb = g.neighbors(u);
    auto ids = g.incident_edges(u);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      const NodeIndex v = nb[k];
      if (settled[v]) continue;
      const double candidate = arrival(t, ids[k]);
      if (candidate < time[v]) {
        time[v] = candidate;
        queue.emplace(candidate, v);
      }
    }
  }
  return time;
}

}  // namespace

std::vector<double> first_passage_times(const RoleGraph& g, NodeIndex source,
                                        const std::function<double(EdgeIndex)>& delay) {
  check_initiator(g, source);
  // An edge is only ever relaxed from its first settled endpoint, so each
  // delay is drawn exactly once per reached edge.
  return label_setting(g, source, [&](double t, EdgeIndex e) { return t + delay(e); });
}

std::vector<double> renewal_times(const RoleGraph& g, NodeIndex source, const std::function<double()>& next_gap,
                                  double horizon) {
  check_initiator(g, source);
  return label_setting(g, source, [&](double t, EdgeIndex) {
    double contact = next_gap();
    while (contact < t && contact <= horizon) contact += next_gap();
    return contact <= horizon ? contact : kNever;
  });
}

SpreadRun run_si_synthetic(const RoleGraph& g, const SyntheticMode& mode, NodeIndex initiator, Rng& rng) {
  check_initiator(g, initiator);
  SpreadRun run{initiator, {}, white_component_size(g, initiator)};
  if (const auto* m = std::get_if<LinkDelay>(&mode)) {
    run.infection_time = first_passage_times(g, initiator, [&](EdgeIndex) { return m->dist.sample(rng); });
  } else {
    const auto& r = std::get<Renewal>(mode);
    run.infection_time = renewal_times(g, initiator, [&] { return r.dist.sample(rng); }, r.horizon);
  }
  return run;
}

namespace {

std::vector<double> sorted_white_times(const RoleGraph& g, const SpreadRun& run) {
  std::vector<double> times;
  for (NodeIndex i = 0; i < g.num_nodes(); ++i) {
    if (counts_as_white(g.role(i)) && run.infection_time[i] != kNever) times.push_back(run.infection_time[i]);
  }
  std::sort(times.begin(), times.end());
  return times;
}

std::vector<double> curve_from_times(std::span<const double> times, std::size_t denominator,
                                     std::span<const double> grid) {
  std::vector<double> curve(grid.size());
  const double scale = denominator > 0 ? 1.0 / static_cast<double>(denominator) : 0.0;
  std::size_t count = 0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    while (count < times.size() && times[count] <= grid[k]) ++count;
    curve[k] = static_cast<double>(count) * scale;
  }
  return curve;
}

}  // namespace

std::vector<double> spreading_curve(const RoleGraph& g, const SpreadRun& run, std::span<const double> grid) {
  if (!std::is_sorted(grid.begin(), grid.end())) throw std::invalid_argument("spreading_curve: grid must be sorted");
  return curve_from_times(sorted_white_times(g, run), run.denominator, grid);
}

std::vector<double> log_grid(double first, double last, std::size_t points) {
  if (!(first > 0.0) || !(last >= first) || points == 0) throw std::invalid_argument("log_grid: invalid range");
  if (points == 1 || last == first) return std::vector<double>(points, first);
  std::vector<double> grid(points);
  const double a = std::log(first);
  const double step = (std::log(last) - a) / static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k) grid[k] = std::exp(a + step * static_cast<double>(k));
  grid.front() = first;
  grid.back() = last;
  return grid;
}

CurveEnsemble ensemble(const RoleGraph& g, const RoleGraph& g_w, const SpreadMode& mode,
                       const EnsembleOptions& options) {
  if (options.runs == 0) throw std::invalid_argument("ensemble needs at least one run");
  const auto eligible = eligible_initiators(g_w);
  if (eligible.empty()) throw NoInitiatorError("no white node of degree >= 2 in the largest component");

  std::optional<ReplaySchedule> schedule;
  if (const auto* replay = std::get_if<ReplayLog>(&mode)) schedule.emplace(g, replay->log);

  struct RunResult {
    NodeId initiator;
    std::vector<double> times;
    std::size_t denominator;
  };
  std::vector<RunResult> results(options.runs);
  parallel_for(options.runs, options.workers, [&](std::size_t i) {
    Rng rng = make_rng(options.master_seed, i);
    const NodeId id = g_w.id(eligible[uniform_index(rng, eligible.size())]);
    const auto start = g.index_of(id);
    if (!start) throw std::invalid_argument("initiator " + std::to_string(id) + " is missing from the spreading graph");
    SpreadRun run;
    if (const auto* replay = std::get_if<ReplayLog>(&mode)) {
      const TimeSpan span = schedule->span();
      const double t0 = replay->fixed_t0 ? *replay->fixed_t0 : span.begin + uniform01(rng) * span.length();
      run = run_si_replay(g, *schedule, *start, t0, replay->periodic);
    } else if (const auto* delay = std::get_if<LinkDelay>(&mode)) {
      run = run_si_synthetic(g, *delay, *start, rng);
    } else {
      run = run_si_synthetic(g, std::get<Renewal>(mode), *start, rng);
    }
    results[i] = {id, sorted_white_times(g, run), run.denominator};
  });

  CurveEnsemble out;
  out.grid = options.grid;
  if (out.grid.empty()) {
    double first = kNever;
    double last = 0.0;
    for (const auto& r : results) {
      auto positive = std::upper_bound(r.times.begin(), r.times.end(), 0.0);
      if (positive != r.times.end()) first = std::min(first, *positive);
      if (!r.times.empty()) last = std::max(last, r.times.back());
    }
    out.grid = first == kNever ? std::vector<double>{0.0} : log_grid(first, last, options.grid_points);
  } else if (!std::is_sorted(out.grid.begin(), out.grid.end())) {
    throw std::invalid_argument("ensemble grid must be sorted");
  }

  out.average.assign(out.grid.size(), 0.0);
  out.curves.reserve(results.size());
  for (const auto& r : results) {
    out.initiators.push_back(r.initiator);
    out.curves.push_back(curve_from_times(r.times, r.denominator, out.grid));
    for (std::size_t k = 0; k < out.grid.size(); ++k) out.average[k] += out.curves.back()[k];
  }
  for (double& a : out.average) a /= static_cast<double>(results.size());
  try {
    out.tau = characteristic_time(out.grid, out.average);
  } catch (const HorizonError&) {
    out.tau.reset();
  }
  return out;
}

double characteristic_time(std::span<const double> grid, std::span<const double> average) {
  if (grid.size() != average.size()) throw std::invalid_argument("grid and average differ in length");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (average[k] < 0.5) continue;
    if (k == 0 || average[k] == 0.5) return grid[k];
    const double t0 = grid[k - 1];
    const double y0 = average[k - 1];
    return t0 + (0.5 - y0) * (grid[k] - t0) / (average[k] - y0);
  }
  throw HorizonError("average spreading curve never reaches 1/2; extend the horizon");
}

std::vector<double> curve_quantile(const CurveEnsemble& e, double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("quantile must lie in [0, 1]");
  std::vector<double> out(e.grid.size());
  std::vector<double> column(e.curves.size());
  for (std::size_t k = 0; k < e.grid.size(); ++k) {
    for (std::size_t i = 0; i < e.curves.size(); ++i) column[i] = e.curves[i][k];
    std::sort(column.begin(), column.end());
    const double pos = q * static_cast<double>(column.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, column.size() - 1);
    out[k] = column[lo] + (pos - static_cast<double>(lo)) * (column[hi] - column[lo]);
  }
  return out;
}

}  // namespace sispread
