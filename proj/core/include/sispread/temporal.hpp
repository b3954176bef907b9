#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sispread/graph.hpp"

namespace sispread {

/// One timestamped interaction. Time units are abstract but shared with the
/// log's span.
struct Event {
  NodeId u;
  NodeId v;
  double start;
  double duration;

  friend bool operator==(const Event&, const Event&) = default;
};

/// Half-open time window [begin, end).
struct TimeSpan {
  double begin = 0.0;
  double end = 0.0;

  double length() const { return end - begin; }
  friend bool operator==(const TimeSpan&, const TimeSpan&) = default;
};

/// Events sorted by start time within a half-open span.
class EventLog {
 public:
  EventLog() = default;
  /// Sorts events (stable) by start. Throws DataError on self-contacts,
  /// negative durations, starts outside the span, or end < begin.
  EventLog(std::vector<Event> events, TimeSpan span);

  std::span<const Event> events() const { return events_; }
  TimeSpan span() const { return span_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }

  friend bool operator==(const EventLog&, const EventLog&) = default;

 private:
  std::vector<Event> events_;
  TimeSpan span_;
};

/// Copy of `log` in which each contact happens at the end of the call rather
/// than its start. The span grows to cover the shifted contacts.
EventLog contacts_at_call_end(const EventLog& log);

/// Static projection: nodes are all event endpoints, one edge per pair with at
/// least one event. Roles come from `roles`; ids missing there throw DataError.
RoleGraph project(const EventLog& log, const RoleMap& roles);
/// Projection with every node white.
RoleGraph project(const EventLog& log);

enum class IetPooling { PerLink, Global };

/// PerLink: consecutive start differences on each node pair, pooled.
/// Global: consecutive start differences over the whole log.
std::vector<double> link_inter_event_times(const EventLog& log, IetPooling pooling);

struct IetStats {
  double mu;
  double sigma;
  double burstiness;
  std::size_t n_samples;
};

/// Mean, population standard deviation and B = (sigma - mu) / (sigma + mu).
/// Throws std::invalid_argument for fewer than two samples.
IetStats iet_stats(std::span<const double> samples);

struct TailPoint {
  double x;
  double ccdf;
};

/// Empirical P(X > x) at each distinct sample value, ascending in x. With
/// rescale_by_mean the abscissae are divided by the sample mean.
std::vector<TailPoint> tail_distribution(std::span<const double> samples, bool rescale_by_mean);

/// Periodic boundary: begin + ((t - begin) mod length), result in [begin, end).
double wrap_time(double t, TimeSpan span);

}  // namespace sispread
