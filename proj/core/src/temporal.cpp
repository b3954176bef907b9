#include "sispread/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "sispread/error.hpp"

namespace sispread {

EventLog::EventLog(std::vector<Event> events, TimeSpan span)
    : events_(std::move(events)), span_(span) {
  if (!(span_.end >= span_.begin)) throw DataError("event log span ends before it begins");
  std::stable_sort(events_.begin(), events_.end(),
                   [](const Event& a, const Event& b) { return a.start < b.start; });
  for (const Event& e : events_) {
    if (e.u == e.v) throw DataError("event joins node " + std::to_string(e.u) + " to itself");
    if (!(e.duration >= 0.0)) throw DataError("event with negative duration");
    if (!(e.start >= span_.begin && e.start < span_.end)) {
      throw DataError("event start outside the log span");
    }
  }
}

EventLog contacts_at_call_end(const EventLog& log) {
  std::vector<Event> shifted;
  shifted.reserve(log.size());
  TimeSpan span = log.span();
  const double margin = span.end - (log.empty() ? span.begin : log.events().back().start);
  for (const Event& e : log.events()) {
    shifted.push_back({e.u, e.v, e.start + e.duration, 0.0});
    span.end = std::max(span.end, e.start + e.duration + margin);
  }
  return EventLog(std::move(shifted), span);
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<NodeId, NodeId>& p) const noexcept {
    return std::hash<NodeId>{}(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
  }
};

std::pair<NodeId, NodeId> ordered(NodeId a, NodeId b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

RoleGraph project(const EventLog& log, const RoleMap& roles) {
  std::vector<NodeSpec> nodes;
  std::unordered_map<NodeId, NodeIndex> seen;
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  edges.reserve(log.size());
  auto node = [&](NodeId id) {
    auto [it, inserted] = seen.emplace(id, static_cast<NodeIndex>(nodes.size()));
    if (inserted) {
      auto role = roles.find(id);
      if (role == roles.end()) throw DataError("no role for node " + std::to_string(id));
      nodes.push_back({id, role->second});
    }
    return it->second;
  };
  for (const Event& e : log.events()) {
    NodeIndex u = node(e.u);
    NodeIndex v = node(e.v);
    edges.emplace_back(u, v);
  }
  try {
    return RoleGraph::from_indices(std::move(nodes), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
}

RoleGraph project(const EventLog& log) {
  RoleMap roles;
  for (const Event& e : log.events()) {
    roles.emplace(e.u, NodeRole::White);
    roles.emplace(e.v, NodeRole::White);
  }
  return project(log, roles);
}

std::vector<double> link_inter_event_times(const EventLog& log, IetPooling pooling) {
  std::vector<double> out;
  auto events = log.events();
  if (pooling == IetPooling::Global) {
    for (std::size_t i = 1; i < events.size(); ++i) out.push_back(events[i].start - events[i - 1].start);
    return out;
  }
  // Events are sorted by start, so per-pair sequences come out sorted too.
  std::unordered_map<std::pair<NodeId, NodeId>, std::size_t, PairHash> slot;
  std::vector<std::vector<double>> starts;
  std::vector<std::pair<NodeId, NodeId>> keys;
  for (const Event& e : events) {
    auto key = ordered(e.u, e.v);
    auto [it, inserted] = slot.emplace(key, starts.size());
    if (inserted) {
      starts.emplace_back();
      keys.push_back(key);
    }
    starts[it->second].push_back(e.start);
  }
  std::vector<std::size_t> order(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  for (std::size_t k : order) {
    const auto& s = starts[k];
    for (std::size_t i = 1; i < s.size(); ++i) out.push_back(s[i] - s[i - 1]);
  }
  return out;
}

IetStats iet_stats(std::span<const double> samples) {
  if (samples.size() < 2) throw std::invalid_argument("iet_stats needs at least two samples");
  const auto n = static_cast<double>(samples.size());
  double sum = 0.0;
  for (double x : samples) sum += x;
  const double mu = sum / n;
  double ss = 0.0;
  for (double x : samples) ss += (x - mu) * (x - mu);
  const double sigma = std::sqrt(ss / n);
  const double b = sigma == 0.0 ? -1.0 : (sigma - mu) / (sigma + mu);
  return {mu, sigma, b, samples.size()};
}

std::vector<TailPoint> tail_distribution(std::span<const double> samples, bool rescale_by_mean) {
  if (samples.empty()) throw std::invalid_argument("tail_distribution of an empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  double scale = 1.0;
  if (rescale_by_mean) {
    double sum = 0.0;
    for (double x : sorted) sum += x;
    scale = sum / static_cast<double>(sorted.size());
  }
  const auto n = static_cast<double>(sorted.size());
  std::vector<TailPoint> out;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    out.push_back({sorted[i] / scale, static_cast<double>(sorted.size() - j) / n});
    i = j;
  }
  return out;
}

double wrap_time(double t, TimeSpan span) {
  const double length = span.length();
  if (!(length > 0.0)) throw std::invalid_argument("wrap_time: degenerate span");
  double r = std::fmod(t - span.begin, length);
  if (r < 0.0) r += length;
  if (r >= length) r = 0.0;
  return span.begin + r;
}

}  // namespace sispread
