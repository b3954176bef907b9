#include "sispread/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "sispread/error.hpp"
#include "sispread/format.hpp"
#include "sispread/generators.hpp"
#include "sispread/rng.hpp"

namespace sispread {

void UserDirectory::add(NodeId id, UserInfo info) {
  if (info.zip && !info.is_company) {
    throw DataError("user " + std::to_string(id) + " has a ZIP code but is not a company user");
  }
  if (!users_.emplace(id, std::move(info)).second) {
    throw DataError("duplicate user " + std::to_string(id));
  }
}

const UserInfo* UserDirectory::find(NodeId id) const {
  auto it = users_.find(id);
  return it == users_.end() ? nullptr : &it->second;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    auto next = line.find(';', pos);
    fields.push_back(line.substr(pos, next - pos));
    if (next == std::string_view::npos) return fields;
    pos = next + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_field(std::string_view field, std::size_t line, const char* what) {
  field = trim(field);
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw DataError(line, std::string("invalid ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

CdrData parse_cdr(std::istream& in, const CdrParseOptions& options) {
  if (!(options.time_scale > 0.0) || !(options.granularity > 0.0)) {
    throw std::invalid_argument("time scale and granularity must be positive");
  }
  enum class Section { None, Users, Calls } section = Section::None;
  CdrData data;
  std::vector<Event> events;
  std::vector<std::size_t> event_lines;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      if (text == "#users") section = Section::Users;
      else if (text == "#calls") section = Section::Calls;
      continue;
    }
    auto fields = split_fields(text);
    switch (section) {
      case Section::None:
        throw DataError(line_no, "record before any #users or #calls header");
      case Section::Users: {
        if (fields.size() < 2 || fields.size() > 3) {
          throw DataError(line_no, "expected user_id;is_company;zip, got " + std::to_string(fields.size()) + " fields");
        }
        const auto id = parse_field<NodeId>(fields[0], line_no, "user id");
        const auto company = trim(fields[1]);
        if (company != "0" && company != "1") throw DataError(line_no, "is_company must be 0 or 1");
        UserInfo info{company == "1", std::nullopt};
        if (fields.size() == 3 && !trim(fields[2]).empty()) info.zip = std::string(trim(fields[2]));
        try {
          data.users.add(id, std::move(info));
        } catch (const DataError& e) {
          throw DataError(line_no, e.what());
        }
        break;
      }
      case Section::Calls: {
        if (fields.size() != 4) {
          throw DataError(line_no, "expected caller;callee;start;duration, got " + std::to_string(fields.size()) +
                                       " fields");
        }
        Event e{parse_field<NodeId>(fields[0], line_no, "caller"), parse_field<NodeId>(fields[1], line_no, "callee"),
                parse_field<double>(fields[2], line_no, "start"), parse_field<double>(fields[3], line_no, "duration")};
        if (e.u == e.v) throw DataError(line_no, "caller and callee are the same user");
        if (!std::isfinite(e.start)) throw DataError(line_no, "start time must be finite");
        if (!(e.duration >= 0.0)) throw DataError(line_no, "negative call duration");
        events.push_back(e);
        event_lines.push_back(line_no);
        break;
      }
    }
  }

  for (std::size_t i = 0; i < events.size(); ++i) {
    for (NodeId id : {events[i].u, events[i].v}) {
      if (data.users.find(id)) continue;
      if (!options.allow_unknown_users) {
        throw DataError(event_lines[i], "user " + std::to_string(id) + " is not declared in #users");
      }
      data.users.add(id, UserInfo{false, std::nullopt});
    }
  }

  TimeSpan span{0.0, 0.0};
  if (!events.empty()) {
    auto [lo, hi] = std::minmax_element(events.begin(), events.end(),
                                        [](const Event& a, const Event& b) { return a.start < b.start; });
    span = {lo->start / options.time_scale, (hi->start + options.granularity) / options.time_scale};
  }
  if (options.time_scale != 1.0) {
    for (Event& e : events) {
      e.start /= options.time_scale;
      e.duration /= options.time_scale;
    }
  }
  data.log = EventLog(std::move(events), span);
  return data;
}

void write_cdr(std::ostream& out, const CdrData& data, double time_scale) {
  out << "#users\n";
  for (const auto& [id, info] : data.users.users()) {
    out << id << ';' << (info.is_company ? 1 : 0) << ';' << info.zip.value_or("") << '\n';
  }
  out << "#calls\n";
  for (const Event& e : data.log.events()) {
    out << e.u << ';' << e.v << ';' << format_shortest(e.start * time_scale) << ';'
        << format_shortest(e.duration * time_scale) << '\n';
  }
}

std::set<std::string> parse_city_zips(std::istream& in) {
  std::set<std::string> zips;
  std::string line;
  while (std::getline(in, line)) {
    auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    zips.emplace(text);
  }
  return zips;
}

RoleMap classify(const UserDirectory& users, const std::set<std::string>& city_zips) {
  RoleMap roles;
  for (const auto& [id, info] : users.users()) {
    if (!info.is_company) {
      roles.emplace(id, NodeRole::Black);
    } else if (!info.zip) {
      roles.emplace(id, NodeRole::Grey);
    } else if (city_zips.contains(*info.zip)) {
      roles.emplace(id, NodeRole::White);
    }
  }
  return roles;
}

namespace {

EventLog events_on(const EventLog& log, const RoleGraph& g) {
  std::vector<Event> kept;
  for (const Event& e : log.events()) {
    auto u = g.index_of(e.u);
    auto v = g.index_of(e.v);
    if (u && v && g.has_edge(*u, *v)) kept.push_back(e);
  }
  return EventLog(std::move(kept), log.span());
}

}  // namespace

CityNetworks build_city_networks(const EventLog& log, const UserDirectory& users,
                                 const std::set<std::string>& city_zips, const CityBuildOptions& options) {
  const RoleMap roles = classify(users, city_zips);
  auto role_of = [&](NodeId id) -> const NodeRole* {
    auto it = roles.find(id);
    return it == roles.end() ? nullptr : &it->second;
  };
  // Only links with at least one white endpoint belong to the city.
  std::vector<Event> city_events;
  for (const Event& e : log.events()) {
    const NodeRole* ru = role_of(e.u);
    const NodeRole* rv = role_of(e.v);
    if (!ru || !rv) continue;
    if (*ru != NodeRole::White && *rv != NodeRole::White) continue;
    city_events.push_back(e);
  }
  const EventLog city_log(std::move(city_events), log.span());
  const RoleGraph extended = project(city_log, roles);

  CityNetworks city;
  city.g_w = induced_subgraph(extended, [&](NodeIndex i) { return extended.role(i) == NodeRole::White; });
  if (city.g_w.empty()) throw DataError("the city has no white nodes with calls");
  city.g = options.prune_fixpoint ? prune_degree_one_externals_fixpoint(extended)
                                  : prune_degree_one_externals(extended);
  city.log_w = events_on(city_log, city.g_w);
  city.log = events_on(city_log, city.g);
  return city;
}

CdrData synth_cdr(const SynthCdrOptions& o) {
  if (o.n_white < 2 || o.external_degree < 1 || o.external_degree > o.n_white || !(o.horizon >= 0.0) ||
      !(o.seconds_per_unit > 0.0) || !(o.grey_fraction >= 0.0 && o.grey_fraction <= 1.0)) {
    throw std::invalid_argument("invalid synthetic CDR parameters");
  }
  Rng rng(derive_seed(o.seed, 0));
  CdrData data;
  const NodeId first_external = o.n_white + 1;
  const auto n_grey = static_cast<std::size_t>(std::llround(o.grey_fraction * static_cast<double>(o.n_external)));
  for (NodeId id = 1; id <= o.n_white; ++id) data.users.add(id, UserInfo{true, o.zip});
  for (std::size_t x = 0; x < o.n_external; ++x) data.users.add(first_external + x, UserInfo{x < n_grey, std::nullopt});

  // Links as (white, other) id pairs.
  std::vector<std::pair<NodeId, NodeId>> links;
  if (o.white_avg_degree > 0.0 && o.white_avg_degree < static_cast<double>(o.n_white - 1)) {
    const RoleGraph whites = gen_er(o.n_white, o.white_avg_degree, derive_seed(o.seed, 1));
    for (auto [u, v] : whites.edges()) links.emplace_back(whites.id(u) + 1, whites.id(v) + 1);
  }
  std::vector<NodeId> picked;
  for (std::size_t x = 0; x < o.n_external; ++x) {
    picked.clear();
    while (picked.size() < o.external_degree) {
      NodeId w = 1 + uniform_index(rng, o.n_white);
      if (std::find(picked.begin(), picked.end(), w) == picked.end()) picked.push_back(w);
    }
    for (NodeId w : picked) links.emplace_back(w, first_external + x);
  }

  std::vector<Event> events;
  for (auto [white, other] : links) {
    const bool other_is_company = other <= o.n_white || other < first_external + n_grey;
    for (double t = uniform01(rng) * o.horizon; t < o.horizon; t += o.iet.sample(rng)) {
      Event e{white, other, std::floor(t * o.seconds_per_unit), std::floor(-o.mean_call_seconds * std::log(uniform_open_closed(rng)))};
      // Non-company users never place calls in the data.
      if (other_is_company && bernoulli(rng, 0.5)) std::swap(e.u, e.v);
      events.push_back(e);
    }
  }
  TimeSpan span{0.0, 0.0};
  if (!events.empty()) {
    auto [lo, hi] = std::minmax_element(events.begin(), events.end(),
                                        [](const Event& a, const Event& b) { return a.start < b.start; });
    span = {lo->start, hi->start + 1.0};
  }
  data.log = EventLog(std::move(events), span);
  return data;
}

}  // namespace sispread
