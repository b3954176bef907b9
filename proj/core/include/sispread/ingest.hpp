#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "sispread/graph.hpp"
#include "sispread/iet.hpp"
#include "sispread/temporal.hpp"

namespace sispread {

// Call-detail-record text format, ';'-separated:
//
//   #users
//   <user_id>;<is_company 0|1>;<zip, may be empty>
//   #calls
//   <caller>;<callee>;<start_seconds>;<duration_seconds>
//
// Only company users may carry a ZIP code.

struct UserInfo {
  bool is_company = false;
  std::optional<std::string> zip;

  friend bool operator==(const UserInfo&, const UserInfo&) = default;
};

class UserDirectory {
 public:
  /// Throws DataError for a duplicate id or a ZIP on a non-company user.
  void add(NodeId id, UserInfo info);
  const UserInfo* find(NodeId id) const;
  std::size_t size() const { return users_.size(); }
  const std::map<NodeId, UserInfo>& users() const { return users_; }

  friend bool operator==(const UserDirectory&, const UserDirectory&) = default;

 private:
  std::map<NodeId, UserInfo> users_;
};

struct CdrData {
  EventLog log;
  UserDirectory users;
};

struct CdrParseOptions {
  /// Timestamps and durations are divided by this factor (86400 maps seconds
  /// to days).
  double time_scale = 1.0;
  /// Smallest time step of the input, in input units; the log span ends one
  /// step after the last call.
  double granularity = 1.0;
  /// Treat callers/callees missing from #users as non-company users instead
  /// of failing.
  bool allow_unknown_users = false;
};

/// Throws DataError naming the offending line.
CdrData parse_cdr(std::istream& in, const CdrParseOptions& options = {});

/// Writes the format read by parse_cdr, times multiplied by time_scale.
void write_cdr(std::ostream& out, const CdrData& data, double time_scale = 1.0);

/// One ZIP per line; blank lines and '#' comments ignored.
std::set<std::string> parse_city_zips(std::istream& in);

/// Company with ZIP in the city -> White, company without ZIP -> Grey,
/// non-company -> Black. Company users with a ZIP of another city are left out.
RoleMap classify(const UserDirectory& users, const std::set<std::string>& city_zips);

struct CityNetworks {
  RoleGraph g_w;   ///< white nodes and the links among them
  RoleGraph g;     ///< g_w plus grey/black bridges (degree >= 2 after pruning)
  EventLog log_w;  ///< events on edges of g_w
  EventLog log;    ///< events on edges of g
};

struct CityBuildOptions {
  bool prune_fixpoint = false;
};

/// Throws DataError when the city has no white node in the log.
CityNetworks build_city_networks(const EventLog& log, const UserDirectory& users,
                                 const std::set<std::string>& city_zips, const CityBuildOptions& options = {});

struct SynthCdrOptions {
  std::size_t n_white = 100;
  std::size_t n_external = 500;
  IetDistribution iet = IetDistribution::power_law(0.008, 1.2);
  /// Length of the generated period, in IET units.
  double horizon = 30.0;
  std::uint64_t seed = 1;
  /// Mean degree of the random graph among white users.
  double white_avg_degree = 3.0;
  /// Distinct white contacts per external user.
  std::size_t external_degree = 2;
  /// Share of external users that are company users without ZIP.
  double grey_fraction = 0.3;
  std::string zip = "1000";
  /// Seconds per IET unit; call starts are whole seconds.
  double seconds_per_unit = 86400.0;
  double mean_call_seconds = 120.0;
};

/// Synthetic city: G(n_white, d) among white users, every external user calls
/// `external_degree` distinct whites, and each link carries a renewal sequence
/// of calls with the given IET law (first call uniform in the period). Times
/// are in seconds. Deterministic for a fixed seed.
CdrData synth_cdr(const SynthCdrOptions& options);

}  // namespace sispread
