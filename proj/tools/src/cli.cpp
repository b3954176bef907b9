#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "json_config.hpp"
#include "sispread/error.hpp"
#include "sispread/format.hpp"
#include "sispread/generators.hpp"
#include "sispread/graph_io.hpp"
#include "sispread/ingest.hpp"
#include "sispread/si.hpp"
#include "sispread/sweep.hpp"

#ifndef SISPREAD_VERSION
#define SISPREAD_VERSION "unknown"
#endif

namespace sispread::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An output path, or `fallback` for "-".
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    stream_ = &file_;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

// JSON number limited to 9 significant digits.
json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::stod(format_sig(x));
}

json number(const std::optional<double>& x) { return x ? number(*x) : json(nullptr); }

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Sidecars are the only outputs that carry a timestamp.
void write_sidecar(const std::string& path, json body) {
  if (path.empty()) return;
  body["version"] = SISPREAD_VERSION;
  body["created"] = utc_now();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << body.dump(2) << '\n';
}

std::string sidecar_path(const std::string& explicit_path, const std::string& out) {
  if (!explicit_path.empty()) return explicit_path;
  return out.empty() || out == "-" ? std::string() : out + ".json";
}

std::size_t lattice_side(std::size_t n) {
  auto side = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while ((side + 1) * (side + 1) <= n) ++side;
  while (side * side > n) --side;
  return side;
}

IetPooling parse_pooling(const std::string& s) {
  if (s == "per-link") return IetPooling::PerLink;
  if (s == "global") return IetPooling::Global;
  throw UsageError("pooling must be per-link or global");
}

void add_kumpula_options(CLI::App* app, KumpulaParams& k) {
  app->add_option("--kumpula-p-r", k.p_r, "Global attachment probability");
  app->add_option("--kumpula-p-d", k.p_d, "Node deletion probability");
  app->add_option("--kumpula-p-delta", k.p_delta, "Triangle closing probability");
  app->add_option("--kumpula-delta", k.delta, "Weight reinforcement");
  app->add_option("--kumpula-w0", k.w0, "Initial link weight");
  app->add_option("--kumpula-sweeps", k.sweeps, "Number of sweeps");
}

void add_common(CLI::App* app, bool& write_config) {
  app->add_flag("--write-config", write_config, "Print the effective config as JSON and exit")->configurable(false);
}

// generate ------------------------------------------------------------------

struct GenerateArgs {
  std::string model = "er";
  std::size_t n = 5000;
  std::size_t side = 0;
  double avg_k = 12.0;
  std::size_t m = 6;
  KumpulaParams kumpula;
  bool calibrate = false;
  std::optional<std::uint64_t> seed;
  std::string out = "-";
  std::string sidecar;
};

void setup_generate(CLI::App* app, GenerateArgs& a) {
  app->add_option("--model", a.model, "lattice, er, ba or kumpula")
      ->check(CLI::IsMember({"lattice", "er", "ba", "kumpula"}));
  app->add_option("--n", a.n, "Node count (lattice: largest square <= n)");
  app->add_option("--side", a.side, "Lattice side; overrides --n");
  app->add_option("--avg-k", a.avg_k, "Target mean degree (er; kumpula with --calibrate)");
  app->add_option("--m", a.m, "Links per new node (ba)");
  add_kumpula_options(app, a.kumpula);
  app->add_flag("--calibrate", a.calibrate, "Bisect the kumpula reinforcement to hit --avg-k");
  app->add_option("--seed", a.seed, "Random seed (required for er, ba, kumpula)");
  app->add_option("--out", a.out, "Edge-list output, - for stdout");
  app->add_option("--sidecar", a.sidecar, "Provenance JSON (default <out>.json)");
}

int cmd_generate(const GenerateArgs& a, const CLI::App* app, std::ostream& out) {
  ModelSpec spec;
  spec.kind = parse_model_kind(a.model);
  spec.n = a.n;
  spec.avg_degree = a.avg_k;
  spec.m = a.m;
  spec.kumpula = a.kumpula;
  if (spec.kind == ModelKind::LatticeNNN) {
    const std::size_t side = a.side ? a.side : lattice_side(a.n);
    spec.n = side * side;
  } else if (!a.seed) {
    throw UsageError("--seed is required for stochastic models");
  }
  spec.seed = a.seed.value_or(0);
  spec.validate();

  json meta{{"command", "generate"}, {"config", JsonConfig::to_json(app, true)}};
  RoleGraph g;
  if (spec.kind == ModelKind::Kumpula) {
    if (a.calibrate) spec.kumpula = calibrate_kumpula(spec.n, a.avg_k, spec.kumpula, spec.seed);
    auto result = gen_kumpula(spec.n, spec.kumpula, spec.seed);
    g = std::move(result.graph);
    meta["kumpula"] = {{"delta", spec.kumpula.delta}, {"stationary", result.stationary}};
  } else {
    g = generate(spec);
  }
  {
    Output file(a.out, out);
    write_edge_list(*file, g);
  }
  meta["nodes"] = g.num_nodes();
  meta["edges"] = g.num_edges();
  meta["avg_degree"] = number(avg_degree(g));
  meta["p_inf"] = number(percolation_fraction(g));
  meta["clustering"] = number(average_clustering(g));
  write_sidecar(sidecar_path(a.sidecar, a.out), std::move(meta));
  return kExitOk;
}

// sweep ---------------------------------------------------------------------

struct SweepArgs {
  std::vector<std::string> models{"er"};
  std::size_t n = 5000;
  double avg_k = 12.0;
  std::size_t m = 6;
  KumpulaParams kumpula;
  double p_step = 0.05;
  std::vector<double> p_values;
  std::vector<std::string> dists{"pow:0.008:1.2", "match-exp"};
  std::size_t runs = 100;
  double bridges_ratio = 5.0;
  bool no_bridges = false;
  double p_inf_cutoff = 0.2;
  std::string mode = "linkdelay";
  std::optional<double> renewal_horizon;
  std::size_t grid_points = 2000;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  bool paper_defaults = false;
  std::string out = "-";
  std::string sidecar;
};

void setup_sweep(CLI::App* app, SweepArgs& a) {
  app->add_option("--models", a.models, "Comma-separated: lattice,er,ba,kumpula")
      ->delimiter(',')
      ->check(CLI::IsMember({"lattice", "er", "ba", "kumpula"}));
  app->add_option("--n", a.n, "Nodes per model (lattice: largest square <= n)");
  app->add_option("--avg-k", a.avg_k, "ER mean degree");
  app->add_option("--m", a.m, "BA links per new node");
  add_kumpula_options(app, a.kumpula);
  app->add_option("--p-step", a.p_step, "Dilution grid step from 0 to 1");
  app->add_option("--p", a.p_values, "Explicit dilution values; overrides --p-step")->delimiter(',');
  app->add_option("--dist", a.dists, "IET laws; match-exp is the mean-matched exponential of the preceding pow")
      ->delimiter(',');
  app->add_option("--runs,--M", a.runs, "Runs per ensemble");
  app->add_option("--bridges-ratio", a.bridges_ratio, "Bridges per white node");
  app->add_flag("--no-bridges", a.no_bridges, "Only spread on the diluted graph");
  app->add_option("--p-inf-cutoff", a.p_inf_cutoff, "Rows below this P_inf are flagged");
  app->add_option("--mode", a.mode, "linkdelay or renewal")->check(CLI::IsMember({"linkdelay", "renewal"}));
  app->add_option("--renewal-horizon", a.renewal_horizon, "Stop generating renewal contacts after this time");
  app->add_option("--grid-points", a.grid_points, "Points of the log-spaced curve grid");
  app->add_option("--seed", a.seed, "Master seed")->required();
  app->add_option("--workers", a.workers, "Worker threads, 0 = available parallelism");
  app->add_flag("--paper-defaults", a.paper_defaults, "All four models with the reference protocol");
  app->add_option("--out", a.out, "CSV output, - for stdout");
  app->add_option("--sidecar", a.sidecar, "Provenance JSON (default <out>.json)");
}

std::vector<IetDistribution> parse_dists(const std::vector<std::string>& tokens) {
  std::vector<IetDistribution> out;
  for (const auto& t : tokens) {
    if (t != "match-exp") {
      out.push_back(IetDistribution::parse(t));
      continue;
    }
    auto it = std::find_if(out.rbegin(), out.rend(), [](const IetDistribution& d) { return d.is_power_law(); });
    if (it == out.rend()) throw UsageError("match-exp needs a preceding pow law");
    out.push_back(match_mean(std::get<PowerLaw>(it->law())));
  }
  if (out.empty()) throw UsageError("no IET law given");
  return out;
}

int cmd_sweep(SweepArgs a, const CLI::App* app, std::ostream& out) {
  if (a.paper_defaults && app->get_option("--models")->count() == 0) {
    a.models = {"lattice", "er", "ba", "kumpula"};
  }
  SweepOptions opts;
  opts.p_grid = a.p_values.empty() ? p_grid(a.p_step) : a.p_values;
  for (double p : opts.p_grid) {
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("dilution values must lie in [0, 1]");
  }
  opts.dists = parse_dists(a.dists);
  opts.runs = a.runs;
  opts.bridges_ratio = a.bridges_ratio;
  opts.bridges = !a.no_bridges;
  opts.p_inf_cutoff = a.p_inf_cutoff;
  opts.mode = a.mode == "renewal" ? SyntheticKind::Renewal : SyntheticKind::LinkDelay;
  opts.renewal_horizon = a.renewal_horizon.value_or(kNever);
  opts.master_seed = a.seed;
  opts.grid_points = a.grid_points;
  opts.workers = a.workers;

  json fits = json::array();
  Output csv(a.out, out);
  bool header = true;
  for (const auto& name : a.models) {
    ModelSpec spec;
    spec.kind = parse_model_kind(name);
    spec.n = spec.kind == ModelKind::LatticeNNN ? lattice_side(a.n) * lattice_side(a.n) : a.n;
    spec.avg_degree = a.avg_k;
    spec.m = a.m;
    spec.kumpula = a.kumpula;
    spec.validate();
    const auto rows = sweep(spec, opts);
    write_sweep_csv(*csv, rows, header);
    (*csv).flush();
    header = false;
    for (const auto& d : opts.dists) {
      std::vector<double> k, tau;
      for (const auto& r : rows) {
        if (r.dist == d.to_string() && r.flag == kFlagOk && r.tau_w) {
          k.push_back(r.avg_k_w);
          tau.push_back(*r.tau_w);
        }
      }
      fits.push_back({{"model", name},
                      {"dist", d.to_string()},
                      {"rows_ok", k.size()},
                      {"tau_w_exponent", number(fit_tau_exponent(rows, d.to_string()))},
                      {"spearman_k_tau_w", k.size() >= 2 ? number(spearman(k, tau)) : json(nullptr)}});
    }
  }
  write_sidecar(sidecar_path(a.sidecar, a.out),
                {{"command", "sweep"}, {"config", JsonConfig::to_json(app, true)}, {"fits", fits}});
  return kExitOk;
}

// city ----------------------------------------------------------------------

struct CityArgs {
  std::string cdr;
  std::string zips;
  double time_scale = 86400.0;
  double granularity = 1.0;
  bool allow_unknown_users = false;
  bool prune_fixpoint = false;
  bool calls_end = false;
  std::string pooling = "per-link";
  std::string tail_out;
  bool rescale = false;
  bool spread = false;
  std::size_t runs = 100;
  std::optional<std::uint64_t> seed;
  std::optional<double> t0;
  bool no_periodic = false;
  std::size_t grid_points = 2000;
  std::string curve_out;
  unsigned workers = 0;
  std::string out = "-";
};

void setup_city(CLI::App* app, CityArgs& a) {
  app->add_option("--cdr", a.cdr, "Call-detail-record file")->required()->check(CLI::ExistingFile);
  app->add_option("--zips", a.zips, "City ZIP codes, one per line")->required()->check(CLI::ExistingFile);
  app->add_option("--time-scale", a.time_scale, "Input time units per model time unit");
  app->add_option("--granularity", a.granularity, "Input time resolution");
  app->add_flag("--allow-unknown-users", a.allow_unknown_users, "Treat undeclared users as non-company");
  app->add_flag("--prune-fixpoint", a.prune_fixpoint, "Repeat degree-1 pruning until nothing changes");
  app->add_flag("--calls-end", a.calls_end, "Place contacts at the end of calls");
  app->add_option("--pooling", a.pooling, "per-link or global inter-event times")
      ->check(CLI::IsMember({"per-link", "global"}));
  app->add_option("--tail-out", a.tail_out, "CSV x,ccdf of inter-event times");
  app->add_flag("--rescale", a.rescale, "Divide tail abscissae by the mean");
  app->add_flag("--spread", a.spread, "Run SI ensembles on G_w and G");
  app->add_option("--runs,--M", a.runs, "Runs per ensemble");
  app->add_option("--seed", a.seed, "Master seed (required with --spread)");
  app->add_option("--t0", a.t0, "Fixed start time instead of a uniform draw");
  app->add_flag("--no-periodic", a.no_periodic, "Do not wrap the log");
  app->add_option("--grid-points", a.grid_points, "Points of the log-spaced curve grid");
  app->add_option("--curve-out", a.curve_out, "Prefix for <prefix>_w.csv and <prefix>_g.csv");
  app->add_option("--workers", a.workers, "Worker threads, 0 = available parallelism");
  app->add_option("--out", a.out, "JSON report, - for stdout");
}

void write_curve(const std::string& path, const CurveEnsemble& e) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  const auto p10 = curve_quantile(e, 0.1);
  const auto p90 = curve_quantile(e, 0.9);
  out << "t,N_avg,N_p10,N_p90\n";
  for (std::size_t k = 0; k < e.grid.size(); ++k) {
    out << format_sig(e.grid[k]) << ',' << format_sig(e.average[k]) << ',' << format_sig(p10[k]) << ','
        << format_sig(p90[k]) << '\n';
  }
}

void write_tail(const std::string& path, std::span<const double> samples, bool rescale) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "x,ccdf\n";
  for (const auto& p : tail_distribution(samples, rescale)) out << format_sig(p.x) << ',' << format_sig(p.ccdf) << '\n';
}

json stats_json(const IetStats& s) {
  return {{"mu", number(s.mu)}, {"sigma", number(s.sigma)}, {"burstiness", number(s.burstiness)},
          {"n_samples", s.n_samples}};
}

int cmd_city(const CityArgs& a, std::ostream& out) {
  if (a.spread && !a.seed) throw UsageError("--seed is required with --spread");
  CdrParseOptions parse;
  parse.time_scale = a.time_scale;
  parse.granularity = a.granularity;
  parse.allow_unknown_users = a.allow_unknown_users;
  auto in = open_input(a.cdr);
  CdrData data = parse_cdr(in, parse);
  auto zip_in = open_input(a.zips);
  const auto zips = parse_city_zips(zip_in);
  const EventLog log = a.calls_end ? contacts_at_call_end(data.log) : data.log;
  const CityNetworks city = build_city_networks(log, data.users, zips, {a.prune_fixpoint});

  const std::size_t n_white = city.g_w.num_nodes();
  const std::size_t n_external = city.g.num_nodes() - n_white;
  json report{{"n_white", n_white},
              {"n_external", n_external},
              {"external_ratio", number(static_cast<double>(n_external) / static_cast<double>(n_white))},
              {"edges_w", city.g_w.num_edges()},
              {"edges", city.g.num_edges()},
              {"events_w", city.log_w.size()},
              {"events", city.log.size()},
              {"avg_k_w", number(avg_degree(city.g_w, NodeRole::White))},
              {"p_inf", number(percolation_fraction(city.g_w))}};

  const auto iets = link_inter_event_times(city.log, parse_pooling(a.pooling));
  report["iet"] = iets.size() >= 2 ? stats_json(iet_stats(iets)) : json(nullptr);
  if (!iets.empty()) write_tail(a.tail_out, iets, a.rescale);

  if (a.spread) {
    EnsembleOptions ens;
    ens.runs = a.runs;
    ens.master_seed = *a.seed;
    ens.grid_points = a.grid_points;
    ens.workers = a.workers;
    const auto on_w = ensemble(city.g_w, city.g_w, ReplayLog{city.log_w, !a.no_periodic, a.t0}, ens);
    const auto on_g = ensemble(city.g, city.g_w, ReplayLog{city.log, !a.no_periodic, a.t0}, ens);
    report["tau_w"] = number(on_w.tau);
    report["tau"] = number(on_g.tau);
    if (!a.curve_out.empty()) {
      write_curve(a.curve_out + "_w.csv", on_w);
      write_curve(a.curve_out + "_g.csv", on_g);
    }
  }
  Output file(a.out, out);
  *file << report.dump(2) << '\n';
  return kExitOk;
}

// stats ---------------------------------------------------------------------

struct StatsArgs {
  std::string events;
  double time_scale = 86400.0;
  std::string pooling = "per-link";
  std::string tail_out;
  bool rescale = false;
  std::string out = "-";
};

void setup_stats(CLI::App* app, StatsArgs& a) {
  app->add_option("--events", a.events, "Call-detail-record file")->required()->check(CLI::ExistingFile);
  app->add_option("--time-scale", a.time_scale, "Input time units per model time unit");
  app->add_option("--pooling", a.pooling, "per-link or global inter-event times")
      ->check(CLI::IsMember({"per-link", "global"}));
  app->add_option("--tail-out", a.tail_out, "CSV x,ccdf of inter-event times");
  app->add_flag("--rescale", a.rescale, "Divide tail abscissae by the mean");
  app->add_option("--out", a.out, "CSV output, - for stdout");
}

int cmd_stats(const StatsArgs& a, std::ostream& out) {
  CdrParseOptions parse;
  parse.time_scale = a.time_scale;
  parse.allow_unknown_users = true;
  auto in = open_input(a.events);
  const auto data = parse_cdr(in, parse);
  const auto iets = link_inter_event_times(data.log, parse_pooling(a.pooling));
  if (iets.size() < 2) throw DataError("need at least two inter-event times, got " + std::to_string(iets.size()));
  const auto s = iet_stats(iets);
  {
    Output file(a.out, out);
    *file << "mu,sigma,B,n_samples\n"
          << format_sig(s.mu) << ',' << format_sig(s.sigma) << ',' << format_sig(s.burstiness) << ',' << s.n_samples
          << '\n';
  }
  write_tail(a.tail_out, iets, a.rescale);
  return kExitOk;
}

// synth ---------------------------------------------------------------------

struct SynthArgs {
  SynthCdrOptions o;
  std::string iet = "pow:0.008:1.2";
  std::string out = "-";
  std::string zips_out;
  std::string sidecar;
};

void setup_synth(CLI::App* app, SynthArgs& a) {
  app->add_option("--n-white", a.o.n_white, "White users");
  app->add_option("--n-external", a.o.n_external, "Grey plus black users");
  app->add_option("--iet", a.iet, "Inter-event law, e.g. pow:0.008:1.2");
  app->add_option("--horizon", a.o.horizon, "Length of the period in model time units");
  app->add_option("--seed", a.o.seed, "Random seed")->required();
  app->add_option("--white-avg-k", a.o.white_avg_degree, "Mean degree among white users");
  app->add_option("--external-degree", a.o.external_degree, "White contacts per external user");
  app->add_option("--grey-fraction", a.o.grey_fraction, "Share of external users that are grey");
  app->add_option("--zip", a.o.zip, "ZIP code of the city");
  app->add_option("--seconds-per-unit", a.o.seconds_per_unit, "Seconds per model time unit");
  app->add_option("--mean-call-seconds", a.o.mean_call_seconds, "Mean call duration");
  app->add_option("--out", a.out, "CDR output, - for stdout");
  app->add_option("--zips-out", a.zips_out, "Write the city ZIP file here");
  app->add_option("--sidecar", a.sidecar, "Provenance JSON (default <out>.json)");
}

int cmd_synth(SynthArgs a, const CLI::App* app, std::ostream& out) {
  a.o.iet = IetDistribution::parse(a.iet);
  const CdrData data = synth_cdr(a.o);
  {
    Output file(a.out, out);
    write_cdr(*file, data);
  }
  if (!a.zips_out.empty()) {
    std::ofstream zips(a.zips_out);
    if (!zips) throw std::runtime_error("cannot open '" + a.zips_out + "' for writing");
    zips << a.o.zip << '\n';
  }
  write_sidecar(sidecar_path(a.sidecar, a.out), {{"command", "synth"},
                                                 {"config", JsonConfig::to_json(app, true)},
                                                 {"users", data.users.size()},
                                                 {"events", data.log.size()}});
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"SI spreading on temporal call networks", "sispread"};
  auto config = std::make_shared<JsonConfig>();
  app.config_formatter(config);
  app.set_config("--config", "", "JSON config file; explicit flags win");
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", SISPREAD_VERSION);

  GenerateArgs gen;
  SweepArgs sw;
  CityArgs city;
  StatsArgs stats;
  SynthArgs synth;
  bool write_config = false;

  auto* gen_app = app.add_subcommand("generate", "Generate a topology model as an edge list");
  setup_generate(gen_app, gen);
  auto* sweep_app = app.add_subcommand("sweep", "Dilution sweep of characteristic times");
  setup_sweep(sweep_app, sw);
  auto* city_app = app.add_subcommand("city", "Build city networks from call records");
  setup_city(city_app, city);
  auto* stats_app = app.add_subcommand("stats", "Inter-event-time statistics of a call log");
  setup_stats(stats_app, stats);
  auto* synth_app = app.add_subcommand("synth", "Write a synthetic call-detail-record file");
  setup_synth(synth_app, synth);
  for (auto* sub : {gen_app, sweep_app, city_app, stats_app, synth_app}) {
    add_common(sub, write_config);
    sub->fallthrough();
    // Config keys address the subcommand named on the command line.
    for (int i = 1; i < argc && config->section.empty(); ++i) {
      if (sub->get_name() == argv[i]) config->section = argv[i];
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (auto* sub : app.get_subcommands()) {
      if (write_config) {
        out << sub->config_to_str(true, true);
        return kExitOk;
      }
      if (sub == gen_app) return cmd_generate(gen, sub, out);
      if (sub == sweep_app) return cmd_sweep(sw, sub, out);
      if (sub == city_app) return cmd_city(city, out);
      if (sub == stats_app) return cmd_stats(stats, out);
      if (sub == synth_app) return cmd_synth(synth, sub, out);
    }
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace sispread::cli
