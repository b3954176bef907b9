#include "sispread/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "sispread/error.hpp"
#include "sispread/format.hpp"
#include "sispread/rng.hpp"

namespace sispread {

namespace {

// Stream tags for seed derivation.
constexpr std::uint64_t kBaseStream = 0;
constexpr std::uint64_t kDiluteStream = 1;
constexpr std::uint64_t kBridgeStream = 2;
constexpr std::uint64_t kRunStream = 3;

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t index) {
  return derive_seed(derive_seed(master, tag), index);
}

}  // namespace

std::vector<double> p_grid(double step) {
  if (!(step > 0.0 && step <= 1.0)) throw std::invalid_argument("p step must lie in (0, 1]");
  const auto count = static_cast<std::size_t>(std::llround(1.0 / step));
  std::vector<double> grid;
  for (std::size_t i = 0; i <= count; ++i) grid.push_back(std::min(1.0, static_cast<double>(i) * step));
  if (grid.back() < 1.0) grid.push_back(1.0);
  return grid;
}

DilutionPoint make_dilution_point(const RoleGraph& base, double p, const SweepOptions& options, std::uint64_t stream) {
  DilutionPoint point;
  point.p = p;
  point.g_w = dilute(base, p, stream_seed(options.master_seed, kDiluteStream, stream));
  point.avg_k_w = point.g_w.empty() ? 0.0 : avg_degree(point.g_w, NodeRole::White);
  point.p_inf = point.g_w.empty() ? 0.0 : percolation_fraction(point.g_w);
  if (options.bridges) {
    point.n_bridges = static_cast<std::size_t>(std::llround(options.bridges_ratio * static_cast<double>(point.g_w.num_nodes())));
    point.g = add_bridges(point.g_w, point.n_bridges, stream_seed(options.master_seed, kBridgeStream, stream));
  }
  return point;
}

SpreadMode synthetic_mode(const SweepOptions& options, const IetDistribution& dist) {
  if (options.mode == SyntheticKind::Renewal) return Renewal{dist, options.renewal_horizon};
  return LinkDelay{dist};
}

std::vector<SweepRow> sweep(const ModelSpec& model, const SweepOptions& options) {
  ModelSpec spec = model;
  spec.seed = stream_seed(options.master_seed, kBaseStream, model.seed);
  return sweep(generate(spec), to_string(model.kind), options);
}

std::vector<SweepRow> sweep(const RoleGraph& base, std::string_view model_name, const SweepOptions& options) {
  if (options.p_grid.empty() || options.dists.empty()) throw std::invalid_argument("sweep needs a p grid and distributions");
  std::vector<SweepRow> rows;
  for (std::size_t ip = 0; ip < options.p_grid.size(); ++ip) {
    const DilutionPoint point = make_dilution_point(base, options.p_grid[ip], options, ip);
    for (std::size_t id = 0; id < options.dists.size(); ++id) {
      SweepRow row;
      row.model = std::string(model_name);
      row.p = point.p;
      row.avg_k_w = point.avg_k_w;
      row.p_inf = point.p_inf;
      row.dist = options.dists[id].to_string();
      row.n_bridges = point.n_bridges;
      if (eligible_initiators(point.g_w).empty()) {
        row.flag = kFlagNoInitiator;
        rows.push_back(std::move(row));
        continue;
      }
      EnsembleOptions ens;
      ens.runs = options.runs;
      // G_w and G share the seed, so both see the same initiators.
      ens.master_seed = stream_seed(options.master_seed, kRunStream, ip * 64 + id);
      ens.grid_points = options.grid_points;
      ens.workers = options.workers;
      const SpreadMode mode = synthetic_mode(options, options.dists[id]);
      row.tau_w = ensemble(point.g_w, point.g_w, mode, ens).tau;
      if (options.bridges) row.tau = ensemble(point.g, point.g_w, mode, ens).tau;
      if (!row.tau_w || (options.bridges && !row.tau)) {
        row.flag = kFlagHorizon;
      } else if (row.p_inf < options.p_inf_cutoff) {
        row.flag = kFlagLowPInf;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows, bool header) {
  if (header) out << "model,p,avg_k_w,p_inf,dist,tau_w,tau,flag\n";
  auto opt = [](const std::optional<double>& x) { return x ? format_sig(*x) : std::string(); };
  for (const auto& r : rows) {
    out << r.model << ',' << format_sig(r.p) << ',' << format_sig(r.avg_k_w) << ',' << format_sig(r.p_inf) << ','
        << r.dist << ',' << opt(r.tau_w) << ',' << opt(r.tau) << ',' << r.flag << '\n';
  }
}

std::optional<double> fit_tau_exponent(std::span<const SweepRow> rows, const std::string& dist) {
  std::vector<double> x, y;
  for (const auto& r : rows) {
    if (r.dist != dist || r.flag != kFlagOk || !r.tau_w || !(r.avg_k_w > 0.0) || !(*r.tau_w > 0.0)) continue;
    x.push_back(std::log(r.avg_k_w));
    y.push_back(std::log(*r.tau_w));
  }
  if (x.size() < 2) return std::nullopt;
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

namespace {

std::vector<double> ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && v[order[j]] == v[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j - 1) + 1.0;
    for (std::size_t k = i; k < j; ++k) r[order[k]] = rank;
    i = j;
  }
  return r;
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("spearman needs two equal series of length >= 2");
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace sispread
