#include <gtest/gtest.h>

#include <sstream>

#include "sispread/generators.hpp"
#include "sispread/sweep.hpp"

namespace sispread {
namespace {

SweepOptions quick_options() {
  SweepOptions o;
  o.dists = {IetDistribution::power_law(0.008, 1.2)};
  o.runs = 5;
  o.grid_points = 200;
  return o;
}

TEST(PGrid, TwentyOnePoints) {
  auto grid = p_grid(0.05);
  ASSERT_EQ(grid.size(), 21u);
  EXPECT_EQ(grid.front(), 0.0);
  EXPECT_EQ(grid.back(), 1.0);
  EXPECT_NEAR(grid[7], 0.35, 1e-12);
  EXPECT_THROW(p_grid(0.0), std::invalid_argument);
}

TEST(Sweep, NoDilutionAndFullDilution) {
  ModelSpec spec;
  spec.n = 2000;
  auto o = quick_options();
  o.p_grid = {0.0, 1.0};
  auto rows = sweep(spec, o);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(rows[0].avg_k_w, 12.0, 0.5);
  EXPECT_GT(rows[0].p_inf, 0.999);
  EXPECT_EQ(rows[0].flag, kFlagOk);
  ASSERT_TRUE(rows[0].tau_w && rows[0].tau);
  EXPECT_LT(*rows[0].tau, *rows[0].tau_w);
  EXPECT_EQ(rows[0].n_bridges, 10000u);
  EXPECT_EQ(rows[1].avg_k_w, 0.0);
  EXPECT_EQ(rows[1].flag, kFlagNoInitiator);
  EXPECT_FALSE(rows[1].tau_w);
}

TEST(Sweep, BridgeCountFollowsRatio) {
  auto base = gen_er(5000, 12.0, 1);
  auto o = quick_options();
  auto point = make_dilution_point(base, 0.5, o, 0);
  EXPECT_EQ(point.n_bridges, 25000u);
  EXPECT_EQ(point.g.num_nodes(), 30000u);
  o.bridges = false;
  EXPECT_TRUE(make_dilution_point(base, 0.5, o, 0).g.empty());
}

TEST(Sweep, LowPercolationFlagged) {
  auto base = gen_er(1000, 12.0, 1);
  auto o = quick_options();
  o.p_grid = {0.93};
  o.bridges = false;
  auto rows = sweep(base, "er", o);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_LT(rows[0].p_inf, 0.2);
  EXPECT_EQ(rows[0].flag, kFlagLowPInf);
  EXPECT_FALSE(rows[0].tau);
}

TEST(Sweep, DeterministicAcrossWorkers) {
  auto base = gen_er(800, 8.0, 4);
  auto o = quick_options();
  o.p_grid = {0.2, 0.6};
  o.dists.push_back(match_mean(PowerLaw{0.008, 1.2}));
  std::ostringstream serial, threaded;
  write_sweep_csv(serial, sweep(base, "er", o));
  o.workers = 3;
  write_sweep_csv(threaded, sweep(base, "er", o));
  EXPECT_EQ(serial.str(), threaded.str());
}

TEST(SweepCsv, Format) {
  SweepRow ok{"er", 0.05, 11.4, 0.999, "pow:0.008:1.2", 0.0712345678912, 0.05, kFlagOk, 0};
  SweepRow empty{"ba", 1.0, 0.0, 0.0002, "pow:0.008:1.2", std::nullopt, std::nullopt, kFlagNoInitiator, 0};
  std::vector<SweepRow> rows{ok, empty};
  std::ostringstream out;
  write_sweep_csv(out, rows);
  EXPECT_EQ(out.str(),
            "model,p,avg_k_w,p_inf,dist,tau_w,tau,flag\n"
            "er,0.05,11.4,0.999,pow:0.008:1.2,0.0712345679,0.05,ok\n"
            "ba,1,0,0.0002,pow:0.008:1.2,,,no_initiator\n");
}

TEST(Spearman, Examples) {
  std::vector<double> x{1, 2, 3, 4, 5};
  std::vector<double> down{50, 40, 30, 20, 10}, curved{1, 4, 9, 16, 25};
  EXPECT_DOUBLE_EQ(spearman(x, down), -1.0);
  EXPECT_DOUBLE_EQ(spearman(x, curved), 1.0);
  std::vector<double> tied{1, 1, 2, 3, 3};
  // Average ranks 1.5, 1.5, 3, 4.5, 4.5 against 1..5.
  EXPECT_NEAR(spearman(x, tied), 0.9486832980505138, 1e-12);
  EXPECT_THROW(spearman(std::vector<double>{1}, std::vector<double>{1}), std::invalid_argument);
}

TEST(TauExponent, RecoversPowerLaw) {
  std::vector<SweepRow> rows;
  for (double k : {1.0, 2.0, 4.0, 8.0}) {
    SweepRow r;
    r.avg_k_w = k;
    r.dist = "d";
    r.tau_w = 3.0 * std::pow(k, -1.5);
    rows.push_back(r);
  }
  rows.push_back(SweepRow{"m", 0, 0.5, 0.01, "d", 100.0, std::nullopt, kFlagLowPInf, 0});
  EXPECT_NEAR(*fit_tau_exponent(rows, "d"), -1.5, 1e-12);
  EXPECT_FALSE(fit_tau_exponent(rows, "other"));
}

}  // namespace
}  // namespace sispread
