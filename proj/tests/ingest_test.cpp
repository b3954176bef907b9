#include <gtest/gtest.h>

#include <sstream>

#include "sispread/error.hpp"
#include "sispread/ingest.hpp"

namespace sispread {
namespace {

CdrData parse(const std::string& text, CdrParseOptions options = {}) {
  std::istringstream in(text);
  return parse_cdr(in, options);
}

std::size_t line_of_error(const std::string& text) {
  try {
    parse(text);
  } catch (const DataError& e) {
    return e.line();
  }
  return 0;
}

TEST(ParseCdr, SingleRecord) {
  auto data = parse("#users\n17;1;\n42;0;\n#calls\n17;42;3600;60\n");
  ASSERT_EQ(data.log.size(), 1u);
  EXPECT_EQ(data.log.events()[0], (Event{17, 42, 3600, 60}));
  EXPECT_EQ(data.log.span(), (TimeSpan{3600, 3601}));
  EXPECT_EQ(data.users.size(), 2u);
  EXPECT_TRUE(data.users.find(17)->is_company);
}

TEST(ParseCdr, ErrorsNameTheLine) {
  EXPECT_EQ(line_of_error("#users\n1;1;\n2;1;\n#calls\n1;2;3600\n"), 5u);
  EXPECT_EQ(line_of_error("#users\n1;1;\n#calls\n1;1;5;5\n"), 4u);
  EXPECT_EQ(line_of_error("#users\n1;1;\n2;1;\n#calls\n1;2;5;-1\n"), 5u);
  EXPECT_EQ(line_of_error("#users\n1;1;\n#calls\n1;2;5;1\n"), 4u);
  EXPECT_EQ(line_of_error("#users\n1;0;1000\n"), 2u);
  EXPECT_EQ(line_of_error("#users\n1;1;\n1;0;\n"), 3u);
  EXPECT_EQ(line_of_error("1;2;3;4\n"), 1u);
}

TEST(ParseCdr, SortsRecords) {
  auto data = parse("#users\n1;1;\n2;1;\n#calls\n1;2;50;1\n2;1;10;1\n");
  ASSERT_EQ(data.log.size(), 2u);
  EXPECT_EQ(data.log.events()[0].start, 10.0);
  EXPECT_EQ(data.log.events()[1].start, 50.0);
  EXPECT_EQ(data.log.span(), (TimeSpan{10, 51}));
}

TEST(ParseCdr, UnknownUsersAndScaling) {
  CdrParseOptions options;
  options.allow_unknown_users = true;
  options.time_scale = 86400;
  auto data = parse("#calls\n1;2;86400;8640\n", options);
  EXPECT_FALSE(data.users.find(2)->is_company);
  EXPECT_DOUBLE_EQ(data.log.events()[0].start, 1.0);
  EXPECT_DOUBLE_EQ(data.log.events()[0].duration, 0.1);
  EXPECT_DOUBLE_EQ(data.log.span().end, 86401.0 / 86400.0);
}

TEST(Classify, Roles) {
  UserDirectory users;
  users.add(1, {true, "1000"});
  users.add(2, {true, std::nullopt});
  users.add(3, {false, std::nullopt});
  users.add(4, {true, "2000"});
  auto roles = classify(users, {"1000"});
  EXPECT_EQ(roles.at(1), NodeRole::White);
  EXPECT_EQ(roles.at(2), NodeRole::Grey);
  EXPECT_EQ(roles.at(3), NodeRole::Black);
  EXPECT_FALSE(roles.contains(4));
}

TEST(CityZips, IgnoresCommentsAndBlanks) {
  std::istringstream in("# city\n1000\n\n 1001 \n");
  EXPECT_EQ(parse_city_zips(in), (std::set<std::string>{"1000", "1001"}));
}

struct Fixture {
  UserDirectory users;
  std::set<std::string> zips{"1000"};

  Fixture() {
    users.add(1, {true, "1000"});   // a
    users.add(2, {true, "1000"});   // b
    users.add(10, {false, std::nullopt});  // x, black
    users.add(20, {true, std::nullopt});   // y, grey
    users.add(30, {true, "9999"});         // other city
  }
};

TEST(CityNetworks, DegreeOneBlackPruned) {
  Fixture f;
  EventLog log({{1, 2, 0, 0}, {10, 1, 1, 0}}, {0, 10});
  auto city = build_city_networks(log, f.users, f.zips);
  EXPECT_EQ(city.g.num_nodes(), 2u);
  EXPECT_EQ(city.g.num_edges(), 1u);
  EXPECT_EQ(city.g_w.num_nodes(), 2u);
  EXPECT_EQ(city.log.size(), 1u);
}

TEST(CityNetworks, BridgeKeptOutsideWhiteGraph) {
  Fixture f;
  EventLog log({{1, 2, 0, 0}, {10, 1, 1, 0}, {2, 10, 2, 0}}, {0, 10});
  auto city = build_city_networks(log, f.users, f.zips);
  ASSERT_TRUE(city.g.index_of(10).has_value());
  EXPECT_EQ(city.g.role(*city.g.index_of(10)), NodeRole::Black);
  EXPECT_FALSE(city.g_w.index_of(10).has_value());
  EXPECT_EQ(city.log.size(), 3u);
  EXPECT_EQ(city.log_w.size(), 1u);
}

TEST(CityNetworks, ExternalToExternalCallDropped) {
  Fixture f;
  EventLog log({{1, 2, 0, 0}, {20, 10, 1, 0}, {30, 1, 2, 0}}, {0, 10});
  auto city = build_city_networks(log, f.users, f.zips);
  EXPECT_FALSE(city.g.index_of(20).has_value());
  EXPECT_FALSE(city.g.index_of(30).has_value());
  EXPECT_EQ(city.g.num_edges(), 1u);
}

TEST(CityNetworks, NoWhitesIsAnError) {
  Fixture f;
  EventLog log({{20, 10, 1, 0}}, {0, 10});
  EXPECT_THROW(build_city_networks(log, f.users, f.zips), DataError);
}

TEST(CityNetworks, InvariantsOnSyntheticInput) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SynthCdrOptions o;
    o.seed = seed;
    o.horizon = 3.0;
    auto data = synth_cdr(o);
    auto city = build_city_networks(data.log, data.users, {o.zip});
    for (auto [u, v] : city.g.edges()) {
      EXPECT_TRUE(city.g.role(u) == NodeRole::White || city.g.role(v) == NodeRole::White);
    }
    std::size_t whites = 0, white_edges = 0;
    for (NodeIndex i = 0; i < city.g.num_nodes(); ++i) {
      if (city.g.role(i) == NodeRole::White) {
        ++whites;
        EXPECT_TRUE(city.g_w.index_of(city.g.id(i)).has_value());
      } else {
        EXPECT_GE(city.g.degree(i), 2u);
      }
    }
    for (auto [u, v] : city.g.edges()) white_edges += city.g.role(u) == NodeRole::White && city.g.role(v) == NodeRole::White;
    EXPECT_EQ(whites, city.g_w.num_nodes());
    EXPECT_EQ(white_edges, city.g_w.num_edges());
  }
}

TEST(SynthCdr, RatioDeterminismAndEmptyHorizon) {
  SynthCdrOptions o;
  o.horizon = 2.0;
  auto a = synth_cdr(o);
  std::size_t externals = 0, whites = 0;
  for (const auto& [id, info] : a.users.users()) {
    (info.zip ? whites : externals) += 1;
  }
  EXPECT_EQ(whites, 100u);
  EXPECT_EQ(externals, 5 * whites);

  std::ostringstream first, second;
  write_cdr(first, a);
  write_cdr(second, synth_cdr(o));
  EXPECT_EQ(first.str(), second.str());
  EXPECT_FALSE(a.log.empty());

  o.horizon = 0.0;
  auto empty = synth_cdr(o);
  EXPECT_TRUE(empty.log.empty());
  EXPECT_EQ(empty.users, a.users);
}

TEST(SynthCdr, NonCompanyUsersOnlyReceiveCalls) {
  SynthCdrOptions o;
  o.horizon = 2.0;
  auto data = synth_cdr(o);
  for (const Event& e : data.log.events()) EXPECT_TRUE(data.users.find(e.u)->is_company);
}

TEST(Cdr, RoundTrip) {
  SynthCdrOptions o;
  o.horizon = 1.0;
  auto data = synth_cdr(o);
  std::stringstream buffer;
  write_cdr(buffer, data);
  auto back = parse_cdr(buffer);
  EXPECT_EQ(back.users, data.users);
  EXPECT_EQ(back.log, data.log);
}

}  // namespace
}  // namespace sispread
