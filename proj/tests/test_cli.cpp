#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "maxgenus/cli.hpp"

using maxgenus::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, Intersect) {
  EXPECT_EQ(call({"intersect", "--scroll", "s003", "--d1", "4R", "--d2", "4R"}).out, "6\n");
  EXPECT_EQ(call({"intersect", "--scroll", "s003", "--d1", "5R", "--d2", "5R"}).out, "8\n");
  EXPECT_EQ(call({"intersect", "--scroll", "s003", "--d1", "7R", "--d2", "R~"}).out, "3\n");
  EXPECT_EQ(call({"intersect", "--scroll", "s111", "--d1", "H+R", "--d2", "H+R"}).out, "5\n");
  EXPECT_EQ(call({"intersect", "--scroll", "s111", "--d1", "H", "--d2", "H", "--d3", "H"}).out, "3\n");
}

TEST(Cli, Bound) {
  const auto r = call({"bound", "--d", "96", "--s", "9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("m=10 epsilon=5"), std::string::npos);
  EXPECT_NE(r.out.find("k=2"), std::string::npos);
  EXPECT_NE(r.out.find("G=529"), std::string::npos);
  EXPECT_NE(r.out.find("outside-theorem-range"), std::string::npos);
  const auto j = nlohmann::json::parse(call({"bound", "--d", "96", "--s", "9", "--format", "json"}).out);
  EXPECT_EQ(j["genus"], 529);
  EXPECT_EQ(j["closed_form_G"], "518");
  EXPECT_EQ(j["outside_theorem_range"], true);
  EXPECT_EQ(j["delta_h"].size(), 14u);
}

TEST(Cli, BoundHugeDegree) {
  const auto r = call({"bound", "--d", "100000000000000000000000000000", "--s", "9", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["genus"].is_string());
  EXPECT_EQ(j["outside_theorem_range"], false);
  EXPECT_FALSE(j.contains("delta_h"));
}

TEST(Cli, Classify) {
  const auto r = call({"classify", "--d", "147", "--s", "14", "--scroll", "s111"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["nonexistent"], true);
  for (const char* key : {"params", "scroll", "surface_class", "k", "coarse", "nonexistent", "outside_theorem_range",
                          "notes"})
    EXPECT_TRUE(j.contains(key)) << key;
  const auto both = nlohmann::json::parse(call({"classify", "--d", "104", "--s", "10", "--scroll", "s111"}).out);
  ASSERT_TRUE(both.is_array());
  EXPECT_EQ(both.size(), 2u);
  EXPECT_EQ(call({"classify", "--d", "40", "--s", "8", "--scroll", "s111"}).code, 2);
  EXPECT_EQ(call({"classify", "--d", "40", "--s", "8", "--scroll", "s111", "--force"}).code, 0);
}

TEST(Cli, H0AndMultiplicity) {
  EXPECT_EQ(call({"h0", "--scroll", "s012", "--class", "H-2R"}).out, "1\n");
  EXPECT_EQ(call({"h0", "--scroll", "s111", "--class", "2R"}).out, "3\n");
  EXPECT_EQ(call({"multiplicity", "--d1", "10H~+3R~", "--d2", "5R~"}).out, "5\n");
}

TEST(Cli, Construct) {
  const auto j = nlohmann::json::parse(call({"construct", "--d", "114", "--s", "11"}).out);
  EXPECT_EQ(j["required_scroll"], "S012");
  EXPECT_EQ(j["expected_genus"], 648);
  EXPECT_EQ(j["genus_profile"], 648);
  EXPECT_EQ(j["flags"][0], "reconciled via oracle");
}

TEST(Cli, SweepCsv) {
  const auto r = call({"sweep", "--s-min", "9", "--s-max", "12", "--m", "w+5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 43u);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "d,s,m,epsilon,w,v,k,delta,e,genus,case,residual_degree,status");
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, SweepJson) {
  const auto r = call({"sweep", "--s-min", "9", "--s-max", "9", "--m", "10", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 9u);
  std::vector<long> genera;
  for (const auto& row : j) genera.push_back(row["genus_profile"].get<long>());
  for (long g : {475L, 496L, 529L, 562L}) EXPECT_NE(std::find(genera.begin(), genera.end(), g), genera.end()) << g;
}

TEST(Cli, VerifyAndDeterminism) {
  const std::vector<std::string> args{"verify", "--s-min", "9", "--s-max", "14", "--m", "w+2..w+4"};
  const auto a = call(args);
  const auto b = call(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["ok"], true);
  EXPECT_TRUE(j.contains("discrepancy"));
  const auto csv = call({"verify", "--s-min", "9", "--s-max", "9", "--m", "10", "--format", "csv"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "s,epsilon,m,d,k,v,scroll,genus_profile,genus_liaison,status");
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "maxgenus_cli_out.txt";
  const auto r = call({"--out", path, "intersect", "--scroll", "s003", "--d1", "4R", "--d2", "4R"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "6");
  std::remove(path.c_str());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"bogus"}).code, 2);
  EXPECT_EQ(call({"intersect", "--scroll", "s003", "--d1", "4Q", "--d2", "4R"}).code, 2);
  EXPECT_EQ(call({"bound", "--d", "nine", "--s", "9"}).code, 2);
  EXPECT_EQ(call({"bound", "--d", "9", "--s", "3"}).code, 2);
  EXPECT_EQ(call({"sweep", "--format", "xml"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}
