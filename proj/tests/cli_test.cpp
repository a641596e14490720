#include "interfere/cli.hpp"

#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

namespace interfere {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

TEST(CliTest, Gen) {
  const auto r = call({"gen", "--family", "wheel:5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Ehfw\n");
  const auto c = call({"gen", "--connected", "4"});
  EXPECT_EQ(std::count(c.out.begin(), c.out.end(), '\n'), 6);
}

TEST(CliTest, IndexOfK4) {
  const auto r = call({"index", "--graph", "complete:4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["schema"], "1");
  EXPECT_EQ(j["command"], "index");
  EXPECT_EQ(j["index"], 3);
  EXPECT_EQ(j["graph"]["n"], 4);
}

TEST(CliTest, OutputIsStableApartFromTiming) {
  const std::vector<std::string> args{"nbd", "--graph", "wheel:5", "--complete"};
  auto a = parse(call(args));
  auto b = parse(call(args));
  a.erase("timing_ms");
  b.erase("timing_ms");
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["complete"], true);
}

TEST(CliTest, OtherCommands) {
  EXPECT_EQ(call({"brm", "--r", "2", "--m", "3"}).code, 0);
  EXPECT_EQ(call({"brm", "--krs", "3,4"}).code, 0);
  EXPECT_EQ(call({"linegraph", "--graph", "path:5", "--check", "injective"}).code, 0);
  EXPECT_EQ(call({"dpd", "--graph", "path:7", "--path-construction"}).code, 0);
  EXPECT_EQ(call({"domsets", "--graph", "g6:Ch"}).code, 0);
  EXPECT_EQ(call({"sweep", "--suite", "construction", "--max-n", "8"}).code, 0);
  EXPECT_EQ(call({"check", "--graph", "path:3", "--labeling", R"({"ground_set_size":2,"labels":[[0],[0,1],[1]]})",
                  "--set", "1"})
                .code,
            0);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(call({"bogus"}).code, cli::kUsage);
  EXPECT_EQ(call({"index"}).code, cli::kUsage);
  EXPECT_EQ(call({"index", "--graph", "g6:!!!"}).code, cli::kInput);
  EXPECT_EQ(call({"brm", "--r", "6", "--m", "4"}).code, cli::kBudget);
  EXPECT_EQ(call({"linegraph", "--graph", "path:2", "--check", "complete"}).code, cli::kUsage);
  const auto r = call({"index", "--graph", "nosuchfamily:3"});
  EXPECT_EQ(r.code, cli::kInput);
  EXPECT_TRUE(parse(r).contains("error"));
  EXPECT_FALSE(r.err.empty());
}

}  // namespace
}  // namespace interfere
