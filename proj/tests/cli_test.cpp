#include <gtest/gtest.h>

#include <cstdlib>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using movcone::cli::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"movcone"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  int code = movcone::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json json_of(std::initializer_list<const char*> args) {
  std::vector<const char*> all{"--format", "json"};
  all.insert(all.end(), args.begin(), args.end());
  std::vector<const char*> argv{"movcone"};
  argv.insert(argv.end(), all.begin(), all.end());
  std::ostringstream out, err;
  int code = movcone::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  EXPECT_EQ(code, 0) << err.str();
  return Json::parse(out.str());
}

std::vector<std::string> exact_slopes(const Json& rows) {
  std::vector<std::string> out;
  for (const auto& row : rows) {
    if (row["kind"] == "wall") out.push_back(row["slope"]["exact"]);
  }
  return out;
}

}  // namespace

TEST(Cli, Movable) {
  Json ten = json_of({"movable", "--n", "3", "--h2", "10"});
  EXPECT_EQ(ten["command"], "movable");
  EXPECT_EQ(ten["results"]["mu"]["exact"], "30/19");
  EXPECT_EQ(ten["results"]["mu"]["decimal"], "1.579");
  EXPECT_EQ(ten["results"]["case"], 3);
  EXPECT_EQ(ten["results"]["witness"], "(19,6)");

  Json sixteen = json_of({"movable", "--n", "3", "--h2", "16"});
  EXPECT_EQ(sixteen["results"]["mu"]["exact"], "2");
  EXPECT_EQ(sixteen["results"]["case"], 1);

  Json two = json_of({"movable", "--n", "2", "--h2", "2"});
  EXPECT_EQ(two["results"]["mu"]["exact"], "1");
  EXPECT_EQ(two["results"]["case"], 1);
}

TEST(Cli, Walls) {
  Json ten = json_of({"walls", "--n", "3", "--h2", "10"});
  EXPECT_EQ(exact_slopes(ten["results"]["walls"]), (std::vector<std::string>{"10/7", "20/13"}));
  EXPECT_EQ(ten["results"]["cap_warning"], false);
  EXPECT_EQ(ten["results"]["walls"].back()["kind"], "boundary");
  EXPECT_TRUE(exact_slopes(json_of({"walls", "--n", "3", "--h2", "2"})["results"]["walls"]).empty());
  EXPECT_EQ(exact_slopes(json_of({"walls", "--n", "3", "--h2", "4"})["results"]["walls"]),
            std::vector<std::string>{"4/5"});
}

TEST(Cli, WallsCapFromFlagAndEnvironment) {
  Json flag = json_of({"walls", "--h2", "10", "--m-max", "1"});
  EXPECT_EQ(flag["results"]["m_max"], 1);
  EXPECT_EQ(exact_slopes(flag["results"]["walls"]).size(), 1u);

  ::setenv(movcone::cli::kMMaxEnv, "1", 1);
  Json env = json_of({"walls", "--h2", "10"});
  Json both = json_of({"walls", "--h2", "10", "--m-max", "5"});
  ::setenv(movcone::cli::kMMaxEnv, "oops", 1);
  Outcome bad = invoke({"walls", "--h2", "10"});
  ::unsetenv(movcone::cli::kMMaxEnv);
  EXPECT_EQ(env["results"]["m_max"], 1);
  EXPECT_EQ(both["results"]["m_max"], 5);
  EXPECT_EQ(bad.code, movcone::cli::kExitUsage);
}

TEST(Cli, TableOne) {
  Json doc = json_of({"table1"});
  const Json& rows = doc["results"]["rows"];
  ASSERT_EQ(rows.size(), 12u);
  for (const auto& row : rows) {
    if (row["h2"] == 14) {
      EXPECT_TRUE(row["walls"].empty());
      EXPECT_EQ(row["mu"]["exact"], "7/4");
    }
  }
  Outcome plain = invoke({"table1", "--degrees", "10"});
  EXPECT_NE(plain.out.find("10/7, 20/13"), std::string::npos);
}

TEST(Cli, TableTwo) {
  Json reference = json_of({"table2", "--paper-rows"});
  bool seen = false;
  for (const auto& row : reference["results"]["rows"]) {
    if (row["h2"] != 76) continue;
    seen = true;
    EXPECT_EQ(row["bound"]["decimal"], "8.143");
    EXPECT_EQ(row["knutsen"], 8);
    EXPECT_EQ(row["sqrt_h2"], "8.718");
  }
  EXPECT_TRUE(seen);

  Json upto8 = json_of({"table2", "--max-h2", "8"});
  const Json& rows = upto8["results"]["rows"];
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0]["h2"], 6);
  EXPECT_EQ(rows[0]["bound"]["exact"], "9/5");
  EXPECT_EQ(rows[0]["bound"]["decimal"], "1.800");
  EXPECT_EQ(rows[1]["h2"], 8);

  Json squares = json_of({"table2", "--max-h2", "8", "--include-squares"});
  EXPECT_EQ(squares["results"]["rows"].size(), 3u);
}

TEST(Cli, Scan) {
  Json fourteen = json_of({"scan", "--max-h2", "14"});
  EXPECT_EQ(fourteen["results"]["total"], 5);
  EXPECT_GE(fourteen["results"]["better"].get<int>(), 2);

  Json empty = json_of({"scan", "--max-h2", "4"});
  EXPECT_EQ(empty["results"]["total"], 0);
  EXPECT_TRUE(empty["results"]["fraction"].is_null());
}

TEST(Cli, ScanIndependentOfJobs) {
  Json one = json_of({"scan", "--max-h2", "50000", "--jobs", "1"});
  Json eight = json_of({"scan", "--max-h2", "50000", "--jobs", "8"});
  EXPECT_EQ(one["results"]["better"], eight["results"]["better"]);
  EXPECT_EQ(one["results"]["total"], eight["results"]["total"]);
  EXPECT_EQ(one["results"]["fraction"], eight["results"]["fraction"]);
}

TEST(Cli, Bounds) {
  Json doc = json_of({"bounds", "--h2", "8"});
  const Json& r = doc["results"];
  EXPECT_EQ(r["knutsen"], 2);
  EXPECT_EQ(r["closed_form"]["exact"], "32/15");
  EXPECT_EQ(r["best"]["exact"], "24/11");
  EXPECT_EQ(r["best_n"], 3);
  EXPECT_EQ(r["szemberg_conjecture"]["exact"], "8/3");

  Json square = json_of({"bounds", "--h2", "16"});
  EXPECT_TRUE(square["results"]["szemberg_conjecture"].is_null());
}

TEST(Cli, CheckObservationPellNested) {
  EXPECT_EQ(json_of({"check-observation", "--h2", "6"})["results"]["verdict"], "OnInteriorWall");

  Json pell = json_of({"pell", "--d", "10"});
  EXPECT_EQ(pell["results"]["solutions"][0]["x"], "19");
  EXPECT_EQ(pell["results"]["solutions"][0]["y"], "6");
  Json two = json_of({"pell", "--a", "2", "--b", "5"});
  EXPECT_EQ(two["results"]["found"], false);
  Json filtered = json_of({"pell", "--d", "24", "--q", "2"});
  EXPECT_EQ(filtered["results"]["solutions"][0]["x"], "5");

  Json p2 = json_of({"nested", "--surface", "p2", "--r", "5"});
  EXPECT_EQ(p2["results"]["eps_inf"]["exact"], "1/5");
  Json k3 = json_of({"nested", "--surface", "k3", "--h2", "2", "--r", "2"});
  EXPECT_EQ(k3["results"]["eps_inf"]["exact"], "1/2");
  Json hirz = json_of({"nested", "--surface", "hirzebruch", "--e", "1", "--a", "1", "--b", "2", "--r", "2"});
  EXPECT_EQ(hirz["results"]["eps_inf"]["exact"], "1/2");
  EXPECT_EQ(hirz["results"]["h2"], 3);
}

TEST(Cli, JsonRoundTripsByteForByte) {
  for (auto args : std::vector<std::vector<const char*>>{
           {"--format", "json", "table1"},
           {"--format", "json", "table2"},
           {"--format", "json", "walls", "--h2", "10"},
           {"--format", "json", "bounds", "--h2", "80"},
           {"--format", "json", "pell", "--d", "421", "--count", "3"},
           {"--format", "json", "nested", "--r", "16"},
           {"--format", "json", "movable", "--n", "4", "--h2", "4"}}) {
    std::vector<const char*> argv{"movcone"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    movcone::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    const std::string text = out.str();
    ASSERT_FALSE(text.empty());
    EXPECT_EQ(movcone::cli::render_json(Json::parse(text)), text);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"movable", "--h2", "10"}).code, movcone::cli::kExitOk);

  Outcome domain = invoke({"--format", "json", "movable", "--n", "4", "--h2", "8"});
  EXPECT_EQ(domain.code, movcone::cli::kExitDomain);
  Json err = Json::parse(domain.out);
  EXPECT_EQ(err["command"], "movable");
  EXPECT_TRUE(err["error"].is_string());

  EXPECT_EQ(invoke({"movable", "--h2", "7"}).code, movcone::cli::kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, movcone::cli::kExitUsage);
  EXPECT_EQ(invoke({}).code, movcone::cli::kExitUsage);
  EXPECT_EQ(invoke({"--format", "xml", "table1"}).code, movcone::cli::kExitUsage);
  EXPECT_EQ(invoke({"pell", "--a", "2"}).code, movcone::cli::kExitUsage);
  EXPECT_EQ(invoke({"nested", "--r", "1"}).code, movcone::cli::kExitDomain);
  EXPECT_EQ(invoke({"pell", "--d", "9"}).code, movcone::cli::kExitDomain);
  EXPECT_EQ(invoke({"--help"}).code, movcone::cli::kExitOk);
}

TEST(Cli, CsvHasHeaderDecimalsAndQuoting) {
  Outcome csv = invoke({"--format", "csv", "table1", "--degrees", "10", "6"});
  std::istringstream lines(csv.out);
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(header, "h2,walls,walls_decimal,mu,mu_decimal,cap_warning");
  EXPECT_EQ(first, "10,10/7 20/13,1.429 1.538,30/19,1.579,false");
  EXPECT_EQ(second, "6,1,1.000,6/5,1.200,false");
  EXPECT_EQ(csv.out.find('\r'), std::string::npos);

  Outcome pell = invoke({"--format", "csv", "pell", "--d", "2", "--q", "5"});
  EXPECT_EQ(pell.out, "x,y\n99,70\n");

  Outcome summary = invoke({"--format", "csv", "pell", "--a", "2", "--b", "5"});
  EXPECT_EQ(summary.out, "x,y\n");

  EXPECT_EQ(movcone::cli::detail::csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(movcone::cli::detail::csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Cli, PrecisionAndMarkdown) {
  Json doc = json_of({"--precision", "6", "movable", "--h2", "10"});
  EXPECT_EQ(doc["results"]["mu"]["decimal"], "1.578947");
  Outcome md = invoke({"--format", "markdown", "walls", "--h2", "4"});
  EXPECT_EQ(md.code, 0);
  EXPECT_NE(md.out.find("| wall | 4/5 (0.800) |"), std::string::npos);
}
