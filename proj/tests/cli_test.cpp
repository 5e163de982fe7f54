#include <gtest/gtest.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_words(std::vector<std::string> words) {
  words.insert(words.begin(), "constacyclic");
  std::ostringstream out, err;
  const int code = constacyclic::cli::run(words, out, err);
  return {code, out.str(), err.str()};
}

Outcome run_line(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return run_words(words);
}

nlohmann::json first_json(const Outcome& o) {
  return nlohmann::json::parse(o.out.substr(0, o.out.find('\n')));
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  const auto e = s.find_last_not_of(' ');
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST(Cli, DistanceSingle) {
  const auto o = run_line("distance --p 3 --s 2 --i 4");
  ASSERT_EQ(o.code, 0);
  const auto j = first_json(o);
  EXPECT_EQ(j["distance"], 3);
  EXPECT_EQ(j["case"], "Beta");
  EXPECT_EQ(j["family"], "single");
  EXPECT_EQ(j["swapped"], false);
}

TEST(Cli, DistanceTwoFactor) {
  const auto j = first_json(run_line("distance --p 3 --s 1 --i 2 --j 1"));
  EXPECT_EQ(j["distance"], 3);
  EXPECT_EQ(j["case"], "T3");
  EXPECT_EQ(j["family"], "two");
  EXPECT_FALSE(j.contains("certificate"));
}

TEST(Cli, ZeroCodeDistanceIsNull) {
  const auto j = first_json(run_line("distance --p 3 --s 2 --i 9"));
  EXPECT_TRUE(j["distance"].is_null());
  EXPECT_EQ(j["case"], "ZeroCode");
}

TEST(Cli, Tables) {
  auto j = first_json(run_line("table --p 2 --s 3 --family single"));
  EXPECT_EQ(j["distances"], nlohmann::json::parse("[1,2,2,2,2,4,4,8,null]"));
  j = first_json(run_line("table --p 3 --s 1 --family single"));
  EXPECT_EQ(j["distances"], nlohmann::json::parse("[1,2,3,null]"));
  j = first_json(run_line("table --p 3 --s 1 --family two"));
  ASSERT_EQ(j["distances"].size(), 4u);
  for (const auto& row : j["distances"]) EXPECT_EQ(row.size(), 4u);
  EXPECT_EQ(j["distances"][0][0], 1);
  EXPECT_TRUE(j["distances"][3][3].is_null());
}

TEST(Cli, VerifyGrids) {
  auto o = run_line("verify --p 3 --s 1 --family two");
  EXPECT_EQ(o.code, 0);
  std::istringstream lines(o.out);
  int count = 0;
  for (std::string line; std::getline(lines, line); ++count) {
    EXPECT_EQ(nlohmann::json::parse(line)["agree"], true);
  }
  EXPECT_EQ(count, 16);

  o = run_line("verify --p 5 --s 1 --family single");
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(std::count(o.out.begin(), o.out.end(), '\n'), 6);
  EXPECT_EQ(o.out.find("\"agree\":false"), std::string::npos);
}

TEST(Cli, VerifyPartialAboveMaxDim) {
  const auto o = run_line("verify --p 7 --a 1 --negacyclic --s 1 --max-dim 6");
  EXPECT_EQ(o.code, 0);
  std::istringstream lines(o.out);
  for (std::string line; std::getline(lines, line);) {
    const auto j = nlohmann::json::parse(line);
    const int i = j["i"];
    if (i >= 1 && i < 4) {
      EXPECT_EQ(j["mode"], "partial") << i;
    } else if (i >= 4) {
      EXPECT_EQ(j["mode"], "full") << i;
    }
    EXPECT_NE(j["status"], "disagree");
  }
}

TEST(Cli, VerifyWithProperties) {
  const auto o = run_line("verify --p 3 --s 1 --i 1 --properties --seed 5 --samples 40");
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("\"property\":\"weight_retaining\""), std::string::npos);
  EXPECT_NE(o.out.find("\"violations\":0"), std::string::npos);
}

TEST(Cli, ClassifyAndWeight) {
  auto j = first_json(run_line("classify --p 3 --s 2 --i 8"));
  EXPECT_EQ(j["class"], "TauK");
  EXPECT_EQ(j["k"], 1);
  EXPECT_EQ(j["tau"], 2);
  EXPECT_TRUE(j["beta"].is_null());
  EXPECT_EQ(first_json(run_line("weight --p 2 --N 6"))["weight"], 4);
  EXPECT_EQ(first_json(run_line("weight --p 3 --N 9"))["weight"], 2);
}

TEST(Cli, GammaMinusOneIsNormalized) {
  const auto j = first_json(run_line("build --p 5 --s 1 --gamma -1 --i 1"));
  EXPECT_EQ(j["gamma"], "4");
  EXPECT_EQ(j["lambda"], "1");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_line("distance --p 4 --s 1 --i 1").code, 2);
  EXPECT_EQ(run_line("distance --p 3 --s 1").code, 2);
  EXPECT_EQ(run_line("bogus --p 3").code, 2);
  EXPECT_EQ(run_line("distance --p 3 --s 1 --i 1 --output yaml").code, 2);
  const auto bad = run_line("distance --p 3 --s 1 --i 7");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("exceeds p^s"), std::string::npos);
  const auto reducible = run_line("build --p 5 --n 2 --gamma 1 --s 1 --i 1");
  EXPECT_EQ(reducible.code, 2);
  EXPECT_NE(reducible.err.find("reducible"), std::string::npos);
  EXPECT_EQ(run_line("table --p 2 --s 2 --family two").code, 2);
  EXPECT_EQ(run_line("verify --p 3 --s 2 --family two --cap 10 --i 1 --j 1").code, 0);
  EXPECT_EQ(run_line("factor --p 7 --psi 3").code, 2);
  EXPECT_EQ(run_line("--help").code, 0);
}

TEST(Cli, OutputIsReproducible) {
  for (const char* line : {"verify --p 3 --s 1 --family two --properties --seed 3 --samples 30",
                           "table --p 5 --s 2 --family two", "build --p 2 --a 4 --n 3 --s 2 "
                                                             "--gamma 0,0,1,0 --i 1"}) {
    EXPECT_EQ(run_line(line).out, run_line(line).out) << line;
  }
}

TEST(Cli, GoldenFiles) {
  const std::string dir = CONSTACYCLIC_GOLDEN_DIR;
  std::ifstream cases(dir + "/cases.txt");
  ASSERT_TRUE(cases);
  int checked = 0;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find('|');
    const std::string name = trim(line.substr(0, bar));
    const std::string args = trim(line.substr(bar + 1));
    const auto o = run_line(args);
    EXPECT_EQ(o.code, 0) << name << ": " << o.err;
    EXPECT_EQ(o.out, slurp(dir + "/" + name + ".out")) << name;
    ++checked;
  }
  EXPECT_GE(checked, 20);
}
