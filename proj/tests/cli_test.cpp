#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "commands.hpp"
#include "json.hpp"
#include "logdecomp/error.hpp"
#include "system_file.hpp"

namespace logdecomp::cli {
namespace {

const std::filesystem::path kData = LOGDECOMP_TEST_DATA_DIR;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("logdecomp_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> edges(const std::string& dot, const std::string& style) {
  std::vector<std::string> out;
  for (const std::string& line : lines(dot)) {
    if (line.find("style=" + style) == std::string::npos) continue;
    std::string pair;
    for (char c : line.substr(0, line.find('['))) {
      if (std::isdigit(static_cast<unsigned char>(c))) pair += c;
    }
    out.push_back(pair);
  }
  return out;
}

TEST(SystemFile, Schema) {
  EXPECT_THROW(parse_system("[]"), ValidationError);
  EXPECT_THROW(parse_system("{"), ValidationError);
  EXPECT_THROW(parse_system(R"({"outcomes": [{"id": "a", "p": 1}], "variables": {}, "x": 1})"),
               ValidationError);
  EXPECT_THROW(parse_system(R"({"outcomes": [{"id": "a", "p": 1}], "variables": {"X": [["b"]]}})"),
               ValidationError);
  EXPECT_THROW(
      parse_system(R"({"outcomes": [{"id": "a", "p": 1}], "variables": {}, "settings": {"base": 3}})"),
      ValidationError);
  const SystemFile s = parse_system(
      R"({"outcomes": [{"id": "a", "p": 0.5}, {"id": "b", "p": 0.5}],
          "variables": {"Z": [["a", "b"]], "A": [["a"], ["b"]]},
          "settings": {"base": "e", "tolerance": 1e-6}})");
  EXPECT_EQ(s.names(), (std::vector<std::string>{"Z", "A"}));
  EXPECT_EQ(s.space.base(), LogBase::e);
  EXPECT_EQ(s.variable("A").part_count(), 2U);
}

TEST(Cli, AtomsListsTheComplex) {
  const Invocation r = run_cli({"atoms", data("fig2.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 12U);  // header + 11 atoms
  EXPECT_EQ(lines(r.out)[1], "1;2      2     0.275489");
}

TEST(Cli, AtomsMinSizeOnSingleOutcome) {
  const std::string file = write_temp(
      "single.json", R"({"outcomes": [{"id": "w", "p": 1.0}], "variables": {"X": [["w"]]}})");
  const Invocation r = run_cli({"atoms", file, "--format", "csv", "--min-size", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "atom,size,measure\n");
}

TEST(Cli, AtomsFilteredByVariables) {
  const Invocation r = run_cli({"atoms", data("fig4.json"), "X", "Y", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 10U);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
  const Invocation fig2 = run_cli({"atoms", data("fig2.json"), "X", "Y", "--format", "csv"});
  EXPECT_EQ(lines(fig2.out).size(), 8U);
  EXPECT_EQ(lines(fig2.out)[1], "1;4,2,0.3609640474436811");
}

TEST(Cli, JsonAtomsResumToQuantities) {
  for (const auto& vars : std::vector<std::vector<std::string>>{{"X"}, {"X", "Y"}}) {
    std::vector<std::string> args{"atoms", data("fig2.json"), "--format", "json"};
    args.insert(args.end(), vars.begin(), vars.end());
    const Invocation atoms = run_cli(args);
    double sum = 0.0;
    const auto doc = nlohmann::json::parse(atoms.out);
    for (const auto& row : doc["atoms"]) {
      sum += row["measure"].get<double>();
    }
    std::vector<std::string> q{vars.size() == 1 ? "entropy" : "mi", data("fig2.json"), "--format",
                               "json"};
    q.insert(q.end(), vars.begin(), vars.end());
    const Invocation quantity = run_cli(q);
    ASSERT_EQ(quantity.code, 0) << quantity.err;
    EXPECT_NEAR(sum, nlohmann::json::parse(quantity.out)["value"].get<double>(), 1e-12);
  }
}

TEST(Cli, MutualInformation) {
  const Invocation r = run_cli({"mi", data("fig2.json"), "X", "Y"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("I(X;Y) = 0.00580214901434"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("routes: agree"), std::string::npos);
  const Invocation verbose = run_cli({"mi", data("fig2.json"), "X", "Y", "--verbose"});
  EXPECT_EQ(lines(verbose.out).size(), lines(r.out).size() + 7);
}

TEST(Cli, RegionEqualsMutualInformation) {
  const auto value = [](const Invocation& r) {
    return nlohmann::json::parse(r.out)["value"].get<double>();
  };
  const Invocation mi = run_cli({"mi", data("fig2.json"), "X", "Y", "--format", "json"});
  const Invocation region = run_cli({"region", data("fig2.json"), "X & Y", "--format", "json"});
  EXPECT_EQ(region.code, 0);
  EXPECT_EQ(value(mi), value(region));
}

TEST(Cli, GacsKorner) {
  const Invocation r = run_cli({"gk", data("fig4.json"), "X", "Y"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("partition: {1}|{2,3,4}"), std::string::npos);
  EXPECT_NE(r.out.find("= 0.46899559358928"), std::string::npos) << r.out;
}

TEST(Cli, CoInformation) {
  const Invocation r = run_cli({"coinfo", data("xor.json"), "A", "B", "C", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NEAR(nlohmann::json::parse(r.out)["value"].get<double>(), -1.0, 1e-12);
  const Invocation given = run_cli({"coinfo", data("xor.json"), "A", "B", "--given", "C"});
  EXPECT_EQ(given.code, 0);
  EXPECT_NE(given.out.find("= 1 bits"), std::string::npos) << given.out;
}

TEST(Cli, CheckPassesAndIsDeterministic) {
  const Invocation a = run_cli({"check", data("fig2.json"), "--seed", "42"});
  const Invocation b = run_cli({"check", data("fig2.json"), "--seed", "42"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(lines(a.out).size(), 12U);
  EXPECT_EQ(run_cli({"check", data("fig4.json")}).code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({"mi", data("fig2.json"), "X"}).code, 1);
  EXPECT_EQ(run_cli({"entropy", data("bad_sum.json"), "X"}).code, 2);
  EXPECT_EQ(run_cli({"check", data("bad_sum.json")}).code, 2);
  EXPECT_EQ(run_cli({"entropy", data("fig2.json"), "Q"}).code, 2);
  EXPECT_EQ(run_cli({"region", data("fig2.json"), "X & Q"}).code, 2);
  EXPECT_EQ(run_cli({"entropy", data("missing.json"), "X"}).code, 2);

  std::string big = R"({"outcomes": [)";
  for (int i = 0; i < 25; ++i) big += (i ? "," : "") + std::string(R"({"id": "o)") + std::to_string(i) + R"(", "p": 0.04})";
  big += R"(], "variables": {"X": [[)";
  for (int i = 0; i < 25; ++i) big += (i ? "," : "") + std::string("\"o") + std::to_string(i) + "\"";
  big += "]]}}";
  const std::string file = write_temp("big.json", big);
  EXPECT_EQ(run_cli({"atoms", file}).code, 3);
}

TEST(Cli, HelpIsNotAnError) { EXPECT_EQ(run_cli({"--help"}).code, 0); }

TEST(Cli, DotSkeleton) {
  const Invocation x = run_cli({"dot", data("fig4.json"), "X"});
  EXPECT_EQ(x.code, 0);
  EXPECT_EQ(edges(x.out, "dashed"), (std::vector<std::string>{"24"}));
  EXPECT_EQ(x.out.rfind("graph logdecomp {", 0), 0U);

  const Invocation dis = run_cli({"dot", data("fig4.json"), "X", "Y", "--dis"});
  EXPECT_EQ(edges(dis.out, "solid"), (std::vector<std::string>{"12", "13", "14"}));

  const std::string file = write_temp(
      "trivial.json",
      R"({"outcomes": [{"id": "1", "p": 0.5}, {"id": "2", "p": 0.25}, {"id": "3", "p": 0.25}],
          "variables": {"T": [["1", "2", "3"]]}})");
  const Invocation t = run_cli({"dot", file, "T"});
  EXPECT_TRUE(edges(t.out, "solid").empty());
  EXPECT_EQ(edges(t.out, "dashed").size(), 3U);
}

TEST(Cli, BaseOverride) {
  const Invocation r = run_cli({"entropy", data("fig2.json"), "X", "--base", "e", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["base"], "e");
  EXPECT_NEAR(doc["value"].get<double>(), 0.9709505944546686 * std::log(2.0), 1e-12);
}

}  // namespace
}  // namespace logdecomp::cli
