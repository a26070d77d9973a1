#include "stairpoly/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace stairpoly::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::ordered_json> json_lines(const std::string& text) {
  std::vector<nlohmann::ordered_json> out;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty()) out.push_back(nlohmann::ordered_json::parse(line));
  }
  return out;
}

std::vector<std::string> field_lines(const std::string& text, const std::string& key) {
  std::vector<std::string> out;
  std::istringstream lines(text);
  const std::string prefix = key + ": ";
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind(prefix, 0) == 0) out.push_back(line.substr(prefix.size()));
  }
  return out;
}

TEST(CliTest, Build) {
  auto r = invoke({"build", "sp", "--n", "7", "--h", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(field_lines(r.out, "polynomial"),
            std::vector<std::string>{"x^7+2x^6+3x^5+4x^4+4x^3+3x^2+2x+1"});

  r = invoke({"build", "msp", "--base-n", "4", "--d", "2", "--h", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(field_lines(r.out, "polynomial"), std::vector<std::string>{"x^8+2x^6+3x^4+2x^2+1"});

  r = invoke({"build", "gsp", "--n", "2", "--h", "1", "--alpha", "1/2"});
  EXPECT_EQ(field_lines(r.out, "polynomial"), std::vector<std::string>{"1/4x^2+1/2x+1"});

  r = invoke({"build", "sp", "--n", "7", "--h", "5"});
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_NE(r.err.find("height 5"), std::string::npos);

  r = invoke({"build", "msp", "--base-n", "4", "--d", "1", "--h", "3"});
  EXPECT_EQ(r.code, kExitDomainError);

  r = invoke({"build", "gsp", "--n", "4", "--h", "3", "--alpha", "0"});
  EXPECT_EQ(r.code, kExitDomainError);

  r = invoke({"build", "sp", "--n", "7"});
  EXPECT_EQ(r.code, kExitParseError);
}

TEST(CliTest, Classify) {
  auto r = invoke({"classify", "x^4+2x^3+3x^2+2x+1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(field_lines(r.out, "family"), std::vector<std::string>{"SP"});
  EXPECT_EQ(field_lines(r.out, "params"), std::vector<std::string>{"n=4 h=3"});

  r = invoke({"classify", "x^8+2x^6+3x^4+2x^2+1"});
  EXPECT_EQ(field_lines(r.out, "family"), std::vector<std::string>{"MSP"});
  EXPECT_EQ(field_lines(r.out, "params"), std::vector<std::string>{"base_n=4 d=2 h=3"});

  r = invoke({"classify", "x^2+5x+1"});
  EXPECT_EQ(field_lines(r.out, "family"), std::vector<std::string>{"NotInFamily"});

  r = invoke({"classify", "x^2+"});
  EXPECT_EQ(r.code, kExitParseError);
  EXPECT_NE(r.err.find("byte 4"), std::string::npos);
}

TEST(CliTest, ClassifyFromStdin) {
  auto r = invoke({"classify", "-"}, "x^4 - 2x^3 + 3x^2 - 2x + 1\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(field_lines(r.out, "family"), std::vector<std::string>{"ASP"});
  EXPECT_EQ(field_lines(r.out, "input"), std::vector<std::string>{"x^4 - 2x^3 + 3x^2 - 2x + 1"});
}

TEST(CliTest, Factor) {
  auto r = invoke({"factor", "x^4+2x^3+3x^2+2x+1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(field_lines(r.out, "factorization"), std::vector<std::string>{"Psi_3(x)^2"});
  EXPECT_EQ(field_lines(r.out, "verified"), std::vector<std::string>{"true"});

  r = invoke({"factor", "sp", "--n", "7", "--h", "1"});
  EXPECT_EQ(field_lines(r.out, "factorization"),
            std::vector<std::string>{"Psi_2(x)*Psi_4(x)*Psi_8(x)"});

  r = invoke({"factor", "x^3+x+1"});
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_NE(r.err.find("not in any staircase family"), std::string::npos);
}

TEST(CliTest, FactorNormalizeAsp) {
  auto r = invoke({"--normalize-asp", "factor", "asp", "--n", "4", "--h", "3"});
  EXPECT_EQ(field_lines(r.out, "factorization"), std::vector<std::string>{"Psi_6(x)^2"});
  r = invoke({"factor", "asp", "--n", "4", "--h", "3"});
  EXPECT_EQ(field_lines(r.out, "factorization"), std::vector<std::string>{"Psi_3(-x)^2"});
}

TEST(CliTest, Roots) {
  auto r = invoke({"--format", "json", "roots", "x^4+2x^3+3x^2+2x+1"});
  ASSERT_EQ(r.code, kExitOk);
  const auto records = json_lines(r.out);
  ASSERT_EQ(records.size(), 1u);
  const auto& roots = records[0]["roots"];
  ASSERT_EQ(roots.size(), 2u);
  std::uint64_t total = 0;
  for (const auto& root : roots) {
    EXPECT_EQ(root["order"], 3);
    EXPECT_EQ(root["multiplicity"], 2);
    EXPECT_LT(root["residual"].get<double>(), 1e-9);
    total += root["multiplicity"].get<std::uint64_t>();
  }
  EXPECT_EQ(total, 4u);
  EXPECT_NEAR(roots[0]["im"].get<double>(), -roots[1]["im"].get<double>(), 1e-12);
  EXPECT_EQ(records[0]["stability"]["verdict"], "NotSchurStable");
  EXPECT_EQ(records[0]["stability"]["marginal"], true);

  r = invoke({"--format", "json", "roots", "16x^4+16x^3+12x^2+4x+1"});
  const auto gsp = json_lines(r.out);
  ASSERT_EQ(gsp.size(), 1u);
  EXPECT_EQ(gsp[0]["family"], "GSP");
  EXPECT_EQ(gsp[0]["stability"]["max_modulus"], "1/2");
  EXPECT_EQ(gsp[0]["stability"]["verdict"], "SchurStable");
}

TEST(CliTest, Enumerate) {
  auto r = invoke({"enumerate", "--n", "7"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(field_lines(r.out, "polynomial"),
            (std::vector<std::string>{"x^7+x^6+x^5+x^4+x^3+x^2+x+1",
                                      "x^7+2x^6+2x^5+2x^4+2x^3+2x^2+2x+1",
                                      "x^7+2x^6+3x^5+3x^4+3x^3+3x^2+2x+1",
                                      "x^7+2x^6+3x^5+4x^4+4x^3+3x^2+2x+1"}));
  r = invoke({"enumerate", "--n", "1"});
  EXPECT_EQ(field_lines(r.out, "polynomial"), std::vector<std::string>{"x+1"});
  r = invoke({"--format", "json", "enumerate", "--n", "4"});
  EXPECT_EQ(json_lines(r.out).size(), 3u);
}

TEST(CliTest, Cyclotomic) {
  EXPECT_EQ(field_lines(invoke({"cyclotomic", "3"}).out, "polynomial"),
            std::vector<std::string>{"x^2+x+1"});
  EXPECT_EQ(field_lines(invoke({"cyclotomic", "1"}).out, "polynomial"),
            std::vector<std::string>{"x-1"});
  EXPECT_EQ(field_lines(invoke({"cyclotomic", "6"}).out, "polynomial"),
            std::vector<std::string>{"x^2-x+1"});
  EXPECT_EQ(invoke({"cyclotomic", "0"}).code, kExitDomainError);
}

TEST(CliTest, MaxDegreeGuard) {
  EXPECT_EQ(invoke({"--max-degree", "10", "build", "sp", "--n", "11", "--h", "1"}).code,
            kExitDomainError);
  EXPECT_EQ(invoke({"--max-degree", "10", "classify", "x^11+1"}).code, kExitParseError);
  EXPECT_EQ(invoke({"--max-degree", "10", "classify", "x^10+1"}).code, kExitOk);
}

TEST(CliTest, Verify) {
  auto r = invoke({"--format", "json", "verify", "--n-max", "20"});
  EXPECT_EQ(r.code, kExitOk);
  const auto records = json_lines(r.out);
  EXPECT_EQ(records.size(), 7u);
  for (const auto& rec : records) {
    EXPECT_EQ(rec["failed"], 0) << rec.dump();
    EXPECT_GT(rec["cases"].get<int>(), 0);
  }
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitParseError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitParseError);
  EXPECT_EQ(invoke({"--format", "xml", "cyclotomic", "3"}).code, kExitParseError);
  EXPECT_EQ(invoke({"build", "gsp", "--n", "4", "--h", "3", "--alpha", "1/0"}).code,
            kExitParseError);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

// Human output carries exactly the JSON fields, in the same order.
TEST(CliTest, HumanAndJsonCarrySameFields) {
  const std::vector<std::vector<std::string>> commands = {
      {"roots", "x^7+2x^6+3x^5+4x^4+4x^3+3x^2+2x+1"},
      {"factor", "gsp", "--n", "5", "--h", "2", "--alpha", "-3"},
      {"classify", "x^6+x^3+1"},
      {"build", "asp", "--n", "4", "--h", "2"},
      {"cyclotomic", "12"},
  };
  for (const auto& cmd : commands) {
    auto human_args = cmd;
    auto json_args = cmd;
    json_args.insert(json_args.begin(), {"--format", "json"});
    const auto human = invoke(human_args);
    const auto json = invoke(json_args);
    ASSERT_EQ(human.code, kExitOk);
    ASSERT_EQ(json.code, kExitOk);
    const auto record = json_lines(json.out).at(0);

    std::vector<std::string> human_keys;
    std::istringstream lines(human.out);
    for (std::string line; std::getline(lines, line);) {
      if (line.empty() || line[0] == ' ') continue;
      human_keys.push_back(line.substr(0, line.find(':')));
    }
    std::vector<std::string> json_keys;
    for (const auto& [key, value] : record.items()) json_keys.push_back(key);
    EXPECT_EQ(human_keys, json_keys);

    for (const auto& [key, value] : record.items()) {
      if (value.is_string()) {
        EXPECT_EQ(field_lines(human.out, key), std::vector<std::string>{value.get<std::string>()});
      }
    }
  }
}

}  // namespace
}  // namespace stairpoly::cli
