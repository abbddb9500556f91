#include <gtest/gtest.h>

#include <albert/io.hpp>
#include <albert_cli/cli.hpp>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "albert");
  std::ostringstream out, err;
  const int code = albert::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path) << text;
  return path.string();
}

const char* kDiag123 =
    R"({"diag":[1,2,3],"o12":[0,0,0,0,0,0,0,0],"o13":[0,0,0,0,0,0,0,0],"o23":[0,0,0,0,0,0,0,0]})";

}  // namespace

TEST(Cli, DecomposeDiagonal) {
  const Result r = run({"decompose", write_temp("diag123.json", kDiag123)});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  const std::vector<double> ev = j["eigenvalues"];
  EXPECT_NEAR(ev[0], 3, 1e-14);
  EXPECT_NEAR(ev[1], 2, 1e-14);
  EXPECT_NEAR(ev[2], 1, 1e-14);
  EXPECT_EQ(j["pairs"][0]["idempotent"]["diag"], json::array({0.0, 0.0, 1.0}));
}

TEST(Cli, ApplyFamily) {
  const Result r = run({"apply", "rot:zx", "1.5707963267948966", write_temp("a.json", kDiag123)});
  ASSERT_EQ(r.code, 0) << r.err;
  const albert::Hermitian3 m = albert::parse_matrix(r.out);
  EXPECT_NEAR(m.diag[0], 1.5, 1e-15);
  EXPECT_NEAR(m.o12[0], -0.5, 1e-15);

  const Result neg = run({"apply", "boost:tz", "-0.5", write_temp("b.json", kDiag123)});
  ASSERT_EQ(neg.code, 0) << neg.err;
  EXPECT_NEAR(albert::parse_matrix(neg.out).diag[0], std::exp(-0.5), 1e-15);
}

TEST(Cli, ApplyWritesJsonFile) {
  const std::string out = (std::filesystem::path(::testing::TempDir()) / "applied.json").string();
  const Result r = run({"apply", "phase:l", "0.3", write_temp("c.json", kDiag123), "--json", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_NO_THROW(albert::parse_matrix(buf.str()));
}

TEST(Cli, DistinctErrorCodes) {
  const std::string good = write_temp("good.json", kDiag123);
  EXPECT_EQ(run({"apply", "rot:xy:q", "1", good}).code, albert::cli::kUnknownFamily);
  EXPECT_EQ(run({"decompose", write_temp("bad.json", "{\"diag\": [1,")}).code,
            albert::cli::kUsageError);
  const std::string seven =
      R"({"diag":[1,2,3],"o12":[0,0,0,0,0,0,0],"o13":[0,0,0,0,0,0,0,0],"o23":[0,0,0,0,0,0,0,0]})";
  const Result len = run({"decompose", write_temp("seven.json", seven)});
  EXPECT_EQ(len.code, albert::cli::kUsageError);
  EXPECT_NE(len.err.find("o12"), std::string::npos);

  json rows = json::array();
  for (int r = 0; r < 3; ++r) {
    json row = json::array();
    for (int c = 0; c < 3; ++c) row.push_back(json::array({r == c ? 1 : 0, 0, 0, 0, 0, 0, 0, 0}));
    rows.push_back(row);
  }
  rows[0][1][2] = 1.0;  // (1,2) = j but (2,1) = 0
  const Result herm = run({"decompose", write_temp("nh.json", json{{"entries", rows}}.dump())});
  EXPECT_EQ(herm.code, albert::cli::kNotHermitian);
  EXPECT_NE(herm.err.find("Hermitian"), std::string::npos);

  EXPECT_EQ(run({"decompose", "/nonexistent/file.json"}).code, albert::cli::kUsageError);
  EXPECT_EQ(run({}).code, albert::cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, albert::cli::kUsageError);
  EXPECT_EQ(run({"verify", "--tol", "octonion.composition"}).code, albert::cli::kUsageError);
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, albert::cli::kUsageError);
}

TEST(Cli, HelpExitsZero) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("g2:c3"), std::string::npos);
}

TEST(Cli, Table) {
  const Result r = run({"table"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string header, row_i;
  std::getline(lines, header);
  std::getline(lines, row_i);
  std::istringstream cells(row_i);
  std::vector<std::string> v;
  for (std::string c; cells >> c;) v.push_back(c);
  // i times (i j k kl jl il l)
  EXPECT_EQ(v, (std::vector<std::string>{"i", "-1", "k", "-j", "jl", "-kl", "-l", "il"}));
}

TEST(Cli, StatesJson) {
  const Result r = run({"states"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 16u);
  for (const auto& s : j) {
    EXPECT_TRUE(s.contains("theta"));
    EXPECT_TRUE(s.contains("xi"));
    EXPECT_TRUE(s.contains("P"));
    EXPECT_LE(s["residuals"]["dirac"].get<double>(), 1e-12);
  }
  EXPECT_EQ(j.back()["label"], "sterile");
  EXPECT_EQ(j.back()["generation"], "none");
}

TEST(Cli, DimsReport) {
  const Result r = run({"dims"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  const std::map<std::string, int> expected = {{"E6", 78}, {"F4", 52}, {"boosts", 26}, {"G2", 14},
                                               {"SU3", 8},  {"SO8", 28}, {"SO7", 21}};
  for (const auto& [name, rank] : expected) {
    EXPECT_EQ(j[name]["rank"], rank) << name;
    EXPECT_EQ(j[name]["expected"], rank) << name;
    EXPECT_GE(j[name]["gap"].get<double>(), 1e3) << name;
  }
}

TEST(Cli, VerifyDeterministicAndExitCodes) {
  const Result a = run({"verify", "--seed", "3", "--trials", "30"});
  const Result b = run({"verify", "--seed", "3", "--trials", "30"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(json::parse(a.out)["passed"].get<bool>());

  const Result fail = run({"verify", "--trials", "10", "--suite", "jordan", "--tol",
                           "jordan.jordan_identity=1e-40"});
  EXPECT_EQ(fail.code, albert::cli::kVerificationFailed);
  EXPECT_EQ(json::parse(fail.out)["suites"].size(), 1u);
}
