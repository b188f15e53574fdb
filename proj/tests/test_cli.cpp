// Command-line front-end, driven in-process.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "qconc_cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qconc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qconc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(QCONC_SAMPLES_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qconc_cli_" + name);
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Formatting, Numbers) {
  using qconc::cli::num;
  using qconc::cli::sci;
  EXPECT_EQ(num(2.0 / 3), "0.666666666667");
  EXPECT_EQ(num(-0.0), "0");
  EXPECT_EQ(sci(0.0), "0.0e0");
  EXPECT_EQ(sci(1.5e-13), "1.5e-13");
  EXPECT_EQ(sci(9.96e-5), "1.0e-4");
  EXPECT_EQ(sci(-2.5), "-2.5e0");
}

TEST(Cli, ConcurrenceOfCatalogState) {
  const auto r = run({"concurrence", "--state", "su3.phi4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("C = (0, 0.666666666667, 0, 0, 0, -0.666666666667, -0.666666666667, 0, 0)"), std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("|C|^2 = 1.33333333333"), std::string::npos);
}

TEST(Cli, ConcurrenceJson) {
  const auto r = run({"--format", "json", "concurrence", "--state", "su3.phi1"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["components"].size(), 9u);
  EXPECT_EQ(j["components"][2]["alpha"], "a1");
  EXPECT_EQ(j["components"][2]["beta"], "a1+a2");
  EXPECT_NEAR(j["norm_sq"].get<double>(), 4.0 / 3, 1e-12);
}

TEST(Cli, VerifyAlgebra) {
  const auto r = run({"verify-algebra", "--dim", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("max residual 0.0e0"), std::string::npos) << r.out;
  EXPECT_EQ(run({"verify-algebra", "--dim", "1"}).code, 1);
}

TEST(Cli, MixedFromFile) {
  const auto r = run({"mixed", "--file", sample("werner_p0.5.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("|C|   = 0.25\n"), std::string::npos) << r.out;
  const auto w = run({"mixed", "--werner", "0.2"});
  EXPECT_NE(w.out.find("|C|   = 0\n"), std::string::npos) << w.out;
  const auto id = run({"mixed", "--file", sample("maximally_mixed_3x3.json")});
  EXPECT_EQ(id.code, 0);
  EXPECT_NE(id.out.find("|C|^2 = 0\n"), std::string::npos);
}

TEST(Cli, PureStateFile) {
  const auto r = run({"concurrence", "--file", sample("bell_phi_plus.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("C = (1)"), std::string::npos);
}

TEST(Cli, UnnormalizedInput) {
  const auto p = temp_file("short.json");
  std::ofstream(p) << R"({"dimA":2,"dimB":2,"amplitudes":[{"i":1,"j":1,"re":0.6},{"i":2,"j":2,"re":0.7348469228349535}]})";
  const auto r = run({"concurrence", "--file", p.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(count_lines(r.err), 1) << r.err;
  EXPECT_NE(r.err.find("0.9"), std::string::npos) << r.err;
  EXPECT_EQ(run({"concurrence", "--file", p.string(), "--normalize"}).code, 0);
  std::filesystem::remove(p);
}

TEST(Cli, DomainErrors) {
  EXPECT_EQ(run({"concurrence", "--state", "su3.nothing"}).code, 1);
  EXPECT_EQ(run({"concurrence", "--file", "/nonexistent.json"}).code, 1);
  EXPECT_EQ(run({"entropy", "--file", sample("werner_p0.5.json")}).code, 1);
  EXPECT_EQ(run({"volume", "--basis", "su3.nothing"}).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"concurrence"}).code, 2);
  EXPECT_EQ(run({"concurrence", "--state", "su3.phi1", "--file", "x.json"}).code, 2);
  EXPECT_EQ(run({"surface", "--basis", "su3.psi-", "--n-theta", "1"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "catalog"}).code, 2);
  EXPECT_EQ(run({"volume"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"volume", "--help"}).code, 0);
}

TEST(Cli, Volume) {
  const auto r = run({"volume", "--basis", "so3.pentad", "--grid", "200"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("volume 3.18"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("convergence delta vs 100x100"), std::string::npos) << r.out;
}

TEST(Cli, SurfaceCsvIsDeterministic) {
  const std::vector<std::string> args{"surface", "--basis", "so3.singlet-phi", "--n-theta", "7", "--n-phi", "8"};
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "theta,phi,radius");
  EXPECT_EQ(count_lines(a.out), 1 + 7 * 8);
}

TEST(Cli, EdgeScanCsv) {
  const auto r = run({"edge-scan", "--format", "csv", "--view", "locus"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "p,q,norm");
  EXPECT_EQ(count_lines(r.out), 3);
  EXPECT_NE(r.out.find("0.471404520791,0.333333333333,"), std::string::npos) << r.out;
  const auto full = run({"edge-scan", "--format", "csv", "--points", "90"});
  EXPECT_EQ(count_lines(full.out), 91);
}

TEST(Cli, EntropyBoundsCsv) {
  const auto r = run({"entropy-bounds", "--points", "3", "--grid", "50"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string header, first, mid, last;
  std::getline(in, header);
  std::getline(in, first);
  std::getline(in, mid);
  std::getline(in, last);
  EXPECT_EQ(header, "norm,infimum,supremum");
  EXPECT_EQ(last.substr(0, last.find(',')), "1.15470053838");
  EXPECT_NE(last.find("1.58496250072,1.58496250072"), std::string::npos) << last;
}

TEST(Cli, EntropyAndSecular) {
  const auto e = run({"entropy", "--state", "su3.phi1"});
  ASSERT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("von Neumann entropy  1.58496250072"), std::string::npos) << e.out;
  const auto s = run({"secular-check", "--state", "so3.chi+0"});
  ASSERT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("max residual"), std::string::npos);
}

TEST(Cli, OutPath) {
  const auto p = temp_file("catalog.csv");
  const auto r = run({"--format", "csv", "--out", p.string(), "catalog"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(p);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "name,dimA,dimB,norm_sq");
  std::filesystem::remove(p);
  EXPECT_EQ(run({"--out", "/nonexistent/dir/x.txt", "catalog"}).code, 1);
}
