#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "covchan/io.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace covchan;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const std::string& binary() {
  static std::string bin = [] {
    const char* env = std::getenv("COVCHAN_BIN");
    REQUIRE_MESSAGE(env != nullptr, "COVCHAN_BIN must point at the CLI binary");
    return std::string(env);
  }();
  return bin;
}

const std::string& workdir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/covchan-cli-XXXXXX";
    char* d = mkdtemp(tmpl);
    REQUIRE(d != nullptr);
    return std::string(d);
  }();
  return dir;
}

RunResult run(const std::string& args) {
  std::string out_path = workdir() + "/stdout.txt";
  std::string err_path = workdir() + "/stderr.txt";
  std::string cmd = "'" + binary() + "' " + args + " > '" + out_path + "' 2> '" + err_path + "'";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

}  // namespace

TEST_CASE("family subcommand writes a classified channel file") {
  std::string path = workdir() + "/su36.json";
  RunResult r = run("family su3-6 --param p=0.5 --out " + path);
  REQUIRE(r.exit_code == 0);
  Json report = Json::parse(r.out);
  CHECK(report["meta"]["family"] == "su3-6");
  CHECK(report["meta"]["tp"] == true);
  CHECK(report["meta"]["cp"] == true);
  Json meta;
  Channel ch = read_channel_file(path, &meta);
  CHECK(ch.d == 3);
  CHECK(ch.kraus.size() == 9);
  CHECK(meta["family"] == "su3-6");
}

TEST_CASE("family subcommand surfaces non-CP warnings without failing") {
  RunResult r = run("family su3-8 --param p=0.9");
  REQUIRE(r.exit_code == 0);
  Json report = Json::parse(r.out);
  CHECK(report["meta"]["cp"] == false);
  REQUIRE(report["meta"].contains("warnings"));
  std::string all;
  for (const auto& w : report["meta"]["warnings"]) all += w.get<std::string>();
  CHECK(all.find("not completely positive") != std::string::npos);
}

TEST_CASE("constraint violations exit with code 2 and a named constraint") {
  RunResult r = run("family cyclicZ3 --param a00=1,a11=0.5");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("column") != std::string::npos);
  CHECK(run("family nope").exit_code == 2);
  CHECK(run("classify /nonexistent.json").exit_code == 2);
}

TEST_CASE("classify reports flags and the affine zero patterns") {
  std::string path = workdir() + "/pauli.json";
  REQUIRE(run("family pauli --param p00=1 --out " + path).exit_code == 0);
  RunResult r = run("classify " + path);
  REQUIRE(r.exit_code == 0);
  Json report = Json::parse(r.out);
  CHECK(report["cp"] == true);
  CHECK(report["tp"] == true);
  CHECK(report["unital"] == true);
  CHECK(report["row0TailNorm"].get<double>() <= 1e-12);
  CHECK(report["col0TailNorm"].get<double>() <= 1e-12);
  CHECK(report["lambda00"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("solve reproduces the Schur-normalized strict-mixing channel") {
  std::string prefix = workdir() + "/mult";
  RunResult r = run("solve --group su3 --omega 8 --tp-normalize --channel-out " + prefix);
  REQUIRE(r.exit_code == 0);
  Json report = Json::parse(r.out);
  CHECK(report["multiplicity"] == 1);
  CHECK(report["omegaDim"] == 8);
  CHECK(report["residual"].get<double>() <= 1e-8);
  double c = report["tpNormalized"][0]["meta"]["tpNormalizationC"].get<double>();
  CHECK(c == doctest::Approx(8.0 / 3.0).epsilon(1e-9));
  Channel ch = read_channel_file(prefix + "_0.json");
  for (const Matrix& rho : testutil::densities(3, 5)) {
    Matrix expect = (3.0 * rho.trace() * Matrix::Identity(3, 3) - rho) / 8.0;
    CHECK(testutil::diff(covchan::apply(ch, rho), expect) <= 1e-10);
  }
}

TEST_CASE("solve exits 3 when the character does not occur") {
  RunResult r = run("solve --group su3 --omega 6");
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("no nonzero solution") != std::string::npos);
}

TEST_CASE("solve reports finite-group multiplicities") {
  RunResult r = run("solve --group s3 --omega 2");
  REQUIRE(r.exit_code == 0);
  Json report = Json::parse(r.out);
  CHECK(report["multiplicity"] == 3);
  CHECK(report["equation"] == "covariance");
  RunResult sym = run("solve --group s3 --omega 2 --symmetric");
  REQUIRE(sym.exit_code == 0);
  CHECK(Json::parse(sym.out)["equation"] == "symmetry");
}

TEST_CASE("capacity sweep writes a CSV audit table") {
  std::string csv = workdir() + "/sweep.csv";
  RunResult r = run("capacity --family su3-6 --sweep p=0:1:0.1 --csv " + csv);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "p,sMin,capacity,closedForm,absDiff");
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++rows;
    auto last_comma = line.rfind(',');
    double diff = std::stod(line.substr(last_comma + 1));
    CHECK(diff <= 1e-6);
  }
  CHECK(rows == 11);
}

TEST_CASE("capacity refuses non-CP inputs unless forced to the closed form") {
  RunResult refuse = run("capacity --family su3-8 --param p=0.9");
  CHECK(refuse.exit_code == 2);
  CHECK(refuse.err.find("--force") != std::string::npos);
  RunResult forced = run("capacity --family su3-8 --param p=0.9 --force");
  REQUIRE(forced.exit_code == 0);
  Json report = Json::parse(forced.out);
  CHECK(report["method"] == "closed-form");
}

TEST_CASE("capacity with explicit generator shorthand") {
  RunResult r = run("capacity --family symmetric-pauli --param gen=01,q0=1");
  REQUIRE(r.exit_code == 0);
  Json report = Json::parse(r.out);
  CHECK(report["capacity"].get<double>() == doctest::Approx(std::log2(3.0)).epsilon(1e-9));
}

TEST_CASE("capacity runs are reproducible under a fixed seed") {
  std::string cmd = "capacity --family su3-6 --param p=0.3 --seed 7";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("check certifies declared symmetries and rejects wrong ones") {
  std::string path = workdir() + "/su36check.json";
  REQUIRE(run("family su3-6 --param p=0.5 --out " + path).exit_code == 0);
  RunResult good = run("check " + path + " --covariant-under su3:3:3bar");
  REQUIRE(good.exit_code == 0);
  Json gj = Json::parse(good.out);
  CHECK(gj["covariant"] == true);
  CHECK(gj["maxResidual"].get<double>() <= 1e-9);
  RunResult bad = run("check " + path + " --covariant-under su3:3:3");
  REQUIRE(bad.exit_code == 0);  // a negative verdict is still a successful run
  CHECK(Json::parse(bad.out)["covariant"] == false);

  std::string sym_path = workdir() + "/s3sym.json";
  REQUIRE(run("family s3-symmetric --param a=0.3333333333333333,b=0.3333333333333333,"
              "c=0.3333333333333333,d=0.2357022603955158,e=0.2357022603955158,"
              "f=0.2357022603955158 --out " + sym_path).exit_code == 0);
  RunResult sym = run("check " + sym_path + " --symmetric-under s3:defining");
  REQUIRE(sym.exit_code == 0);
  CHECK(Json::parse(sym.out)["symmetric"] == true);
}

TEST_CASE("check validates its flag combinations") {
  std::string path = workdir() + "/flags.json";
  REQUIRE(run("family identity --out " + path).exit_code == 0);
  CHECK(run("check " + path).exit_code == 2);  // needs exactly one mode
  CHECK(run("check " + path + " --covariant-under su3 --symmetric-under s3").exit_code == 2);
  CHECK(run("check " + path + " --covariant-under nosuchgroup").exit_code == 2);
}
