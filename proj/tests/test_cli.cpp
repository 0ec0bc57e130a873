#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Run run(const std::string& args) {
  static int counter = 0;
  const auto dir = fs::temp_directory_path() / ("sobolev_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto out = dir / ("out" + std::to_string(counter) + ".txt");
  const auto err = dir / ("err" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string("\"") + SOBOLEV_CLI_PATH + "\" " + args + " >\"" + out.string() + "\" 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> v;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) v.push_back(f);
  return v;
}

}  // namespace

TEST_CASE("approximate zero function gives zero rows") {
  const auto r = run("approximate --fn zero --n 2 --m 1 --degrees 8");
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 4);
  CHECK(l[0] == "degree,alpha,sup_error,max_sigma_bern_error");
  for (std::size_t i = 1; i < l.size(); ++i) {
    const auto f = fields(l[i]);
    REQUIRE(f.size() == 4);
    CHECK(f[0] == "8");
    CHECK(std::stod(f[2]) == 0.0);
    CHECK(std::stod(f[3]) == 0.0);
  }
}

TEST_CASE("approximate exp-sum errors decrease") {
  const auto r = run("approximate --fn exp-sum --n 2 --m 1 --degrees 8,16,32");
  CHECK(r.code == 0);
  std::vector<double> max_by_degree(3, 0.0);
  const auto l = lines(r.out);
  for (std::size_t i = 1; i < l.size(); ++i) {
    const auto f = fields(l[i]);
    const int idx = f[0] == "8" ? 0 : f[0] == "16" ? 1 : 2;
    max_by_degree[idx] = std::max(max_by_degree[idx], std::stod(f[2]));
  }
  CHECK(max_by_degree[0] > 0.0);
  CHECK(max_by_degree[1] < max_by_degree[0]);
  CHECK(max_by_degree[2] < max_by_degree[1]);
}

TEST_CASE("cap violations are usage errors with one-line diagnostics") {
  for (const char* args : {"approximate --fn exp-sum --n 2 --m 4", "approximate --fn exp-sum --n 4 --m 1",
                           "approximate --fn exp-sum --n 2 --m 1 --degrees 65", "approximate --fn nope --n 1 --m 1",
                           "verify-identity --m 0 --n 1", "poincare --statement order-one --fn x1 --p 3",
                           "frobnicate"}) {
    CAPTURE(args);
    const auto r = run(args);
    CHECK(r.code == 2);
    CHECK(lines(r.err).size() == 1);
    CHECK(r.err.rfind("error: ", 0) == 0);
  }
}

TEST_CASE("verify-identity prints a tiny residual") {
  const auto r = run("verify-identity --m 3 --n 2");
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "m,n,terms,residual");
  const auto f = fields(l[1]);
  CHECK(f[2] == "16");
  CHECK(std::stod(f[3]) <= 1e-12);
}

TEST_CASE("poincare order-one equality case") {
  const auto r = run("poincare --statement order-one --fn x1 --n 1 --p inf");
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "case_id,lhs,rhs,ratio,holds");
  CHECK(l[1] == "0,1,1,1,true");
}

TEST_CASE("mollify-demo error column is non-increasing") {
  const auto r = run("mollify-demo --n 1 --m 1 --steps 4,8,16");
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 4);
  CHECK(l[0] == "n,error");
  double previous = 1e300;
  for (std::size_t i = 1; i < l.size(); ++i) {
    const double e = std::stod(fields(l[i])[1]);
    CHECK(e <= previous);
    previous = e;
  }
}

TEST_CASE("json output parses back to the same numbers") {
  const auto json = run("verify-identity --m 2 --n 3 --format json");
  CHECK(json.code == 0);
  CHECK(json.out.find("\"terms\": 27") != std::string::npos);
}

TEST_CASE("config file supplies defaults and flags win") {
  const auto path = fs::temp_directory_path() / "sobolev_cli_config.json";
  {
    std::ofstream f(path);
    f << R"({"m": 2, "n": 2})";
  }
  const auto from_file = run("verify-identity --config \"" + path.string() + "\"");
  CHECK(from_file.code == 0);
  CHECK(fields(lines(from_file.out).at(1))[0] == "2");
  const auto overridden = run("verify-identity --config \"" + path.string() + "\" --m 3");
  CHECK(fields(lines(overridden.out).at(1))[0] == "3");
  fs::remove(path);
}

TEST_CASE("repeat runs are byte-identical") {
  for (const char* args : {"poincare --statement detailed --n 2 --m 2 --t 1 --cases 8 --seed 42",
                           "poincare --statement standard --n 2 --m 1 --cases 8 --seed 7 --p 2",
                           "approximate --fn sin-sum --n 2 --m 1 --degrees 8 --format json",
                           "mollify-demo --n 1 --m 1 --steps 2,4"}) {
    CAPTURE(args);
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("--out writes the same bytes as stdout") {
  const auto path = fs::temp_directory_path() / "sobolev_cli_out.csv";
  const auto a = run("verify-identity --m 2 --n 2");
  const auto b = run("verify-identity --m 2 --n 2 --out \"" + path.string() + "\"");
  CHECK(b.code == 0);
  CHECK(slurp(path) == a.out);
  fs::remove(path);
}
