#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cheblab/arith.hpp"
#include "cheblab/cheb_psi.hpp"
#include "cheblab/errors.hpp"
#include "cli.hpp"

using namespace cheblab;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (const char c : s) n += c == '\n';
  return n;
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "cheblab_cli_test") {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("count parsing") {
  CHECK(cli::parse_count("100") == 100);
  CHECK(cli::parse_count("1e6") == 1'000'000);
  CHECK(cli::parse_count("10^6") == 1'000'000);
  CHECK_THROWS_AS(cli::parse_count("1.5"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_count("-3"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_count("99999999999999999999"), RangeError);
}

TEST_CASE("psi passes through the library value") {
  const auto r = call({"psi", "--ctx", "trivial", "--x", "100", "--q", "1", "--a", "1"});
  CHECK(r.code == 0);
  const auto ctx = galois::GaloisContext::make("trivial");
  CHECK(std::stod(r.out) == doctest::Approx(cheb::psi_C(ctx, {ctx.identity_class(), 100, 1, 1})).epsilon(1e-11));
}

TEST_CASE("admissible") {
  CHECK(call({"admissible", "--k", "5", "--method", "shifted-primes"}).out == "0,4,6,10,12\n");
  CHECK(call({"admissible", "--tuple", "0,2,4"}).out == "not admissible: covers every residue mod 3\n");
  CHECK(call({"admissible", "--tuple", "0,2,6"}).out == "admissible\n");
  CHECK(call({"admissible", "--k", "3", "--method", "sideways"}).code == cli::kUsage);
}

TEST_CASE("bv writes one row per admitted modulus plus a summary") {
  TempDir tmp;
  const auto path = (tmp.path / "r.csv").string();
  const auto r = call({"bv", "--ctx", "quadratic:5", "--class", "split", "--x", "100000", "--delta", "0.2", "--theta",
                       "0.05", "--D", "1", "--out", path});
  REQUIRE(r.code == 0);
  std::uint64_t admitted = 0;
  for (std::uint64_t q = 1; q <= arith::iroot(100000, 20); ++q) admitted += q % 5 != 0;
  const auto csv = slurp(path);
  CHECK(line_count(csv) == admitted + 2);
  CHECK(csv.rfind("q,a_star,N_star,y_star,observed,main_term,abs_error\n", 0) == 0);
  CHECK(csv.find("\n#TOTAL,") != std::string::npos);

  const auto jpath = (tmp.path / "r.json").string();
  REQUIRE(call({"bv", "--ctx", "quadratic:5", "--class", "split", "--x", "1e5", "--delta", "0.2", "--theta", "0.05",
                "--out", jpath})
              .code == 0);
  const auto j = nlohmann::json::parse(slurp(jpath));
  CHECK(j["rows"].size() == admitted);
}

TEST_CASE("exit codes") {
  CHECK(call({"psi", "--ctx", "nonsense", "--x", "10"}).code == cli::kUsage);
  CHECK(call({"psi", "--x", "10", "--bogus"}).code == cli::kUsage);
  CHECK(call({}).code == cli::kUsage);
  CHECK(call({"bv", "--ctx", "quadratic:5", "--x", "1e5", "--delta", "0.5", "--theta", "0.05"}).code == cli::kUsage);
  CHECK(call({"cdt", "--ctx", "quadratic:5", "--class", "split", "--x", "10000", "--h", "1000", "--q", "5", "--a",
              "1"})
            .code == cli::kDomain);
  CHECK(call({"psi", "--x", "99999999999999999999"}).code == cli::kRange);
  CHECK(call({"gaps", "--form", "eta:(1^24)", "--N", "100", "--x", "200"}).code == cli::kRange);
  CHECK(call({"psi", "--x", "10", "--out", "/nonexistent-dir/x.csv"}).code == cli::kUsage);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("config file supplies defaults that flags override") {
  TempDir tmp;
  const auto cfg = tmp.path / "run.conf";
  {
    std::ofstream f(cfg);
    f << "# test config\nctx = quadratic:5\nclass = split\nx = 1000\nunknown = 3\n";
  }
  const auto a = call({"psi", "--config", cfg.string()});
  CHECK(a.code == 0);
  CHECK(a.err.find("unknown") != std::string::npos);
  const auto ctx = galois::GaloisContext::make("quadratic:5");
  CHECK(std::stod(a.out) ==
        doctest::Approx(cheb::psi_C(ctx, {ctx.class_by_id("split"), 1000, 1, 1})).epsilon(1e-11));
  const auto b = call({"psi", "--config", cfg.string(), "--x", "2000"});
  CHECK(std::stod(b.out) ==
        doctest::Approx(cheb::psi_C(ctx, {ctx.class_by_id("split"), 2000, 1, 1})).epsilon(1e-11));
}

TEST_CASE("thread count does not change output") {
  const std::vector<std::string> base{"clusters", "--ctx", "cyclotomic:5", "--class", "1", "--k", "3",
                                      "--x",      "0",     "--h",          "200000",  "--T", "2"};
  auto one = base, four = base;
  one.insert(one.end(), {"--threads", "1"});
  four.insert(four.end(), {"--threads", "4"});
  const auto r1 = call(one), r4 = call(four);
  CHECK(r1.code == 0);
  CHECK(r1.out == r4.out);
}

TEST_CASE("every subcommand runs") {
  TempDir tmp;
  CHECK(call({"cdt", "--x", "100000", "--h", "10000"}).code == 0);
  const auto plot = (tmp.path / "scan.svg").string();
  CHECK(call({"scan", "--ctx", "quadratic:5", "--class", "split", "--x", "40000", "--x-min", "10000", "--delta",
              "0.2", "--theta", "0.05", "--plot", plot})
            .code == 0);
  CHECK(fs::exists(plot));
  CHECK(std::stod(call({"sseries", "--tuple", "0,2", "--P", "1e6"}).out) == doctest::Approx(1.3203).epsilon(0.001));
  CHECK(call({"hypothesis", "--k", "2", "--x", "100000", "--h", "10000", "--theta", "0.05"}).code == 0);
  const auto coeffs = call({"coeffs", "--form", "eta:(1^24)", "--N", "3", "--format", "csv"});
  CHECK(coeffs.out == "n,coefficient\n0,0\n1,1\n2,-24\n3,252\n");
  CHECK(call({"gaps", "--form", "theta:1,2,8", "--N", "500"}).code == 0);
  CHECK(call({"discs", "--k", "2", "--x", "0", "--h", "500", "--q", "4", "--a", "1"}).code == 0);
  CHECK(call({"ectrace", "--curve", "ec:-1,0", "--p", "5"}).out ==
        std::to_string(5 + 1 - 8) + "\n");  // 8 projective points over F_5
  CHECK(call({"ectrace", "--curve", "ec:-1,0", "--x", "100"}).code == 0);
  const auto w = call({"ecclusters", "--curve", "ec:-1,0", "--m", "2", "--i", "1", "--k", "2", "--x", "0", "--h", "500"});
  CHECK(w.code == 0);
  CHECK(w.err.find("warning") != std::string::npos);
}
