#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "xx0/cli.hpp"
#include "xx0/qpoly.hpp"

using namespace xx0;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("zq subcommand emits the exact polynomial") {
  const auto r = run({"zq", "2", "2", "1", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("min_degree") == 0);
  CHECK(j.at("coeffs") ==
        nlohmann::json::array({"1", "1", "2", "1", "1"}));
  // round-trips through the polynomial parser
  CHECK(QPoly::from_json(r.out) == QPoly({1, 1, 2, 1, 1}, 0));
}

TEST_CASE("count subcommand") {
  const auto r = run({"count", "2", "2", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "20\n");
  const auto j = run({"count", "2", "2", "2", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out).at("count") == "20");
}

TEST_CASE("schur subcommand") {
  const auto r = run({"schur", "--lambda", "1,1", "--vars", "2", "--mode", "qn"});
  CHECK(r.code == 0);
  CHECK(r.out == "q^3\n");
  const auto c = run({"schur", "--lambda", "2,1", "--vars", "3", "--mode", "count"});
  CHECK(c.out == "8\n");
}

TEST_CASE("verify subcommand distinguishes identity status") {
  const auto r = run({"verify", "theorem3", "--N", "3", "--L", "2", "--M", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("EXACT-MATCH") != std::string::npos);
  CHECK(r.out.find("MISMATCH\n") == std::string::npos);

  const auto bad = run({"verify", "no-such-identity"});
  CHECK(bad.code == 2);
}

TEST_CASE("verify all --small passes and exits zero") {
  const auto r = run({"verify", "all", "--small"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all identities hold") != std::string::npos);
}

TEST_CASE("walks subcommand") {
  const auto r = run({"walks", "--l", "1,0", "--j", "2,0", "--K", "1", "--M", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  // collision input is a validation error
  const auto bad = run({"walks", "--l", "1,1", "--j", "2,0", "--K", "1", "--M", "4"});
  CHECK(bad.code == 2);
}

TEST_CASE("amplitude emits schema-stable JSON") {
  const auto r = run({"amplitude", "--j", "3,1", "--l", "2,0", "--t", "0.5",
                      "--M", "4", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("command") == "amplitude");
  CHECK(j.at("params").at("M") == 4);
  CHECK(j.at("value").contains("re"));
  CHECK(j.contains("abs_err"));
  CHECK(j.contains("wall_time_ms"));
}

TEST_CASE("persistence and autocorr emit JSON") {
  const auto p = run({"persistence", "--M", "4", "--N", "2", "--n", "1", "--t",
                      "0.5", "--format", "json"});
  CHECK(p.code == 0);
  const auto pj = nlohmann::json::parse(p.out);
  CHECK(pj.at("command") == "persistence");
  CHECK(pj.at("value").get<double>() > 0.0);

  const auto a = run({"autocorr", "--M", "4", "--N", "2", "--n", "0", "--m", "1",
                      "--t1", "0.3", "--t2", "0.3", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(nlohmann::json::parse(a.out).at("command") == "autocorr");
}

TEST_CASE("draw watermelon --all writes six files") {
  const std::string dir = "cli_draw_test_out";
  std::filesystem::remove_all(dir);
  const auto r = run({"draw", "watermelon", "--N", "2", "--Mcal", "1", "--all",
                      "--out", dir, "--prefix", "melon"});
  CHECK(r.code == 0);
  long files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    CHECK(e.path().extension() == ".svg");
    ++files;
  }
  CHECK(files == 6);
  std::filesystem::remove_all(dir);
}

TEST_CASE("asymptotics subcommand emits a report") {
  const auto r = run({"asymptotics", "--kind", "amplitude", "--N", "1", "--M",
                      "40", "--tmin", "12", "--tmax", "20", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("predicted_exponent") == 0.5);
  CHECK(j.at("window_ok") == true);
}

TEST_CASE("usage errors exit with the validation code") {
  std::ostringstream out, err;
  CHECK(cli::run({"zq", "2"}, out, err) == 2);
  CHECK(cli::run({"nonsense"}, out, err) == 2);
}
