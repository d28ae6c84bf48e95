#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(WTRV_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("construct emits a grid", "[cli]") {
  auto r = run("--format json construct --dist 'exponential(lambda=1.5)' --weight 'power(c=2.5)' --grid 16");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.contains("expected_weight"));
  CHECK(std::abs(j["expected_weight"].get<double>() - 1.2060020909304463) < 1e-8);

  auto csv = run("--format csv construct --dist 'exponential(lambda=1.5)' --weight 'power(c=2.5)' --grid 16");
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("x,pdf,cdf", 0) == 0);
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run("").code != 0);
  CHECK(run("construct --dist 'exponential(lambda=1)'").code == 2);
  CHECK(run("construct --dist 'exponential(lambda=1' --weight linear").code == 2);
  CHECK(run("check-order --x 'exponential(lambda=1)' --y 'uniform' --order hazard").code == 2);
  CHECK(run("construct --dist 'pareto_lomax(alpha=2)' --weight exp_shift_sq").code == 1);
  CHECK(run("describe /nonexistent.csv --column ANNUAL").code == 1);
}

TEST_CASE("fixtures through the CLI", "[cli]") {
  auto r = run("verify-theorem thm9-example7");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["hypotheses_hold"].get<bool>());
  CHECK(j["conclusion_holds"].get<bool>());

  auto o = run("check-order --x 'exponential(lambda=1)' --y uniform --order rfr");
  REQUIRE(o.code == 0);
  auto v = json::parse(o.out);
  CHECK_FALSE(v["bounds_ok"].get<bool>());
  CHECK(v["holds_on_common_support"].get<bool>());
}

TEST_CASE("simulate, fit and describe round trip", "[cli]") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto csv = (dir / "wtrv_cli_sim.csv").string();
  REQUIRE(run("--format csv --seed 5 --out " + csv + " simulate --dist 'kumaraswamy(a=2,b=5)' --n 400").code == 0);

  auto again = run("--format csv --seed 5 simulate --dist 'kumaraswamy(a=2,b=5)' --n 400");
  std::ifstream in(csv);
  std::string saved((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(saved == again.out);

  auto fit = run("fit " + csv + " --model kw --starts 4");
  REQUIRE(fit.code == 0);
  auto j = json::parse(fit.out);
  CHECK(j["optimizer"]["converged"].get<bool>());
  CHECK(j["n"].get<int>() == 398);

  auto first = run("fit " + csv + " --model wk --starts 4");
  auto second = run("fit " + csv + " --model wk --starts 4");
  CHECK(first.out == second.out);

  auto d = run("describe " + csv + " --column value");
  REQUIRE(d.code == 0);
  CHECK(json::parse(d.out)["n"].get<int>() == 400);

  auto g = run("gof " + csv + " --model kw --tests ks,ad");
  REQUIRE(g.code == 0);
  CHECK(json::parse(g.out)["tests"].size() == 2);
}

TEST_CASE("table1 audit passes", "[cli]") {
  auto r = run("--format csv table1-audit");
  CHECK(r.code == 0);
}
