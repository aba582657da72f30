#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "kronkit/kronecker.hpp"
#include "kronkit/partition.hpp"

using namespace kronkit;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args)
{
  const std::string cmd = std::string(KRONKIT_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string arg(const Partition& p) { return "'" + format_partition(p) + "'"; }

} // namespace

TEST_CASE("coeff examples")
{
  CHECK(run("coeff 2,1 2,1 2,1").out == "1\n");

  const auto van = run("coeff 2,2,2,2 5,3 4,4 --trace");
  CHECK(van.status == 0);
  const auto nl = van.out.find('\n');
  CHECK(van.out.substr(0, nl) == "0");
  const auto trace = nlohmann::json::parse(van.out.substr(nl + 1));
  CHECK(trace.back()["theorem"] == "lr-vanishing");

  const auto f = nlohmann::json::parse(run("coeff 4,2 4,2 4,2 --method=formula --format=json --trace").out);
  CHECK(f["value"] == 2);
  CHECK(f["method"] == "formula-2row");
  CHECK(f["trace"].back()["intermediates"] == nlohmann::json{{"x", 0}, {"y", 2}});
  CHECK(nlohmann::json::parse(f.dump()) == f);

  CHECK(run("coeff '[3,1]' '(2,2)' 2,1,1 --format=csv").out ==
        "lambda,mu,nu,k,method\n\"3,1\",\"2,2\",\"2,1,1\",1,direct\n");
}

TEST_CASE("expand examples")
{
  CHECK(run("expand 2,2 2,2 --format=csv").out == "nu,k\n\"4\",1\n\"2,2\",1\n\"1,1,1,1\",1\n");
  CHECK(run("expand 3 3").out == "{\"3\":1}\n");
  CHECK(run("expand 2,1 3").out == "{\"2,1\":1}\n");
  CHECK(nlohmann::json::parse(run("expand 3,2,1 3,2,1").out)["3,2,1"] == 5);
}

TEST_CASE("verify examples")
{
  const auto s = run("verify --max-m 5 --suite stability");
  CHECK(s.status == 0);
  CHECK(s.out.rfind("PASS ", 0) == 0);
  CHECK(run("verify --max-m 8 --suite formulas").status == 0);
  const auto all = run("verify --max-m 1 --suite all");
  CHECK(all.status == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(run("verify --max-m 0").status == 2);
  CHECK(run("verify --max-m 3 --suite nope").status == 2);
}

TEST_CASE("table examples")
{
  CHECK(run("table 2").out == "lambda,mu,nu,k\n\"1,1\",\"1,1\",\"2\",1\n\"2\",\"2\",\"2\",1\n");
  CHECK(run("table 0").out == "lambda,mu,nu,k\n\"\",\"\",\"\",1\n");
  CHECK(run("table 3").out.find("\"2,1\",\"2,1\",\"2,1\",1\n") != std::string::npos);
  const auto j = nlohmann::json::parse(run("table 3 --format=json").out);
  CHECK(j.size() == 5);
  // ((2),(2),(2)) and the three orderings of ((1,1),(1,1),(2)).
  CHECK(nlohmann::json::parse(run("table 2 --all-orderings --format=json").out).size() == 4);
  CHECK(run("expand '[2,1]' '(3)'").out == "{\"2,1\":1}\n");
  CHECK(run("table 13").status == 5);
  CHECK(run("table 13 --cap 13").status == 0);
}

TEST_CASE("exit codes")
{
  CHECK(run("coeff 1,3 2 2").status == 2);
  CHECK(run("coeff a 2 2").status == 2);
  CHECK(run("coeff 2 2").status == 2);
  CHECK(run("coeff 2 2 2 --method=magic").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("coeff 2,1 2 2").status == 3);
  CHECK(run("expand 2,1 2").status == 3);
  CHECK(run("coeff 2,1 2,1 2,1 --method=dvir").status == 4);
  CHECK(run("coeff 3,2,1 3,2,1 3,2,1 --method=formula").status == 4);
  CHECK(run("--help").status == 0);
}

TEST_CASE("auto equals direct through the binary")
{
  for (int m = 0; m <= 7; ++m) {
    const std::string base = "table " + std::to_string(m) + " --all-orderings";
    const auto a = run(base);
    REQUIRE(a.status == 0);
    REQUIRE(a.out == run(base + " --method=direct").out);
  }
  // Per-triple queries on the canonical representatives.
  for (int m = 0; m <= 7; ++m) {
    auto parts = partitions_of(m);
    std::stable_sort(parts.begin(), parts.end(), canonical_before);
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i; j < parts.size(); ++j)
        for (std::size_t k = j; k < parts.size(); ++k) {
          const std::string args = arg(parts[i]) + " " + arg(parts[j]) + " " + arg(parts[k]);
          const auto a = run("coeff " + args);
          const auto d = run("coeff " + args + " --method=direct");
          REQUIRE(a.status == 0);
          REQUIRE(a.out == d.out);
          REQUIRE(a.out == to_string(kron_coeff_direct(parts[i], parts[j], parts[k])) + "\n");
        }
  }
}
