#include <algorithm>
#include <array>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kronkit/errors.hpp"
#include "kronkit/kronecker.hpp"
#include "kronkit/partition.hpp"
#include "kronkit/verify.hpp"

using namespace kronkit;
using nlohmann::json;

namespace {

// Exit codes.
constexpr int kVerifyFailed = 1;
constexpr int kParseError = 2;
constexpr int kSizeMismatch = 3;
constexpr int kNotApplicable = 4;
constexpr int kCapExceeded = 5;
constexpr int kInternal = 6;

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string quoted(const Partition& p) { return "\"" + format_partition(p) + "\""; }

Method parse_method(const std::string& s)
{
  if (s == "auto")
    return Method::Auto;
  if (s == "direct")
    return Method::Direct;
  if (s == "dvir")
    return Method::Dvir;
  return Method::Formula;
}

struct CoeffArgs {
  std::array<std::string, 3> parts;
  std::string method = "auto";
  std::string format;
  bool trace = false;
};

int cmd_coeff(const CoeffArgs& a)
{
  const Partition l = parse_partition(a.parts[0]);
  const Partition m = parse_partition(a.parts[1]);
  const Partition n = parse_partition(a.parts[2]);
  const KronResult r = kron_coeff(l, m, n, parse_method(a.method));

  if (a.format == "json") {
    json out{{"input", to_json(Triple{l, m, n})}, {"method", r.method}, {"value", to_json(r.value)}};
    if (a.trace)
      out["trace"] = to_json(r.trace);
    std::cout << out.dump() << "\n";
  } else if (a.format == "csv") {
    std::cout << "lambda,mu,nu,k,method\n"
              << quoted(l) << "," << quoted(m) << "," << quoted(n) << "," << to_string(r.value) << ","
              << r.method << "\n";
    if (a.trace)
      std::cerr << "note: --trace is only emitted with --format=json or the default output\n";
  } else {
    std::cout << to_string(r.value) << "\n";
    if (a.trace)
      std::cout << to_json(r.trace).dump() << "\n";
  }
  return 0;
}

int cmd_expand(const std::string& lhs, const std::string& rhs, const std::string& format)
{
  const auto e = kron_expand(parse_partition(lhs), parse_partition(rhs));
  if (format == "csv") {
    std::cout << "nu,k\n";
    for (const auto& [nu, k] : e.terms)
      std::cout << quoted(nu) << "," << to_string(k) << "\n";
  } else {
    json out = json::object();
    for (const auto& [nu, k] : e.terms)
      out[format_partition(nu)] = to_json(k);
    std::cout << out.dump() << "\n";
  }
  return 0;
}

int cmd_verify(std::int64_t max_m, const std::string& suite, unsigned jobs)
{
  if (max_m < 1)
    throw ParseError("--max-m must be at least 1");
  const auto results = verify::run_suite(suite, {max_m, jobs});
  bool ok = true;
  for (const auto& r : results) {
    if (r.passed()) {
      std::cout << "PASS " << r.name << " (" << r.cases << " cases)\n";
    } else {
      ok = false;
      std::cout << "FAIL " << r.name << " (" << r.cases << " cases): " << *r.counterexample << "\n";
    }
  }
  return ok ? 0 : kVerifyFailed;
}

int cmd_table(std::int64_t m, std::int64_t cap, const std::string& format, bool all_orderings,
              Method method)
{
  if (m < 0)
    throw ParseError("table size must be nonnegative");
  if (m > cap)
    throw CapExceeded("table size " + std::to_string(m) + " exceeds the cap " + std::to_string(cap) +
                      " (raise it with --cap)");

  auto parts = partitions_of(m);
  std::stable_sort(parts.begin(), parts.end(), canonical_before);
  std::vector<std::pair<Triple, BigInt>> rows;
  const std::size_t n = parts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = all_orderings ? 0 : i; j < n; ++j)
      for (std::size_t k = all_orderings ? 0 : j; k < n; ++k) {
        BigInt v = kron_coeff(parts[i], parts[j], parts[k], method).value;
        if (v != 0)
          rows.push_back({Triple{parts[i], parts[j], parts[k]}, std::move(v)});
      }

  if (format == "json") {
    json out = json::array();
    for (const auto& [t, v] : rows)
      out.push_back({{"lambda", to_json(t[0])}, {"mu", to_json(t[1])}, {"nu", to_json(t[2])}, {"k", to_json(v)}});
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "lambda,mu,nu,k\n";
    for (const auto& [t, v] : rows)
      std::cout << quoted(t[0]) << "," << quoted(t[1]) << "," << quoted(t[2]) << "," << to_string(v) << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Kronecker coefficients of the symmetric group"};
  app.require_subcommand(1);

  CoeffArgs coeff;
  auto* c = app.add_subcommand("coeff", "k(lambda, mu, nu) for three partitions of the same size");
  c->add_option("lambda", coeff.parts[0], "partition such as 4,2 or [4,2]")->required();
  c->add_option("mu", coeff.parts[1])->required();
  c->add_option("nu", coeff.parts[2])->required();
  c->add_option("--method", coeff.method, "evaluation route")
      ->check(CLI::IsMember({"auto", "direct", "dvir", "formula"}));
  c->add_flag("--trace", coeff.trace, "print the reduction trace as JSON");
  c->add_option("--format", coeff.format, "json or csv (default: bare value)")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string lhs, rhs, expand_format = "json";
  auto* e = app.add_subcommand("expand", "all nu with k(lambda, mu, nu) > 0");
  e->add_option("lambda", lhs)->required();
  e->add_option("mu", rhs)->required();
  e->add_option("--format", expand_format)->check(CLI::IsMember({"json", "csv"}));

  std::int64_t max_m = 1;
  std::string suite = "all";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* v = app.add_subcommand("verify", "exhaustive property sweeps");
  v->add_option("--max-m", max_m, "largest size to sweep")->required();
  v->add_option("--suite", suite)->check(CLI::IsMember(verify::suite_names()));
  v->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  std::int64_t table_m = 0, cap = 12;
  std::string table_format = "csv", table_method = "auto";
  bool all_orderings = false;
  auto* t = app.add_subcommand("table", "every nonzero coefficient of one size");
  t->add_option("m", table_m)->required();
  t->add_option("--cap", cap, "refuse sizes above this");
  t->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv"}));
  t->add_option("--method", table_method)->check(CLI::IsMember({"auto", "direct"}));
  t->add_flag("--all-orderings", all_orderings, "emit every ordering, not one per unordered triple");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kParseError;
  }

  try {
    if (*c)
      return cmd_coeff(coeff);
    if (*e)
      return cmd_expand(lhs, rhs, expand_format);
    if (*v)
      return cmd_verify(max_m, suite, jobs);
    return cmd_table(table_m, cap, table_format, all_orderings, parse_method(table_method));
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kParseError;
  } catch (const SizeMismatch& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kSizeMismatch;
  } catch (const NotApplicable& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kNotApplicable;
  } catch (const CapExceeded& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kCapExceeded;
  } catch (const PreconditionError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kParseError;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kInternal;
  }
}
