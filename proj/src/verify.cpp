#include "kronkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "kronkit/characters.hpp"
#include "kronkit/kronecker.hpp"
#include "kronkit/littlewood_richardson.hpp"
#include "kronkit/reductions.hpp"

namespace kronkit::verify {

namespace {

using Check = std::function<std::optional<std::string>(std::size_t)>;

PropertyResult run_cases(std::string name, std::size_t count, const Check& check, unsigned jobs)
{
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_fail{std::numeric_limits<std::size_t>::max()};
  std::mutex mutex;
  std::optional<std::string> message;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > first_fail.load())
        return;
      std::optional<std::string> fail;
      try {
        fail = check(i);
      } catch (const std::exception& e) {
        fail = std::string("exception: ") + e.what();
      }
      if (!fail)
        continue;
      std::lock_guard lock(mutex);
      if (i < first_fail.load()) {
        first_fail = i;
        message = std::move(fail);
      }
    }
  };

  const unsigned n = std::max(1u, jobs);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n; ++k)
      pool.emplace_back(worker);
    for (auto& t : pool)
      t.join();
  }
  return PropertyResult{std::move(name), count, std::move(message)};
}

std::vector<Partition> partitions_up_to(std::int64_t max_m)
{
  std::vector<Partition> out;
  for (std::int64_t m = 0; m <= max_m; ++m)
    for_each_partition(m, {}, [&](const Partition& p) { out.push_back(p); });
  return out;
}

/// All ordered triples of equal size <= max_m, optionally filtered.
std::vector<Triple> triples_up_to(std::int64_t max_m, PartitionBounds bounds = {})
{
  std::vector<Triple> out;
  for (std::int64_t m = 0; m <= max_m; ++m) {
    const auto parts = partitions_of(m, bounds);
    for (const auto& a : parts)
      for (const auto& b : parts)
        for (const auto& c : parts)
          out.push_back({a, b, c});
  }
  return out;
}

std::string show(const Triple& t) { return format_triple(t); }

std::string mismatch(const Triple& t, const BigInt& got, const BigInt& want)
{
  return show(t) + ": got " + to_string(got) + ", expected " + to_string(want);
}

} // namespace

PropertyResult orthogonality(SweepOptions opt)
{
  return run_cases(
      "character table row orthogonality", static_cast<std::size_t>(std::max<std::int64_t>(opt.max_m, 0)) + 1,
      [](std::size_t n) -> std::optional<std::string> {
        const auto table = character_table(static_cast<std::int64_t>(n));
        const BigInt order = factorial(n);
        const auto& rows = table->values();
        const auto& sizes = table->class_sizes();
        for (std::size_t a = 0; a < rows.size(); ++a)
          for (std::size_t b = a; b < rows.size(); ++b) {
            BigInt sum = 0;
            for (std::size_t c = 0; c < sizes.size(); ++c)
              sum += sizes[c] * rows[a][c] * rows[b][c];
            if (sum != (a == b ? order : BigInt(0)))
              return "n=" + std::to_string(n) + " rows " + format_partition(table->irreps()[a]) +
                     " and " + format_partition(table->irreps()[b]) + " give " + to_string(sum);
          }
        return std::nullopt;
      },
      opt.jobs);
}

PropertyResult identity_value_is_dimension(SweepOptions opt)
{
  const auto parts = partitions_up_to(opt.max_m);
  return run_cases(
      "identity character value equals hook dimension", parts.size(),
      [&](std::size_t i) -> std::optional<std::string> {
        const auto& lambda = parts[i];
        const auto ones = Partition(std::vector<Part>(static_cast<std::size_t>(lambda.size()), 1));
        const BigInt mn = mn_value(lambda, CycleType(ones));
        const BigInt hook = dimension(lambda);
        const BigInt tab = character_table(lambda.size())->value(lambda, ones);
        if (mn != hook || tab != hook)
          return format_partition(lambda) + ": mn=" + to_string(mn) + " table=" + to_string(tab) +
                 " hook=" + to_string(hook);
        return std::nullopt;
      },
      opt.jobs);
}

PropertyResult stability(SweepOptions opt, int max_frame)
{
  struct Case {
    Triple base;
    RectangleFrame frame;
  };
  std::vector<Case> cases;
  for (const auto& t : triples_up_to(opt.max_m))
    for (Part p = 1; p <= max_frame; ++p)
      for (Part q = 1; q <= p; ++q) {
        if (p % q != 0)
          continue;
        const Part r = p / q;
        if (t[0].length() > static_cast<std::size_t>(p) || t[1].length() > static_cast<std::size_t>(q) ||
            t[2].length() > static_cast<std::size_t>(r))
          continue;
        for (Part step : {1, 2})
          cases.push_back({t, RectangleFrame::make(p, q, r, step)});
      }

  return run_cases(
      "stability under rectangle inflation", cases.size(),
      [&](std::size_t i) -> std::optional<std::string> {
        const auto& c = cases[i];
        const Triple big = stability_inflate(c.base[0], c.base[1], c.base[2], c.frame);
        const BigInt want = kron_coeff_direct(c.base[0], c.base[1], c.base[2]);
        const BigInt got = kron_coeff_direct(big[0], big[1], big[2]);
        if (got != want)
          return mismatch(c.base, got, want) + " under p,q,r,t=" + std::to_string(c.frame.p) + "," +
                 std::to_string(c.frame.q) + "," + std::to_string(c.frame.r) + "," +
                 std::to_string(c.frame.t);
        return std::nullopt;
      },
      opt.jobs);
}

PropertyResult rectangle_reduction(SweepOptions opt)
{
  std::vector<Triple> cases;
  for (const auto& t : triples_up_to(opt.max_m))
    if (!rectangle_roles(t[0], t[1], t[2]).empty())
      cases.push_back(t);

  return run_cases(
      "rectangle reduction and frame vanishing", cases.size(),
      [&](std::size_t i) -> std::optional<std::string> {
        const auto& t = cases[i];
        const auto d = rectangle_reduce(t[0], t[1], t[2]);
        const BigInt want = kron_coeff_direct(t[0], t[1], t[2]);
        switch (d.kind) {
        case RectangleDecision::Kind::Zero:
          if (want != 0)
            return mismatch(t, 0, want) + " (zero branch)";
          break;
        case RectangleDecision::Kind::Reduced: {
          const BigInt got = kron_coeff_direct(d.reduced[0], d.reduced[1], d.reduced[2]);
          if (got != want)
            return mismatch(t, got, want) + " (reduced to " + show(d.reduced) + ")";
          break;
        }
        case RectangleDecision::Kind::NotApplicable:
          return show(t) + ": roles exist but reduction reported not applicable";
        }
        return std::nullopt;
      },
      opt.jobs);
}

PropertyResult lr_vanishing(SweepOptions opt)
{
  std::vector<Triple> cases;
  for (const auto& t : triples_up_to(opt.max_m)) {
    const auto p = t[0].length();
    if (p >= 1 && p == t[1].length() * t[2].length() && vanishing_lr(t[0], t[1], t[2]))
      cases.push_back(t);
  }
  return run_cases(
      "frame vanishing implies lr = 0", cases.size(),
      [&](std::size_t i) -> std::optional<std::string> {
        const auto& t = cases[i];
        const BigInt lr = lr_pair_count(t[0], t[1], Composition::from(t[2]));
        if (lr != 0)
          return show(t) + ": lr = " + to_string(lr);
        return std::nullopt;
      },
      opt.jobs);
}

PropertyResult lr_character_identity(SweepOptions opt)
{
  const auto cases = triples_up_to(opt.max_m);
  return run_cases(
      "lr equals pairing with the permutation character", cases.size(),
      [&](std::size_t i) -> std::optional<std::string> {
        const auto& [lambda, mu, pi] = cases[i];
        const Composition comp = Composition::from(pi);
        const BigInt lr = lr_pair_count(lambda, mu, comp);
        BigInt sum = 0;
        for (const auto& nu : partitions_of(lambda.size()))
          sum += kostka(nu, comp) * kron_coeff_direct(lambda, mu, nu);
        if (lr != sum)
          return mismatch(cases[i], lr, sum);
        return std::nullopt;
      },
      opt.jobs);
}

PropertyResult lr_dominates_kronecker(SweepOptions opt)
{
  const auto cases = triples_up_to(opt.max_m);
  return run_cases(
      "lr bounds the Kronecker coefficient", cases.size(),
      [&](std::size_t i) -> std::optional<std::string> {
        const auto& [lambda, mu, nu] = cases[i];
        const BigInt lr = lr_pair_count(lambda, mu, Composition::from(nu));
        const BigInt k = kron_coeff_direct(lambda, mu, nu);
        if (lr < k)
          return show(cases[i]) + ": lr " + to_string(lr) + " < k " + to_string(k);
        return std::nullopt;
      },
      opt.jobs);
}

PropertyResult dvir(SweepOptions opt)
{
  std::vector<Triple> cases;
  for (const auto& t : triples_up_to(opt.max_m))
    if (static_cast<std::int64_t>(t[2].length()) == intersect(t[0], conjugate(t[1])).size())
      cases.push_back(t);
  return run_cases(
      "skew-character reduction", cases.size(),
      [&](std::size_t i) -> std::optional<std::string> {
        const auto& t = cases[i];
        const auto got = dvir_reduce(t[0], t[1], t[2]);
        if (!got)
          return show(t) + ": reduction declined an applicable triple";
        const BigInt want = kron_coeff_direct(t[0], t[1], t[2]);
        if (*got != want)
          return mismatch(t, *got, want);
        return std::nullopt;
      },
      opt.jobs);
}

PropertyResult two_row(SweepOptions opt)
{
  const auto cases = triples_up_to(opt.max_m, PartitionBounds{2, std::nullopt});
  return run_cases(
      "two-row closed formula", cases.size(),
      [&](std::size_t i) -> std::optional<std::string> {
        const auto& t = cases[i];
        const auto f = two_row_formula(t[0], t[1], t[2]);
        const BigInt want = kron_coeff_direct(t[0], t[1], t[2]);
        if (f.value != want)
          return mismatch(t, f.value, want) + " (x=" + std::to_string(f.intermediates.x) +
                 ", y=" + std::to_string(f.intermediates.y) + ")";
        return std::nullopt;
      },
      opt.jobs);
}

PropertyResult four_two_two(SweepOptions opt)
{
  std::vector<Triple> cases;
  for (std::int64_t m = 0; m <= opt.max_m; ++m) {
    const auto lambdas = partitions_of(m, PartitionBounds{4, std::nullopt});
    const auto twos = partitions_of(m, PartitionBounds{2, std::nullopt});
    for (const auto& l : lambdas) {
      if (l[3] != l[4])
        continue;
      for (const auto& a : twos)
        for (const auto& b : twos)
          if (2 * l[3] <= std::min(a[2], b[2]))
            cases.push_back({l, a, b});
    }
  }
  return run_cases(
      "four-two-two closed formula", cases.size(),
      [&](std::size_t i) -> std::optional<std::string> {
        const auto& t = cases[i];
        const auto f = four_two_two_formula(t[0], t[1], t[2]);
        const BigInt want = kron_coeff_direct(t[0], t[1], t[2]);
        if (f.value != want)
          return mismatch(t, f.value, want) + " (case " + std::to_string(*f.intermediates.formula_case) +
                 ")";
        if (t[0].length() == 4 && t[1].length() == 2 && t[2].length() == 2) {
          const auto d = reduce_four_two_two(t[0], t[1], t[2]);
          if (d.kind != RectangleDecision::Kind::Reduced)
            return show(t) + ": (4,2,2) reduction did not reduce an admissible triple";
          const auto g = two_row_formula(d.reduced[0], d.reduced[1], d.reduced[2]);
          if (g.value != f.value)
            return show(t) + ": four-two-two " + to_string(f.value) + " != reduced two-row " +
                   to_string(g.value);
        }
        return std::nullopt;
      },
      opt.jobs);
}

PropertyResult length_bound(SweepOptions opt)
{
  std::vector<std::pair<Partition, Partition>> cases;
  for (std::int64_t m = 0; m <= opt.max_m; ++m) {
    std::vector<Partition> twos;
    for (const auto& p : partitions_of(m, PartitionBounds{2, std::nullopt}))
      if (p.length() == 2)
        twos.push_back(p);
    for (const auto& a : twos)
      for (const auto& b : twos)
        cases.emplace_back(a, b);
  }
  return run_cases(
      "two-row products have short constituents", cases.size(),
      [&](std::size_t i) -> std::optional<std::string> {
        const auto& [mu, nu] = cases[i];
        const auto bound = intersect(mu, conjugate(nu)).size();
        if (bound > 4)
          return format_partition(mu) + " x " + format_partition(nu) + ": |mu ∩ nu'| = " +
                 std::to_string(bound);
        for (const auto& [part, mult] : kron_expand(mu, nu).terms)
          if (static_cast<std::int64_t>(part.length()) > bound)
            return format_partition(mu) + " x " + format_partition(nu) + ": constituent " +
                   format_partition(part) + " longer than " + std::to_string(bound);
        return std::nullopt;
      },
      opt.jobs);
}

PropertyResult dispatcher(SweepOptions opt)
{
  const auto cases = triples_up_to(opt.max_m);
  return run_cases(
      "dispatcher matches the character sum", cases.size(),
      [&](std::size_t i) -> std::optional<std::string> {
        const auto& t = cases[i];
        const auto res = kron_coeff(t[0], t[1], t[2]);
        const BigInt want = kron_coeff_direct(t[0], t[1], t[2]);
        if (res.value != want)
          return mismatch(t, res.value, want) + " via " + res.method;
        if (!res.trace.linked() || !res.trace.steps.back().value)
          return show(t) + ": malformed trace";
        return std::nullopt;
      },
      opt.jobs);
}

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{"oracle", "stability", "reduction", "lr", "dvir",
                                              "formulas", "bound", "dispatch", "all"};
  return names;
}

std::vector<PropertyResult> run_suite(std::string_view suite, SweepOptions opt)
{
  std::vector<PropertyResult> out;
  const bool all = suite == "all";
  bool known = all;
  auto want = [&](std::string_view name) {
    if (all || suite == name) {
      known = true;
      return true;
    }
    return false;
  };
  if (want("oracle")) {
    out.push_back(orthogonality(opt));
    out.push_back(identity_value_is_dimension(opt));
  }
  if (want("stability"))
    out.push_back(stability(opt));
  if (want("reduction")) {
    out.push_back(rectangle_reduction(opt));
    out.push_back(lr_vanishing(opt));
  }
  if (want("lr")) {
    out.push_back(lr_character_identity(opt));
    out.push_back(lr_dominates_kronecker(opt));
  }
  if (want("dvir"))
    out.push_back(dvir(opt));
  if (want("formulas")) {
    out.push_back(two_row(opt));
    out.push_back(four_two_two(opt));
  }
  if (want("bound"))
    out.push_back(length_bound(opt));
  if (want("dispatch"))
    out.push_back(dispatcher(opt));
  if (!known)
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  return out;
}

} // namespace kronkit::verify
