#include "kronkit/kronecker.hpp"

#include <algorithm>

#include "kronkit/characters.hpp"
#include "kronkit/errors.hpp"
#include "kronkit/reductions.hpp"

namespace kronkit {

BigInt kron_coeff_direct(const Partition& lambda, const Partition& mu, const Partition& nu)
{
  if (lambda.size() != mu.size() || lambda.size() != nu.size())
    throw SizeMismatch("kron_coeff_direct: partitions have different sizes");
  const std::int64_t m = lambda.size();
  const auto table = character_table(m);
  const auto& a = table->row(lambda);
  const auto& b = table->row(mu);
  const auto& c = table->row(nu);
  const auto& sizes = table->class_sizes();

  BigInt sum = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    sum += sizes[i] * a[i] * b[i] * c[i];
  const BigInt order = factorial(static_cast<unsigned long>(m));
  if (sum < 0 || !mpz_divisible_p(sum.get_mpz_t(), order.get_mpz_t()))
    throw InternalError("kron_coeff_direct: character sum is not a nonnegative multiple of m!");
  return sum / order;
}

KroneckerExpansion kron_expand(const Partition& lambda, const Partition& mu)
{
  if (lambda.size() != mu.size())
    throw SizeMismatch("kron_expand: partitions have different sizes");
  const std::int64_t m = lambda.size();
  const auto table = character_table(m);
  const auto& a = table->row(lambda);
  const auto& b = table->row(mu);
  const auto& sizes = table->class_sizes();

  std::vector<BigInt> weight(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i)
    weight[i] = sizes[i] * a[i] * b[i];
  const BigInt order = factorial(static_cast<unsigned long>(m));

  KroneckerExpansion out{m, {}};
  for (std::size_t r = 0; r < table->irreps().size(); ++r) {
    const auto& row = table->values()[r];
    BigInt sum = 0;
    for (std::size_t i = 0; i < weight.size(); ++i)
      sum += weight[i] * row[i];
    if (sum < 0 || !mpz_divisible_p(sum.get_mpz_t(), order.get_mpz_t()))
      throw InternalError("kron_expand: character sum is not a nonnegative multiple of m!");
    if (sum != 0)
      out.terms.emplace(table->irreps()[r], sum / order);
  }
  return out;
}

bool canonical_before(const Partition& a, const Partition& b)
{
  if (a.length() != b.length())
    return a.length() > b.length();
  return a > b;
}

Triple canonical_order(Triple t)
{
  std::stable_sort(t.begin(), t.end(), canonical_before);
  return t;
}

namespace {

bool all_empty(const Triple& t)
{
  return t[0].empty() && t[1].empty() && t[2].empty();
}

bool four_two_two_applies(const Partition& l, const Partition& m, const Partition& n)
{
  return l.length() <= 4 && m.length() <= 2 && n.length() <= 2 && l[3] == l[4] &&
         2 * l[3] <= std::min(m[2], n[2]);
}

std::optional<FormulaResult> try_four_two_two(const Triple& t)
{
  for (int i = 0; i < 3; ++i) {
    const auto& l = t[static_cast<std::size_t>(i)];
    const auto& m = t[static_cast<std::size_t>((i + 1) % 3)];
    const auto& n = t[static_cast<std::size_t>((i + 2) % 3)];
    if (four_two_two_applies(l, m, n))
      return four_two_two_formula(l, m, n);
  }
  return std::nullopt;
}

TraceStep formula_step(std::string name, const Triple& before, const FormulaResult& f)
{
  return TraceStep{std::move(name), before, f.arranged, std::nullopt, f.intermediates, f.value};
}

KronResult finish(ReductionTrace trace, std::string method)
{
  BigInt value = *trace.steps.back().value;
  return KronResult{std::move(value), std::move(method), std::move(trace)};
}

KronResult run_auto(const Triple& input)
{
  ReductionTrace trace;
  Triple cur = canonical_order(input);
  trace.steps.push_back(TraceStep{"canonical-order", input, cur, {}, {}, {}});

  for (const auto& ra : rectangle_roles(cur[0], cur[1], cur[2])) {
    const auto& [l, m, n] = ra.roles;
    if (vanishing_lr(l, m, n)) {
      const Part t = l[static_cast<std::size_t>(ra.p)];
      trace.steps.push_back(TraceStep{"lr-vanishing", cur, ra.roles,
                                      RectangleFrame::make(ra.p, ra.q, ra.r, t), {}, BigInt(0)});
      return finish(std::move(trace), "vanishing");
    }
  }

  bool reduced = false;
  while (true) {
    const auto d = rectangle_reduce(cur[0], cur[1], cur[2]);
    if (d.kind == RectangleDecision::Kind::NotApplicable)
      break;
    if (d.kind == RectangleDecision::Kind::Zero) {
      trace.steps.push_back(TraceStep{"rectangle-vanishing", cur, d.arranged, d.frame, {}, BigInt(0)});
      return finish(std::move(trace), "vanishing");
    }
    trace.steps.push_back(TraceStep{"rectangle-reduction", cur, d.reduced, d.frame, {}, {}});
    cur = d.reduced;
    reduced = true;
    if (all_empty(cur)) {
      trace.steps.back().value = BigInt(1);
      return finish(std::move(trace), "reduced");
    }
  }

  if (cur[0].length() <= 2 && cur[1].length() <= 2 && cur[2].length() <= 2) {
    trace.steps.push_back(formula_step("two-row-formula", cur, two_row_formula(cur[0], cur[1], cur[2])));
    return finish(std::move(trace), "formula-2row");
  }
  if (auto f = try_four_two_two(cur)) {
    trace.steps.push_back(formula_step("four-two-two-formula", cur, *f));
    return finish(std::move(trace), "formula-422");
  }

  trace.steps.push_back(
      TraceStep{"direct", cur, cur, {}, {}, kron_coeff_direct(cur[0], cur[1], cur[2])});
  return finish(std::move(trace), reduced ? "reduced" : "direct");
}

KronResult run_dvir(const Triple& input)
{
  // Any argument may take the nu role.
  for (int i = 2; i >= 0; --i) {
    const auto& n = input[static_cast<std::size_t>(i)];
    const auto& l = input[static_cast<std::size_t>((i + 1) % 3)];
    const auto& m = input[static_cast<std::size_t>((i + 2) % 3)];
    const Triple arranged = i == 2 ? input : Triple{l, m, n};
    if (auto v = dvir_reduce(arranged[0], arranged[1], arranged[2])) {
      ReductionTrace trace;
      trace.steps.push_back(TraceStep{"dvir", input, arranged, {}, {}, *v});
      return finish(std::move(trace), "dvir");
    }
  }
  throw NotApplicable("dvir: no argument has length |lambda ∩ mu'|");
}

KronResult run_formula(const Triple& input)
{
  ReductionTrace trace;
  if (input[0].length() <= 2 && input[1].length() <= 2 && input[2].length() <= 2) {
    trace.steps.push_back(formula_step("two-row-formula", input,
                                       two_row_formula(input[0], input[1], input[2])));
    return finish(std::move(trace), "formula-2row");
  }
  if (auto f = try_four_two_two(input)) {
    trace.steps.push_back(formula_step("four-two-two-formula", input, *f));
    return finish(std::move(trace), "formula-422");
  }
  throw NotApplicable("formula: triple matches neither the two-row nor the four-two-two shape");
}

} // namespace

KronResult kron_coeff(const Partition& lambda, const Partition& mu, const Partition& nu,
                      Method method)
{
  if (lambda.size() != mu.size() || lambda.size() != nu.size())
    throw SizeMismatch("kron_coeff: partitions have different sizes");
  const Triple input{lambda, mu, nu};
  switch (method) {
  case Method::Auto:
    return run_auto(input);
  case Method::Direct: {
    ReductionTrace trace;
    trace.steps.push_back(TraceStep{"direct", input, input, {}, {}, kron_coeff_direct(lambda, mu, nu)});
    return finish(std::move(trace), "direct");
  }
  case Method::Dvir:
    return run_dvir(input);
  case Method::Formula:
    return run_formula(input);
  }
  throw InternalError("kron_coeff: unknown method");
}

} // namespace kronkit
