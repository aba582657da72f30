#pragma once

#include <optional>
#include <vector>

#include "kronkit/bigint.hpp"
#include "kronkit/partition.hpp"
#include "kronkit/trace.hpp"

namespace kronkit {

/// ceil(a/2) for any sign of a, computed as floor((a+1)/2).
constexpr std::int64_t ceil_half(std::int64_t a)
{
  const std::int64_t n = a + 1;
  return n >= 0 ? n / 2 : -((-n + 1) / 2);
}

/// (lambda + (t)^p, mu + (rt)^q, nu + (qt)^r). Throws PreconditionError
/// if the sizes differ or some length exceeds its frame bound.
Triple stability_inflate(const Partition& lambda, const Partition& mu, const Partition& nu,
                         const RectangleFrame& frame);

/// An assignment of the three inputs to the roles (lambda, mu, nu) of the
/// rectangle theorems, with p = l(lambda), q = l(mu), r = l(nu), p = q*r.
struct RoleAssignment {
  Triple roles;
  /// roles[k] is input number order[k].
  std::array<int, 3> order;
  Part p;
  Part q;
  Part r;
};

/// Every role assignment with p = q*r >= 1, in the fixed firing order:
/// lambda-role candidates by decreasing length (ties by position), then the
/// shorter of the remaining two in the mu role.
std::vector<RoleAssignment> rectangle_roles(const Partition& a, const Partition& b,
                                            const Partition& c);

struct RectangleDecision {
  enum class Kind { Zero, Reduced, NotApplicable };
  Kind kind = Kind::NotApplicable;
  /// Inputs arranged in the (lambda, mu, nu) roles that fired.
  Triple arranged;
  /// Subtracted triple, valid for Reduced.
  Triple reduced;
  std::optional<RectangleFrame> frame;
};

/// Rectangle reduction with t = lambda_p under the first valid role
/// assignment: Zero if mu_q < rt or nu_r < qt, otherwise Reduced to
/// (lambda - (t)^p, mu - (rt)^q, nu - (qt)^r).
RectangleDecision rectangle_reduce(const Partition& lambda, const Partition& mu,
                                   const Partition& nu);

/// True iff mu_q < r*lambda_p or nu_r < q*lambda_p, with p, q, r the exact
/// lengths. Throws PreconditionError when p != q*r.
bool vanishing_lr(const Partition& lambda, const Partition& mu, const Partition& nu);

/// When l(nu) = |lambda ∩ mu'|, evaluates the coefficient through the skew
/// characters chi^{lambda/lambda∩mu'} and chi^{mu/lambda'∩mu} against
/// chi^{nu - (1^l)}; otherwise returns nullopt.
std::optional<BigInt> dvir_reduce(const Partition& lambda, const Partition& mu,
                                  const Partition& nu);

struct FormulaResult {
  BigInt value;
  FormulaIntermediates intermediates;
  /// The triple in the order the formula was evaluated.
  Triple arranged;
};

/// Closed form for three partitions of length at most 2. The triple is
/// permuted so that nu_2 <= mu_2 <= lambda_2 before evaluating
///   x = max(0, ceil((nu_2 + mu_2 + lambda_2 - m)/2)),
///   y = ceil((nu_2 + mu_2 - lambda_2 + 1)/2),
/// and the value is y - x when y >= x, else 0.
FormulaResult two_row_formula(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Closed form for l(lambda) <= 4 with lambda_3 = lambda_4, l(mu), l(nu) <= 2
/// and 2*lambda_3 <= nu_2 <= mu_2 (mu and nu are swapped if needed).
/// Throws PreconditionError when any hypothesis fails.
FormulaResult four_two_two_formula(const Partition& lambda, const Partition& mu,
                                   const Partition& nu);

/// Rectangle reduction specialised to exact lengths (4, 2, 2) with
/// t = lambda_4. Throws PreconditionError on other lengths.
RectangleDecision reduce_four_two_two(const Partition& lambda, const Partition& mu,
                                      const Partition& nu);

} // namespace kronkit
