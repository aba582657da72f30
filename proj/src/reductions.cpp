#include "kronkit/reductions.hpp"

#include <algorithm>
#include <numeric>

#include "kronkit/characters.hpp"
#include "kronkit/errors.hpp"
#include "kronkit/kronecker.hpp"

namespace kronkit {

namespace {

void require_equal_sizes(const Partition& a, const Partition& b, const Partition& c,
                         const char* what)
{
  if (a.size() != b.size() || a.size() != c.size())
    throw SizeMismatch(std::string(what) + ": partitions have different sizes");
}

Part len(const Partition& p) { return static_cast<Part>(p.length()); }

} // namespace

Triple stability_inflate(const Partition& lambda, const Partition& mu, const Partition& nu,
                         const RectangleFrame& frame)
{
  require_equal_sizes(lambda, mu, nu, "stability_inflate");
  const auto f = RectangleFrame::make(frame.p, frame.q, frame.r, frame.t);
  if (len(lambda) > f.p || len(mu) > f.q || len(nu) > f.r)
    throw PreconditionError("stability_inflate: a partition is longer than its frame bound");
  return {add_rectangle(lambda, Rectangle(f.t, f.p)),
          add_rectangle(mu, Rectangle(f.r * f.t, f.q)),
          add_rectangle(nu, Rectangle(f.q * f.t, f.r))};
}

std::vector<RoleAssignment> rectangle_roles(const Partition& a, const Partition& b,
                                            const Partition& c)
{
  const Triple in{a, b, c};
  std::array<int, 3> by_length{0, 1, 2};
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](int x, int y) { return in[x].length() > in[y].length(); });

  std::vector<RoleAssignment> out;
  for (int li : by_length) {
    int first = -1;
    int second = -1;
    for (int k = 0; k < 3; ++k) {
      if (k == li)
        continue;
      (first < 0 ? first : second) = k;
    }
    if (in[second].length() < in[first].length())
      std::swap(first, second);
    const Part p = len(in[li]);
    const Part q = len(in[first]);
    const Part r = len(in[second]);
    if (p >= 1 && static_cast<std::int64_t>(p) == static_cast<std::int64_t>(q) * r)
      out.push_back(RoleAssignment{{in[li], in[first], in[second]}, {li, first, second}, p, q, r});
  }
  return out;
}

RectangleDecision rectangle_reduce(const Partition& lambda, const Partition& mu,
                                   const Partition& nu)
{
  require_equal_sizes(lambda, mu, nu, "rectangle_reduce");
  const auto roles = rectangle_roles(lambda, mu, nu);
  if (roles.empty())
    return {};

  const auto& ra = roles.front();
  const auto& [l, m, n] = ra.roles;
  const Part t = l[static_cast<std::size_t>(ra.p)];
  RectangleDecision d;
  d.arranged = ra.roles;
  d.frame = RectangleFrame::make(ra.p, ra.q, ra.r, t);
  const auto rt = static_cast<std::int64_t>(ra.r) * t;
  const auto qt = static_cast<std::int64_t>(ra.q) * t;
  if (m[static_cast<std::size_t>(ra.q)] < rt || n[static_cast<std::size_t>(ra.r)] < qt) {
    d.kind = RectangleDecision::Kind::Zero;
    return d;
  }
  d.kind = RectangleDecision::Kind::Reduced;
  d.reduced = {subtract_rectangle(l, Rectangle(t, ra.p)),
               subtract_rectangle(m, Rectangle(static_cast<Part>(rt), ra.q)),
               subtract_rectangle(n, Rectangle(static_cast<Part>(qt), ra.r))};
  return d;
}

bool vanishing_lr(const Partition& lambda, const Partition& mu, const Partition& nu)
{
  require_equal_sizes(lambda, mu, nu, "vanishing_lr");
  const Part p = len(lambda);
  const Part q = len(mu);
  const Part r = len(nu);
  if (static_cast<std::int64_t>(p) != static_cast<std::int64_t>(q) * r)
    throw PreconditionError("vanishing_lr: needs l(lambda) = l(mu) * l(nu)");
  if (p == 0)
    return false;
  const std::int64_t t = lambda[static_cast<std::size_t>(p)];
  return mu[static_cast<std::size_t>(q)] < r * t || nu[static_cast<std::size_t>(r)] < q * t;
}

std::optional<BigInt> dvir_reduce(const Partition& lambda, const Partition& mu,
                                  const Partition& nu)
{
  require_equal_sizes(lambda, mu, nu, "dvir_reduce");
  const Partition lambda_cap = intersect(lambda, conjugate(mu));
  const auto l = static_cast<std::int64_t>(nu.length());
  if (lambda_cap.size() != l)
    return std::nullopt;

  const Partition rho = l == 0 ? Partition{} : subtract_rectangle(nu, Rectangle(1, static_cast<Part>(l)));
  const Decomposition left = skew_character(SkewShape(lambda, lambda_cap));
  const Decomposition right = skew_character(SkewShape(mu, intersect(conjugate(lambda), mu)));

  BigInt total = 0;
  for (const auto& [sigma, a] : left)
    for (const auto& [tau, b] : right)
      total += a * b * kron_coeff_direct(sigma, tau, rho);
  return total;
}

FormulaResult two_row_formula(const Partition& lambda, const Partition& mu, const Partition& nu)
{
  require_equal_sizes(lambda, mu, nu, "two_row_formula");
  if (lambda.length() > 2 || mu.length() > 2 || nu.length() > 2)
    throw PreconditionError("two_row_formula: every partition needs length <= 2");

  Triple t{lambda, mu, nu};
  std::stable_sort(t.begin(), t.end(),
                   [](const Partition& a, const Partition& b) { return a[2] > b[2]; });
  const std::int64_t m = lambda.size();
  const std::int64_t l2 = t[0][2];
  const std::int64_t m2 = t[1][2];
  const std::int64_t n2 = t[2][2];

  FormulaIntermediates im;
  im.x = std::max<std::int64_t>(0, ceil_half(n2 + m2 + l2 - m));
  im.y = ceil_half(n2 + m2 - l2 + 1);
  return FormulaResult{im.y >= im.x ? BigInt(static_cast<long>(im.y - im.x)) : BigInt(0), im, t};
}

FormulaResult four_two_two_formula(const Partition& lambda, const Partition& mu,
                                   const Partition& nu)
{
  require_equal_sizes(lambda, mu, nu, "four_two_two_formula");
  if (lambda.length() > 4 || mu.length() > 2 || nu.length() > 2)
    throw PreconditionError("four_two_two_formula: needs lengths at most (4, 2, 2)");
  if (lambda[3] != lambda[4])
    throw PreconditionError("four_two_two_formula: needs lambda_3 = lambda_4");
  Partition big = mu;
  Partition small = nu;
  if (small[2] > big[2])
    std::swap(big, small);
  const std::int64_t l2 = lambda[2];
  const std::int64_t l3 = lambda[3];
  const std::int64_t m2 = big[2];
  const std::int64_t n2 = small[2];
  if (2 * l3 > n2)
    throw PreconditionError("four_two_two_formula: needs 2*lambda_3 <= nu_2");
  const std::int64_t m = lambda.size();

  FormulaIntermediates im;
  im.x = std::max<std::int64_t>(0, ceil_half(n2 + m2 + l2 - l3 - m));
  im.y = ceil_half(n2 + l2 - m2 - l3 + 1);
  im.z = ceil_half(n2 + m2 - l2 - 3 * l3 + 1);
  im.formula_case = l2 + l3 <= m2 ? 1 : 2;
  const std::int64_t top = *im.formula_case == 1 ? im.y : *im.z;
  return FormulaResult{top >= im.x ? BigInt(static_cast<long>(top - im.x)) : BigInt(0), im,
                       Triple{lambda, big, small}};
}

RectangleDecision reduce_four_two_two(const Partition& lambda, const Partition& mu,
                                      const Partition& nu)
{
  require_equal_sizes(lambda, mu, nu, "reduce_four_two_two");
  if (lambda.length() != 4 || mu.length() != 2 || nu.length() != 2)
    throw PreconditionError("reduce_four_two_two: needs lengths exactly (4, 2, 2)");
  const Part t = lambda[4];
  RectangleDecision d;
  d.arranged = {lambda, mu, nu};
  d.frame = RectangleFrame::make(4, 2, 2, t);
  if (mu[2] < 2 * t || nu[2] < 2 * t) {
    d.kind = RectangleDecision::Kind::Zero;
    return d;
  }
  d.kind = RectangleDecision::Kind::Reduced;
  d.reduced = {Partition{lambda[1] - t, lambda[2] - t, lambda[3] - t},
               Partition{mu[1] - 2 * t, mu[2] - 2 * t}, Partition{nu[1] - 2 * t, nu[2] - 2 * t}};
  return d;
}

} // namespace kronkit
