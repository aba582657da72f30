#include "kronkit/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "cache_budget.hpp"
#include "kronkit/errors.hpp"

namespace kronkit {

int CycleType::sign() const
{
  return (cycles_.size() - static_cast<std::int64_t>(cycles_.length())) % 2 == 0 ? 1 : -1;
}

std::vector<Partition> conjugacy_classes(std::int64_t n)
{
  auto out = partitions_of(n);
  std::reverse(out.begin(), out.end());
  return out;
}

BigInt centralizer_order(const CycleType& rho)
{
  BigInt z = 1;
  auto parts = rho.cycles().parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i])
      ++j;
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]),
                  static_cast<unsigned long>(j - i));
    z *= power * factorial(j - i);
    i = j;
  }
  return z;
}

BigInt class_size(const CycleType& rho)
{
  return factorial(static_cast<unsigned long>(rho.degree())) / centralizer_order(rho);
}

const BigInt& CharacterVector::at(const CycleType& rho) const
{
  if (rho.degree() != degree)
    throw SizeMismatch("cycle type degree differs from character degree");
  return values.at(character_table(degree)->class_index(rho.cycles()));
}

std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& shape, Part k)
{
  std::vector<std::pair<Partition, int>> out;
  const std::size_t len = shape.length();
  if (k <= 0 || len == 0)
    return out;

  // First-column hook lengths: removing a border strip of length k moves one
  // bead from b to b - k; the sign counts beads jumped over.
  std::vector<Part> beta(len);
  for (std::size_t i = 0; i < len; ++i)
    beta[i] = shape.parts()[i] + static_cast<Part>(len - 1 - i);
  std::vector<bool> occupied(static_cast<std::size_t>(beta[0]) + 1, false);
  for (Part b : beta)
    occupied[static_cast<std::size_t>(b)] = true;

  for (std::size_t i = 0; i < len; ++i) {
    Part target = beta[i] - k;
    if (target < 0 || occupied[static_cast<std::size_t>(target)])
      continue;
    int height = 0;
    for (Part b : beta)
      if (b > target && b < beta[i])
        ++height;
    std::vector<Part> moved(beta);
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<Part> parts(len);
    for (std::size_t j = 0; j < len; ++j)
      parts[j] = moved[j] - static_cast<Part>(len - 1 - j);
    out.emplace_back(Partition(std::move(parts)), height % 2 == 0 ? 1 : -1);
  }
  return out;
}

BigInt mn_value(const Partition& lambda, const CycleType& rho)
{
  if (lambda.size() != rho.degree())
    throw SizeMismatch("mn_value: |lambda| != |rho|");

  const auto cycles = rho.cycles().vec();
  std::map<std::pair<Partition, std::size_t>, BigInt> memo;

  auto rec = [&](auto&& self, const Partition& shape, std::size_t next) -> BigInt {
    if (next == cycles.size())
      return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape, next);
    if (auto it = memo.find(key); it != memo.end())
      return it->second;
    BigInt total = 0;
    for (const auto& [smaller, sign] : remove_border_strips(shape, cycles[next])) {
      BigInt v = self(self, smaller, next + 1);
      if (sign > 0)
        total += v;
      else
        total -= v;
    }
    memo.emplace(std::move(key), total);
    return total;
  };
  return rec(rec, lambda, 0);
}

CharacterTable::CharacterTable(std::int64_t n, std::vector<Partition> irreps,
                               std::vector<Partition> classes, std::vector<BigInt> class_sizes,
                               std::vector<std::vector<BigInt>> values)
: n_(n),
  irreps_(std::move(irreps)),
  classes_(std::move(classes)),
  class_sizes_(std::move(class_sizes)),
  values_(std::move(values))
{
  for (std::size_t i = 0; i < irreps_.size(); ++i)
    irrep_pos_.emplace(irreps_[i], i);
  for (std::size_t i = 0; i < classes_.size(); ++i)
    class_pos_.emplace(classes_[i], i);
}

std::size_t CharacterTable::irrep_index(const Partition& lambda) const
{
  auto it = irrep_pos_.find(lambda);
  if (it == irrep_pos_.end())
    throw SizeMismatch("partition " + format_partition(lambda) + " is not a partition of " +
                       std::to_string(n_));
  return it->second;
}

std::size_t CharacterTable::class_index(const Partition& rho) const
{
  auto it = class_pos_.find(rho);
  if (it == class_pos_.end())
    throw SizeMismatch("cycle type " + format_partition(rho) + " is not a partition of " +
                       std::to_string(n_));
  return it->second;
}

CharacterVector CharacterTable::character(const Partition& lambda) const
{
  return CharacterVector{n_, row(lambda)};
}

std::size_t CharacterTable::approx_bytes() const
{
  std::size_t cells = irreps_.size() * classes_.size();
  return cells * (sizeof(BigInt) + 16) + (irreps_.size() + classes_.size()) * 96;
}

namespace {

std::shared_ptr<const CharacterTable>
build_table(std::int64_t n, const std::vector<std::shared_ptr<const CharacterTable>>& smaller)
{
  auto irreps = partitions_of(n);
  auto classes = conjugacy_classes(n);
  std::vector<BigInt> sizes;
  sizes.reserve(classes.size());
  for (const auto& c : classes)
    sizes.push_back(class_size(CycleType(c)));

  std::vector<std::vector<BigInt>> values(irreps.size(), std::vector<BigInt>(classes.size()));
  if (n == 0) {
    values[0][0] = 1;
  } else {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto& rho = classes[c];
      const Part k = rho[1];
      Partition rest(std::vector<Part>(rho.vec().begin() + 1, rho.vec().end()));
      const auto& sub = *smaller[static_cast<std::size_t>(n - k)];
      const std::size_t rest_col = sub.class_index(rest);
      for (std::size_t r = 0; r < irreps.size(); ++r) {
        BigInt total = 0;
        for (const auto& [shape, sign] : remove_border_strips(irreps[r], k)) {
          const BigInt& v = sub.values()[sub.irrep_index(shape)][rest_col];
          if (sign > 0)
            total += v;
          else
            total -= v;
        }
        values[r][c] = std::move(total);
      }
    }
  }
  return std::make_shared<const CharacterTable>(n, std::move(irreps), std::move(classes),
                                                std::move(sizes), std::move(values));
}

struct TableCache {
  std::mutex mutex;
  std::map<std::int64_t, std::shared_ptr<const CharacterTable>> tables;

  std::shared_ptr<const CharacterTable> get(std::int64_t n)
  {
    std::lock_guard lock(mutex);
    if (auto it = tables.find(n); it != tables.end())
      return it->second;

    std::vector<std::shared_ptr<const CharacterTable>> held(static_cast<std::size_t>(n) + 1);
    for (std::int64_t j = 0; j <= n; ++j) {
      auto it = tables.find(j);
      if (it != tables.end()) {
        held[static_cast<std::size_t>(j)] = it->second;
        continue;
      }
      auto t = build_table(j, held);
      held[static_cast<std::size_t>(j)] = t;
      tables.emplace(j, t);
    }
    auto result = held.back();
    held.clear();
    evict(n);
    return result;
  }

  // Drops the largest tables other than `keep` that nobody else holds.
  void evict(std::int64_t keep)
  {
    const std::size_t budget = detail::cache_budget_bytes();
    if (budget == 0)
      return;
    auto total = [&] {
      std::size_t bytes = 0;
      for (const auto& [deg, t] : tables)
        bytes += t->approx_bytes();
      return bytes;
    };
    std::vector<std::int64_t> degrees;
    for (const auto& [deg, t] : tables)
      degrees.push_back(deg);
    for (auto deg = degrees.rbegin(); deg != degrees.rend() && total() > budget; ++deg) {
      auto it = tables.find(*deg);
      if (*deg != keep && it->second.use_count() == 1)
        tables.erase(it);
    }
  }
};

TableCache& table_cache()
{
  static TableCache cache;
  return cache;
}

} // namespace

std::shared_ptr<const CharacterTable> character_table(std::int64_t n)
{
  if (n < 0)
    throw PreconditionError("character_table: negative degree");
  return table_cache().get(n);
}

CharacterVector irreducible_character(const Partition& lambda)
{
  return character_table(lambda.size())->character(lambda);
}

CharacterVector pointwise_product(const CharacterVector& a, const CharacterVector& b)
{
  if (a.degree != b.degree)
    throw SizeMismatch("pointwise_product: degrees differ");
  CharacterVector out{a.degree, std::vector<BigInt>(a.values.size())};
  for (std::size_t i = 0; i < a.values.size(); ++i)
    out.values[i] = a.values[i] * b.values[i];
  return out;
}

BigInt inner_product(const CharacterVector& a, const CharacterVector& b)
{
  if (a.degree != b.degree)
    throw SizeMismatch("inner_product: degrees differ");
  const auto table = character_table(a.degree);
  const auto& sizes = table->class_sizes();
  if (a.values.size() != sizes.size() || b.values.size() != sizes.size())
    throw SizeMismatch("inner_product: character vector has wrong number of classes");
  BigInt sum = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    sum += sizes[i] * a.values[i] * b.values[i];
  const BigInt order = factorial(static_cast<unsigned long>(a.degree));
  if (!mpz_divisible_p(sum.get_mpz_t(), order.get_mpz_t()))
    throw InternalError("inner_product: class sum not divisible by n!");
  return sum / order;
}

CharacterVector evaluate(const Decomposition& d, std::int64_t n)
{
  const auto table = character_table(n);
  CharacterVector out{n, std::vector<BigInt>(table->classes().size(), 0)};
  for (const auto& [nu, coeff] : d) {
    const auto& row = table->row(nu);
    for (std::size_t i = 0; i < row.size(); ++i)
      out.values[i] += coeff * row[i];
  }
  return out;
}

BigInt dimension(const Partition& lambda)
{
  const Partition conj = conjugate(lambda);
  BigInt hooks = 1;
  for (std::size_t i = 1; i <= lambda.length(); ++i)
    for (Part j = 1; j <= lambda[i]; ++j)
      hooks *= (lambda[i] - j) + (conj[static_cast<std::size_t>(j)] - static_cast<Part>(i)) + 1;
  return factorial(static_cast<unsigned long>(lambda.size())) / hooks;
}

Decomposition skew_character(const SkewShape& shape)
{
  Decomposition out;
  for (const auto& tau : partitions_of(shape.size())) {
    BigInt c = lr_coeff(shape, tau);
    if (c != 0)
      out.emplace(tau, std::move(c));
  }
  return out;
}

} // namespace kronkit
