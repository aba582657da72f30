#include "kronkit/littlewood_richardson.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <tuple>

#include "cache_budget.hpp"
#include "kronkit/errors.hpp"

namespace kronkit {

std::int64_t LRContentSequence::size() const
{
  std::int64_t total = 0;
  for (const auto& p : parts_)
    total += p.size();
  return total;
}

Composition LRContentSequence::type() const
{
  std::vector<Part> sizes;
  sizes.reserve(parts_.size());
  for (const auto& p : parts_)
    sizes.push_back(static_cast<Part>(p.size()));
  return Composition(std::move(sizes));
}

namespace {

// Backtracking over skew cells, rows top to bottom and each row right to
// left, so that the filled cells are always a prefix of the reverse reading
// word and the lattice condition can be checked on the fly.
class LRSearch {
public:
  LRSearch(const SkewShape& shape, const Partition& content)
  : outer_(shape.outer()), inner_(shape.inner()), content_(content)
  {
    for (std::size_t r = 1; r <= outer_.length(); ++r)
      for (Part c = outer_[r]; c > inner_[r]; --c)
        order_.emplace_back(r, c);
    grid_.resize(outer_.length());
    for (std::size_t r = 1; r <= outer_.length(); ++r)
      grid_[r - 1].assign(static_cast<std::size_t>(outer_[r]), 0);
    counts_.assign(content_.length() + 1, 0);
  }

  template <typename OnComplete>
  void run(OnComplete&& done)
  {
    step(0, done);
  }

  std::vector<std::vector<Part>> skew_entries() const
  {
    std::vector<std::vector<Part>> rows(outer_.length());
    for (std::size_t r = 1; r <= outer_.length(); ++r)
      for (Part c = inner_[r] + 1; c <= outer_[r]; ++c)
        rows[r - 1].push_back(grid_[r - 1][static_cast<std::size_t>(c - 1)]);
    return rows;
  }

private:
  template <typename OnComplete>
  void step(std::size_t idx, OnComplete& done)
  {
    if (idx == order_.size()) {
      done();
      return;
    }
    const auto [r, c] = order_[idx];
    const auto col = static_cast<std::size_t>(c - 1);
    Part hi = static_cast<Part>(content_.length());
    if (c < outer_[r])
      hi = std::min(hi, grid_[r - 1][col + 1]);
    Part lo = 1;
    if (r > 1 && c > inner_[r - 1])
      lo = grid_[r - 2][col] + 1;
    for (Part v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (counts_[vi] >= content_[vi])
        continue;
      if (v > 1 && counts_[vi] + 1 > counts_[vi - 1])
        continue;
      ++counts_[vi];
      grid_[r - 1][col] = v;
      step(idx + 1, done);
      grid_[r - 1][col] = 0;
      --counts_[vi];
    }
  }

  const Partition& outer_;
  const Partition& inner_;
  const Partition& content_;
  std::vector<std::pair<std::size_t, Part>> order_;
  std::vector<std::vector<Part>> grid_;
  std::vector<Part> counts_;
};

struct LRCache {
  using Key = std::tuple<Partition, Partition, Partition>;
  std::shared_mutex mutex;
  std::map<Key, BigInt> values;
  std::size_t bytes = 0;

  std::optional<BigInt> find(const Key& key)
  {
    std::shared_lock lock(mutex);
    if (auto it = values.find(key); it != values.end())
      return it->second;
    return std::nullopt;
  }

  void store(Key key, const BigInt& value)
  {
    std::unique_lock lock(mutex);
    const std::size_t entry = 160 + 4 * (std::get<0>(key).length() + std::get<1>(key).length() +
                                         std::get<2>(key).length());
    const std::size_t budget = detail::cache_budget_bytes();
    if (budget != 0 && bytes + entry > budget) {
      values.clear();
      bytes = 0;
    }
    if (values.emplace(std::move(key), value).second)
      bytes += entry;
  }
};

LRCache& lr_cache()
{
  static LRCache cache;
  return cache;
}

// Visits every kappa with lower ⊆ kappa ⊆ upper and |kappa| = size.
// With `horizontal`, additionally kappa_r <= lower_{r-1}.
void for_each_between(const Partition& lower, const Partition& upper, std::int64_t size,
                      bool horizontal, const std::function<void(const Partition&)>& visit)
{
  const std::size_t rows = upper.length();
  std::vector<Part> cur(rows, 0);
  auto rec = [&](auto&& self, std::size_t r, std::int64_t remaining, Part cap) -> void {
    if (r > rows) {
      if (remaining == 0)
        visit(Partition(cur));
      return;
    }
    Part top = std::min(upper[r], cap);
    if (horizontal && r > 1)
      top = std::min(top, lower[r - 1]);
    const Part base = lower[r];
    if (top < base)
      return;
    top = static_cast<Part>(std::min<std::int64_t>(top, base + remaining));
    for (Part x = top; x >= base; --x) {
      cur[r - 1] = x;
      self(self, r + 1, remaining - (x - base), x);
    }
    cur[r - 1] = 0;
  };
  if (!lower.contained_in(upper))
    return;
  rec(rec, 1, size - lower.size(), upper.empty() ? 0 : upper[1]);
}

} // namespace

void for_each_lr_tableau(const SkewShape& shape, const Partition& content,
                         const std::function<void(const LRTableau&)>& visit)
{
  if (shape.size() != content.size())
    throw SizeMismatch("LR tableau: |shape| != |content|");
  LRSearch search(shape, content);
  search.run([&] { visit(LRTableau{shape, search.skew_entries()}); });
}

BigInt lr_coeff(const SkewShape& shape, const Partition& content)
{
  if (shape.size() != content.size())
    throw SizeMismatch("lr_coeff: |shape| != |content|");
  if (shape.empty())
    return 1;
  // Content must fit inside the outer shape.
  if (!content.contained_in(shape.outer()))
    return 0;

  LRCache::Key key{shape.outer(), shape.inner(), content};
  auto& cache = lr_cache();
  if (auto hit = cache.find(key))
    return *hit;

  std::uint64_t count = 0;
  LRSearch search(shape, content);
  search.run([&] { ++count; });
  BigInt result(static_cast<unsigned long>(count));
  cache.store(std::move(key), result);
  return result;
}

BigInt multitableau_count(const Partition& shape, const LRContentSequence& contents)
{
  if (contents.size() != shape.size())
    throw SizeMismatch("multitableau_count: content sizes do not sum to |shape|");
  const auto& seq = contents.parts();

  auto rec = [&](auto&& self, std::size_t i, const Partition& prev) -> BigInt {
    if (i == seq.size())
      return prev == shape ? 1 : 0;
    BigInt total = 0;
    const std::int64_t target = prev.size() + seq[i].size();
    for_each_between(prev, shape, target, false, [&](const Partition& next) {
      BigInt c = lr_coeff(SkewShape(next, prev), seq[i]);
      if (c != 0)
        total += c * self(self, i + 1, next);
    });
    return total;
  };
  return rec(rec, 0, Partition{});
}

BigInt lr_pair_count(const Partition& lambda, const Partition& mu, const Composition& pi)
{
  if (lambda.size() != mu.size() || lambda.size() != pi.size())
    throw SizeMismatch("lr_pair_count: |lambda|, |mu|, |pi| differ");
  const Partition sorted = pi.sorted();
  const auto parts = sorted.vec();

  std::vector<std::vector<Partition>> choices;
  for (Part p : parts)
    choices.push_back(partitions_of(p));

  std::vector<Partition> seq(parts.size());
  BigInt total = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == parts.size()) {
      LRContentSequence contents(seq);
      BigInt a = multitableau_count(lambda, contents);
      if (a == 0)
        return;
      total += a * multitableau_count(mu, contents);
      return;
    }
    for (const auto& rho : choices[i]) {
      seq[i] = rho;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return total;
}

BigInt kostka(const Partition& nu, const Composition& pi)
{
  if (nu.size() != pi.size())
    throw SizeMismatch("kostka: |nu| != |pi|");
  const auto parts = pi.parts();
  std::map<std::pair<std::size_t, Partition>, BigInt> memo;

  // Value i occupies a horizontal strip of size pi_i.
  auto rec = [&](auto&& self, std::size_t i, const Partition& prev) -> BigInt {
    if (i == parts.size())
      return prev == nu ? 1 : 0;
    auto key = std::make_pair(i, prev);
    if (auto it = memo.find(key); it != memo.end())
      return it->second;
    BigInt total = 0;
    for_each_between(prev, nu, prev.size() + parts[i], true,
                     [&](const Partition& next) { total += self(self, i + 1, next); });
    memo.emplace(std::move(key), total);
    return total;
  };
  return rec(rec, 0, Partition{});
}

Decomposition perm_character_decomp(const Composition& pi)
{
  Decomposition out;
  for (const auto& nu : partitions_of(pi.size())) {
    BigInt k = kostka(nu, pi);
    if (k != 0)
      out.emplace(nu, std::move(k));
  }
  return out;
}

} // namespace kronkit
