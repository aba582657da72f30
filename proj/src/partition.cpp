#include "kronkit/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "kronkit/errors.hpp"

namespace kronkit {

namespace {

Part checked_add(Part a, Part b)
{
  Part out{};
  if (__builtin_add_overflow(a, b, &out))
    throw PreconditionError("partition part overflows");
  return out;
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

} // namespace

Partition::Partition(std::initializer_list<Part> parts)
: Partition(std::vector<Part>(parts))
{}

Partition::Partition(std::vector<Part> parts)
: parts_(std::move(parts))
{
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0)
      throw PreconditionError("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw PreconditionError("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0)
    parts_.pop_back();
}

std::int64_t Partition::size() const
{
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::vector<Part> Partition::padded(std::size_t n) const
{
  if (parts_.size() > n)
    throw PreconditionError("partition longer than requested padding");
  std::vector<Part> out(parts_);
  out.resize(n, 0);
  return out;
}

bool Partition::contained_in(const Partition& other) const
{
  if (parts_.size() > other.parts_.size())
    return false;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i] > other.parts_[i])
      return false;
  return true;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (Part x : p.parts())
    h ^= std::hash<Part>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

Composition::Composition(std::initializer_list<Part> parts)
: Composition(std::vector<Part>(parts))
{}

Composition::Composition(std::vector<Part> parts)
: parts_(std::move(parts))
{
  for (Part x : parts_)
    if (x <= 0)
      throw PreconditionError("composition parts must be positive");
}

std::int64_t Composition::size() const
{
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

Partition Composition::sorted() const
{
  std::vector<Part> v(parts_);
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

SkewShape::SkewShape(Partition outer, Partition inner)
: outer_(std::move(outer)), inner_(std::move(inner))
{
  if (!inner_.contained_in(outer_))
    throw PreconditionError("skew shape requires inner ⊆ outer");
}

std::vector<std::pair<std::size_t, Part>> SkewShape::cells() const
{
  std::vector<std::pair<std::size_t, Part>> out;
  for (std::size_t row = 1; row <= outer_.length(); ++row)
    for (Part col = inner_[row] + 1; col <= outer_[row]; ++col)
      out.emplace_back(row, col);
  return out;
}

Rectangle::Rectangle(Part t, Part n)
: width(t), height(n)
{
  if (t < 1 || n < 1)
    throw PreconditionError("rectangle needs positive width and height");
}

Partition conjugate(const Partition& p)
{
  if (p.empty())
    return {};
  std::vector<Part> out(static_cast<std::size_t>(p[1]), 0);
  for (Part row : p.parts())
    for (Part j = 0; j < row; ++j)
      ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

Partition intersect(const Partition& a, const Partition& b)
{
  std::size_t n = std::min(a.length(), b.length());
  std::vector<Part> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::min(a.parts()[i], b.parts()[i]);
  return Partition(std::move(out));
}

Partition add_rectangle(const Partition& p, Rectangle rect)
{
  auto n = static_cast<std::size_t>(rect.height);
  if (p.length() > n)
    throw PreconditionError("add_rectangle: partition longer than rectangle");
  std::vector<Part> out = p.padded(n);
  for (Part& x : out)
    x = checked_add(x, rect.width);
  return Partition(std::move(out));
}

Partition subtract_rectangle(const Partition& p, Rectangle rect)
{
  auto n = static_cast<std::size_t>(rect.height);
  if (p.length() > n)
    throw PreconditionError("subtract_rectangle: partition longer than rectangle");
  std::vector<Part> out = p.padded(n);
  for (Part& x : out) {
    if (x < rect.width)
      throw PreconditionError("subtract_rectangle: row shorter than rectangle width");
    x -= rect.width;
  }
  return Partition(std::move(out));
}

SkewShape skew(const Partition& outer, const Partition& inner)
{
  return SkewShape(outer, inner);
}

void for_each_partition(std::int64_t m, PartitionBounds bounds,
                        const std::function<void(const Partition&)>& visit)
{
  if (m < 0)
    return;
  const std::size_t max_len = bounds.max_length.value_or(static_cast<std::size_t>(m));
  const Part cap = bounds.max_part.value_or(static_cast<Part>(m));
  std::vector<Part> cur;

  // Largest available part first gives reverse lexicographic order.
  auto rec = [&](auto&& self, std::int64_t remaining, Part limit) -> void {
    if (remaining == 0) {
      visit(Partition(cur));
      return;
    }
    if (cur.size() == max_len)
      return;
    Part top = static_cast<Part>(std::min<std::int64_t>(limit, remaining));
    for (Part x = top; x >= 1; --x) {
      // Remaining rows cannot absorb the rest.
      if (static_cast<std::int64_t>(x) * static_cast<std::int64_t>(max_len - cur.size()) < remaining)
        break;
      cur.push_back(x);
      self(self, remaining - x, x);
      cur.pop_back();
    }
  };
  rec(rec, m, cap);
}

std::vector<Partition> partitions_of(std::int64_t m, PartitionBounds bounds)
{
  std::vector<Partition> out;
  for_each_partition(m, bounds, [&](const Partition& p) { out.push_back(p); });
  return out;
}

Partition parse_partition(std::string_view text)
{
  std::string_view s = trim(text);
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
    char close = s.front() == '[' ? ']' : ')';
    if (s.size() < 2 || s.back() != close)
      throw ParseError("unbalanced brackets in partition '" + std::string(text) + "'");
    s = trim(s.substr(1, s.size() - 2));
  }
  std::vector<Part> parts;
  if (s.empty())
    return {};
  while (true) {
    auto comma = s.find(',');
    std::string_view tok = trim(s.substr(0, comma));
    Part value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
      throw ParseError("invalid partition entry '" + std::string(tok) + "' in '" +
                       std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos)
      break;
    s.remove_prefix(comma + 1);
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1])
      throw ParseError("partition '" + std::string(text) + "' is not weakly decreasing");
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& p)
{
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

} // namespace kronkit
