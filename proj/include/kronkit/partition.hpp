#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kronkit {

using Part = std::int32_t;

/// Weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros. Two partitions that differ only by trailing zeros are
/// the same value.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<Part> parts);

  /// Validates monotonicity and nonnegativity; strips trailing zeros.
  /// Throws PreconditionError on violation.
  explicit Partition(std::vector<Part> parts);

  std::span<const Part> parts() const { return parts_; }
  const std::vector<Part>& vec() const { return parts_; }

  /// Number of strictly positive parts.
  std::size_t length() const { return parts_.size(); }
  std::int64_t size() const;
  bool empty() const { return parts_.empty(); }

  /// 1-based row access with implicit zero padding.
  Part operator[](std::size_t row) const
  {
    return row >= 1 && row <= parts_.size() ? parts_[row - 1] : 0;
  }

  /// Parts padded with zeros to exactly `n` entries. Requires length() <= n.
  std::vector<Part> padded(std::size_t n) const;

  /// Diagram containment: self[i] <= other[i] for every row.
  bool contained_in(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts; (3) > (2,1) > (1,1,1).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
  {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<Part> parts_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Finite sequence of strictly positive integers.
class Composition {
public:
  Composition() = default;
  Composition(std::initializer_list<Part> parts);
  explicit Composition(std::vector<Part> parts);
  static Composition from(const Partition& p) { return Composition(p.vec()); }

  std::span<const Part> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  std::int64_t size() const;

  /// Parts sorted decreasingly.
  Partition sorted() const;

  friend bool operator==(const Composition&, const Composition&) = default;

private:
  std::vector<Part> parts_;
};

/// The cells of `outer` not in `inner`; requires inner ⊆ outer.
class SkewShape {
public:
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  std::int64_t size() const { return outer_.size() - inner_.size(); }
  bool empty() const { return size() == 0; }

  /// 1-based (row, column) cells in row-major order.
  std::vector<std::pair<std::size_t, Part>> cells() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
  Partition outer_;
  Partition inner_;
};

/// n rows of width t, i.e. the vector (t, ..., t) with n entries.
struct Rectangle {
  Part width;
  Part height;

  Rectangle(Part t, Part n);
};

Partition conjugate(const Partition& p);
Partition intersect(const Partition& a, const Partition& b);

/// Adds t to each of the first n (zero-padded) rows. Throws
/// PreconditionError when length(p) > n.
Partition add_rectangle(const Partition& p, Rectangle rect);

/// Inverse of add_rectangle. Throws PreconditionError when length(p) > n or
/// some of the first n padded rows is shorter than t.
Partition subtract_rectangle(const Partition& p, Rectangle rect);

/// Throws PreconditionError unless inner ⊆ outer.
SkewShape skew(const Partition& outer, const Partition& inner);

struct PartitionBounds {
  std::optional<std::size_t> max_length;
  std::optional<Part> max_part;
};

/// Calls `visit` for every partition of m within the bounds, in reverse
/// lexicographic order: (m), (m-1,1), ..., (1^m).
void for_each_partition(std::int64_t m, PartitionBounds bounds,
                        const std::function<void(const Partition&)>& visit);

std::vector<Partition> partitions_of(std::int64_t m, PartitionBounds bounds = {});

/// Accepts "a,b,c" with optional surrounding brackets or parentheses and
/// whitespace around entries. Empty text (or "[]") is the empty partition.
Partition parse_partition(std::string_view text);

/// Canonical "a,b,c" form; the empty partition formats as "".
std::string format_partition(const Partition& p);

} // namespace kronkit
