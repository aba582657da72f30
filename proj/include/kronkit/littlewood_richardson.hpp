#pragma once

#include <functional>
#include <map>
#include <vector>

#include "kronkit/bigint.hpp"
#include "kronkit/partition.hpp"

namespace kronkit {

/// Formal integer combination of irreducible characters, keyed by partition
/// in reverse lexicographic order. Zero coefficients are never stored.
using Decomposition = std::map<Partition, BigInt, std::greater<>>;

/// A filling of a skew shape; entries[r] lists row r+1 of the skew part,
/// left to right.
struct LRTableau {
  SkewShape shape;
  std::vector<std::vector<Part>> entries;
};

/// Content sequence (rho(1), ..., rho(r)) of a multitableau. Its type is the
/// composition of the sizes.
class LRContentSequence {
public:
  LRContentSequence() = default;
  LRContentSequence(std::initializer_list<Partition> parts) : parts_(parts) {}
  explicit LRContentSequence(std::vector<Partition> parts) : parts_(std::move(parts)) {}

  const std::vector<Partition>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  std::int64_t size() const;

  /// Sizes of the entries. Empty entries are rejected since a composition
  /// has positive parts.
  Composition type() const;

private:
  std::vector<Partition> parts_;
};

/// Visits every Littlewood-Richardson tableau of the shape and content:
/// rows weakly increase, columns strictly increase and the reverse reading
/// word (rows right to left, top to bottom) is a lattice word.
void for_each_lr_tableau(const SkewShape& shape, const Partition& content,
                         const std::function<void(const LRTableau&)>& visit);

/// Number of LR tableaux of the shape with the given content; for shape
/// outer/inner this is c^{outer}_{inner, content}. Throws SizeMismatch when
/// |shape| != |content|. Results are memoized process-wide.
BigInt lr_coeff(const SkewShape& shape, const Partition& content);

/// Number of LR multitableaux of shape `shape` with the given contents.
BigInt multitableau_count(const Partition& shape, const LRContentSequence& contents);

/// lr(lambda, mu; pi): pairs of multitableaux of shapes lambda and mu with a
/// common content sequence of type pi. The composition is sorted first; the
/// count does not depend on the order of its parts.
BigInt lr_pair_count(const Partition& lambda, const Partition& mu, const Composition& pi);

/// Semistandard tableaux of shape nu with content pi.
BigInt kostka(const Partition& nu, const Composition& pi);

/// Young's rule: the permutation character induced from the trivial
/// character of the Young subgroup S_pi, as {nu: K_{nu,pi}}.
Decomposition perm_character_decomp(const Composition& pi);

} // namespace kronkit
