#pragma once

#include <cstddef>
#include <memory>
#include <unordered_map>
#include <vector>

#include "kronkit/bigint.hpp"
#include "kronkit/littlewood_richardson.hpp"
#include "kronkit/partition.hpp"

namespace kronkit {

/// Cycle lengths of a permutation; indexes a conjugacy class of S_n.
class CycleType {
public:
  explicit CycleType(Partition cycles) : cycles_(std::move(cycles)) {}
  const Partition& cycles() const { return cycles_; }
  std::int64_t degree() const { return cycles_.size(); }

  /// (-1)^(n - number of cycles).
  int sign() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

private:
  Partition cycles_;
};

/// Conjugacy classes of S_n in ascending lexicographic order, identity
/// class (1^n) first and the n-cycle last.
std::vector<Partition> conjugacy_classes(std::int64_t n);

/// z_rho = prod_i i^{m_i} m_i!, the centralizer order.
BigInt centralizer_order(const CycleType& rho);
BigInt class_size(const CycleType& rho);

/// Class function on S_n; values[i] is the value on conjugacy_classes(n)[i].
struct CharacterVector {
  std::int64_t degree = 0;
  std::vector<BigInt> values;

  const BigInt& at(const CycleType& rho) const;
};

/// chi^lambda(rho) by the Murnaghan-Nakayama rule, largest cycle removed
/// first. Throws SizeMismatch if |lambda| != |rho|.
BigInt mn_value(const Partition& lambda, const CycleType& rho);

/// Border strips of length k removable from `shape`, as (shape minus strip,
/// (-1)^height) pairs. Traversal order is fixed.
std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& shape, Part k);

class CharacterTable {
public:
  CharacterTable(std::int64_t n, std::vector<Partition> irreps, std::vector<Partition> classes,
                 std::vector<BigInt> class_sizes, std::vector<std::vector<BigInt>> values);

  std::int64_t degree() const { return n_; }
  /// Row labels in partitions_of order: (n) first.
  const std::vector<Partition>& irreps() const { return irreps_; }
  /// Column labels as in conjugacy_classes(n).
  const std::vector<Partition>& classes() const { return classes_; }
  const std::vector<BigInt>& class_sizes() const { return class_sizes_; }
  const std::vector<std::vector<BigInt>>& values() const { return values_; }

  std::size_t irrep_index(const Partition& lambda) const;
  std::size_t class_index(const Partition& rho) const;
  const std::vector<BigInt>& row(const Partition& lambda) const
  {
    return values_[irrep_index(lambda)];
  }
  const BigInt& value(const Partition& lambda, const Partition& rho) const
  {
    return values_[irrep_index(lambda)][class_index(rho)];
  }
  CharacterVector character(const Partition& lambda) const;

  /// Rough heap footprint, used by the cache budget.
  std::size_t approx_bytes() const;

private:
  std::int64_t n_;
  std::vector<Partition> irreps_;
  std::vector<Partition> classes_;
  std::vector<BigInt> class_sizes_;
  std::vector<std::vector<BigInt>> values_;
  std::unordered_map<Partition, std::size_t, PartitionHash> irrep_pos_;
  std::unordered_map<Partition, std::size_t, PartitionHash> class_pos_;
};

/// Full character table of S_n, built from the tables of smaller degree and
/// shared process-wide. Safe to call concurrently.
std::shared_ptr<const CharacterTable> character_table(std::int64_t n);

CharacterVector irreducible_character(const Partition& lambda);
CharacterVector pointwise_product(const CharacterVector& a, const CharacterVector& b);

/// (1/n!) sum_rho |C_rho| a(rho) b(rho). Throws SizeMismatch on differing
/// degrees and InternalError when the sum is not divisible by n!.
BigInt inner_product(const CharacterVector& a, const CharacterVector& b);

/// Evaluates sum_nu coeff * chi^nu on every class of S_n.
CharacterVector evaluate(const Decomposition& d, std::int64_t n);

/// f^lambda by the hook length formula.
BigInt dimension(const Partition& lambda);

/// chi^{outer/inner} = sum_tau c^{outer}_{inner,tau} chi^tau. The empty
/// shape gives {(): 1}.
Decomposition skew_character(const SkewShape& shape);

} // namespace kronkit
