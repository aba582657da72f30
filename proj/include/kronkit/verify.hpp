#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kronkit::verify {

struct PropertyResult {
  std::string name;
  std::uint64_t cases = 0;
  /// First failing case in enumeration order, if any.
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

/// Sweeps shard their cases over `jobs` threads; the reported
/// counterexample is always the lowest-indexed failure.
struct SweepOptions {
  std::int64_t max_m = 1;
  unsigned jobs = 1;
};

/// Row orthogonality of the character tables of S_n, n <= max_m.
PropertyResult orthogonality(SweepOptions opt);
/// chi^lambda(1^n) equals the hook-length dimension, n <= max_m.
PropertyResult identity_value_is_dimension(SweepOptions opt);

/// Inflating by (t)^p, (rt)^q, (qt)^r preserves the coefficient, for every
/// triple of size <= max_m, every p = q*r <= max_frame with admissible
/// lengths, and t in {1, 2}.
PropertyResult stability(SweepOptions opt, int max_frame = 6);

/// rectangle_reduce is sound: Zero means the coefficient vanishes, Reduced
/// preserves it.
PropertyResult rectangle_reduction(SweepOptions opt);

/// vanishing_lr implies lr(lambda, mu; nu) = 0.
PropertyResult lr_vanishing(SweepOptions opt);

/// lr(lambda, mu; pi) = sum_nu K_{nu,pi} k(lambda, mu, nu).
PropertyResult lr_character_identity(SweepOptions opt);

/// lr(lambda, mu; nu) >= k(lambda, mu, nu).
PropertyResult lr_dominates_kronecker(SweepOptions opt);

/// dvir_reduce agrees with the direct sum wherever it applies.
PropertyResult dvir(SweepOptions opt);

PropertyResult two_row(SweepOptions opt);

/// four_two_two_formula agrees with the direct sum, and with the
/// two-row formula after the (4,2,2) reduction at exact lengths.
PropertyResult four_two_two(SweepOptions opt);

/// For mu, nu of length 2, every constituent of chi^mu ⊗ chi^nu has
/// length <= |mu ∩ nu'| <= 4.
PropertyResult length_bound(SweepOptions opt);

/// The auto dispatcher matches the direct sum; traces are linked and the
/// method tag is consistent with the final step.
PropertyResult dispatcher(SweepOptions opt);

/// Known suite names: oracle, stability, reduction, lr, dvir, formulas,
/// bound, dispatch, all. Throws std::invalid_argument on others.
std::vector<PropertyResult> run_suite(std::string_view suite, SweepOptions opt);

const std::vector<std::string>& suite_names();

} // namespace kronkit::verify
