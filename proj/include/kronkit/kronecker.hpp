#pragma once

#include <string>

#include "kronkit/bigint.hpp"
#include "kronkit/littlewood_richardson.hpp"
#include "kronkit/partition.hpp"
#include "kronkit/trace.hpp"

namespace kronkit {

/// Multiplicity of chi^nu in chi^lambda ⊗ chi^mu, straight from the
/// character sum (1/m!) sum_rho |C_rho| chi^lambda chi^mu chi^nu.
/// Throws SizeMismatch; throws InternalError if the sum is not a
/// nonnegative multiple of m!.
BigInt kron_coeff_direct(const Partition& lambda, const Partition& mu, const Partition& nu);

/// chi^lambda ⊗ chi^mu over all nu; zero multiplicities are omitted.
struct KroneckerExpansion {
  std::int64_t degree = 0;
  Decomposition terms;
};

KroneckerExpansion kron_expand(const Partition& lambda, const Partition& mu);

/// True when a comes first in the canonical order: longer partitions
/// first, equal lengths in reverse lexicographic order.
bool canonical_before(const Partition& a, const Partition& b);
Triple canonical_order(Triple t);

enum class Method { Auto, Direct, Dvir, Formula };

struct KronResult {
  BigInt value;
  /// "direct", "reduced", "formula-2row", "formula-422", "vanishing" or
  /// "dvir"; determined by the final trace step.
  std::string method;
  ReductionTrace trace;
};

/// Coefficient with a record of how it was obtained.
///
/// Auto runs: canonical ordering, frame vanishing over every role
/// assignment, repeated rectangle reduction, closed formulas, and finally
/// the character sum. Direct, Dvir and Formula force one route and throw
/// NotApplicable when its hypotheses fail.
KronResult kron_coeff(const Partition& lambda, const Partition& mu, const Partition& nu,
                      Method method = Method::Auto);

} // namespace kronkit
