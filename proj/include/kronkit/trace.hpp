#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kronkit/bigint.hpp"
#include "kronkit/partition.hpp"

namespace kronkit {

using Triple = std::array<Partition, 3>;

/// Lengths p, q, r with p = q*r and rectangle width t >= 1.
struct RectangleFrame {
  Part p;
  Part q;
  Part r;
  Part t;

  /// Throws PreconditionError unless p = q*r, all positive, t >= 1.
  static RectangleFrame make(Part p, Part q, Part r, Part t);

  friend bool operator==(const RectangleFrame&, const RectangleFrame&) = default;
};

struct FormulaIntermediates {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::optional<std::int64_t> z;
  /// 1 or 2 for the four-two-two formula.
  std::optional<int> formula_case;
};

struct TraceStep {
  std::string theorem;
  Triple before;
  Triple after;
  std::optional<RectangleFrame> frame;
  std::optional<FormulaIntermediates> intermediates;
  /// Set on the final step only.
  std::optional<BigInt> value;
};

/// Ordered record of the steps the dispatcher took. Consecutive steps are
/// linked: steps[i].after == steps[i+1].before.
struct ReductionTrace {
  std::vector<TraceStep> steps;

  bool linked() const;
};

/// A partition as a JSON array of parts.
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const Triple& t);
/// Numbers when they fit in 64 bits, decimal strings otherwise.
nlohmann::json to_json(const BigInt& v);
/// {"theorem", "before", "after", "frame"?, "intermediates"?, "value"?}
nlohmann::json to_json(const TraceStep& step);
nlohmann::json to_json(const ReductionTrace& trace);

std::string format_triple(const Triple& t);

} // namespace kronkit
