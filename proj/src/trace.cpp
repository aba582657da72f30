#include "kronkit/trace.hpp"

#include "kronkit/errors.hpp"

namespace kronkit {

RectangleFrame RectangleFrame::make(Part p, Part q, Part r, Part t)
{
  if (p < 1 || q < 1 || r < 1)
    throw PreconditionError("rectangle frame needs positive p, q, r");
  if (static_cast<std::int64_t>(p) != static_cast<std::int64_t>(q) * r)
    throw PreconditionError("rectangle frame needs p = q*r");
  if (t < 1)
    throw PreconditionError("rectangle frame needs t >= 1");
  return RectangleFrame{p, q, r, t};
}

bool ReductionTrace::linked() const
{
  for (std::size_t i = 1; i < steps.size(); ++i)
    if (steps[i - 1].after != steps[i].before)
      return false;
  return true;
}

nlohmann::json to_json(const Partition& p)
{
  return nlohmann::json(p.vec());
}

nlohmann::json to_json(const Triple& t)
{
  return nlohmann::json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])});
}

nlohmann::json to_json(const BigInt& v)
{
  if (fits_uint64(v))
    return to_uint64(v);
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(v.get_si());
  return to_string(v);
}

nlohmann::json to_json(const TraceStep& step)
{
  nlohmann::json j;
  j["theorem"] = step.theorem;
  j["before"] = to_json(step.before);
  j["after"] = to_json(step.after);
  if (step.frame)
    j["frame"] = {{"p", step.frame->p}, {"q", step.frame->q}, {"r", step.frame->r},
                  {"t", step.frame->t}};
  if (step.intermediates) {
    nlohmann::json im{{"x", step.intermediates->x}, {"y", step.intermediates->y}};
    if (step.intermediates->z)
      im["z"] = *step.intermediates->z;
    if (step.intermediates->formula_case)
      im["case"] = *step.intermediates->formula_case;
    j["intermediates"] = std::move(im);
  }
  if (step.value)
    j["value"] = to_json(*step.value);
  return j;
}

nlohmann::json to_json(const ReductionTrace& trace)
{
  auto arr = nlohmann::json::array();
  for (const auto& s : trace.steps)
    arr.push_back(to_json(s));
  return arr;
}

std::string format_triple(const Triple& t)
{
  return "(" + format_partition(t[0]) + " | " + format_partition(t[1]) + " | " +
         format_partition(t[2]) + ")";
}

} // namespace kronkit
