#include "cache_budget.hpp"

#include <cstdlib>
#include <string>

namespace kronkit::detail {

std::size_t cache_budget_bytes()
{
  static const std::size_t budget = [] {
    constexpr std::size_t fallback = std::size_t{1} << 30;
    const char* env = std::getenv("KRONKIT_CACHE_BYTES");
    if (!env || !*env)
      return fallback;
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (...) {
      return fallback;
    }
  }();
  return budget;
}

} // namespace kronkit::detail
