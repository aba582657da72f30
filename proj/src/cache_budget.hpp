#pragma once

#include <cstddef>

namespace kronkit::detail {

/// Byte budget shared by the memo caches. Read once from
/// KRONKIT_CACHE_BYTES; defaults to 1 GiB. Zero disables eviction.
std::size_t cache_budget_bytes();

} // namespace kronkit::detail
