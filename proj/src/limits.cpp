#include "hallforge/limits.hpp"

#include <cstdlib>

namespace hallforge::limits {

std::size_t enumeration_bound() {
  static const std::size_t bound = [] {
    if (const char *env = std::getenv("HALLFORGE_ENUM_BOUND")) {
      char *end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0)
        return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(20000);
  }();
  return bound;
}

} // namespace hallforge::limits
