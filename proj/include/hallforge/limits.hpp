#pragma once

#include <cstddef>
#include <cstdint>

namespace hallforge::limits {

// Hard ceiling for explicit element enumeration. Overridable through the
// HALLFORGE_ENUM_BOUND environment variable (read once per process).
std::size_t enumeration_bound();

// Default ceiling for the degree of ambient permutation domains built by the
// extension and amalgamation constructions. Callers can pass their own cap.
constexpr std::uint32_t default_degree_cap = 5000;

} // namespace hallforge::limits
