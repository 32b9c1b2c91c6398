#pragma once

/**
 * @file catalog.hpp
 * @brief Built-in groups addressable by name: Cn (n <= 32), Sn and An
 *        (n <= 8), Dn (n <= 12), Q8, V4.
 */

#include "hallforge/table_group.hpp"

#include <string>

namespace hallforge {

TableGroup cyclic(std::size_t n);
TableGroup symmetric(std::size_t n);
TableGroup alternating(std::size_t n);
TableGroup dihedral(std::size_t n); // order 2n
TableGroup quaternion8();
TableGroup klein4();

// Lookup by catalog name, e.g. "C6", "S4", "A5", "D6", "Q8", "V4".
// Throws ParseError for unknown names or out-of-range sizes.
TableGroup catalog_group(const std::string &name);

} // namespace hallforge
