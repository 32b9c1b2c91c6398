#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hallforge {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt &v) { return v.str(); }

BigInt parse_decimal(const std::string &text);

BigInt factorial(unsigned n);

} // namespace hallforge
