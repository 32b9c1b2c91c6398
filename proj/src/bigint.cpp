#include "hallforge/bigint.hpp"

#include "hallforge/errors.hpp"

#include <cctype>

namespace hallforge {

BigInt parse_decimal(const std::string &text) {
  if (text.empty())
    throw ParseError("empty integer literal");
  std::size_t i = text[0] == '-' ? 1 : 0;
  if (i == text.size())
    throw ParseError("integer literal has no digits");
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("bad integer literal '" + text + "'");
  }
  return BigInt(text);
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k)
    r *= k;
  return r;
}

} // namespace hallforge
