#include "hallforge/catalog.hpp"

#include "hallforge/errors.hpp"

#include <array>

namespace hallforge {

TableGroup cyclic(std::size_t n) {
  if (n == 0 || n > 32)
    throw ParseError("cyclic groups are cataloged for 1 <= n <= 32");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    labels.push_back(k == 0 ? "e" : k == 1 ? "x" : "x^" + std::to_string(k));
  std::vector<std::size_t> gens;
  if (n > 1)
    gens.push_back(1);
  return TableGroup(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; },
                    0, std::move(gens), std::move(labels));
}

TableGroup symmetric(std::size_t n) {
  if (n == 0 || n > 8)
    throw ParseError("symmetric groups are cataloged for 1 <= n <= 8");
  std::uint32_t deg = static_cast<std::uint32_t>(n);
  if (n == 1)
    return table_from_perms(1, {Permutation(1)});
  std::vector<std::uint32_t> cyc(n);
  for (std::size_t i = 0; i < n; ++i)
    cyc[i] = static_cast<std::uint32_t>((i + 1) % n);
  // S8 has 40320 elements, past the default enumeration bound.
  return table_from_perms(deg, {parse_cycles("(1 2)", deg),
                                Permutation::from_images0(cyc)},
                          40320);
}

TableGroup alternating(std::size_t n) {
  if (n == 0 || n > 8)
    throw ParseError("alternating groups are cataloged for 1 <= n <= 8");
  std::uint32_t deg = static_cast<std::uint32_t>(n);
  if (n <= 2)
    return table_from_perms(deg, {Permutation(deg)});
  Permutation three = parse_cycles("(1 2 3)", deg);
  if (n == 3)
    return table_from_perms(deg, {three});
  // Even cycles are odd permutations; shift by one point when n is even.
  std::string cyc = "(";
  for (std::size_t p = (n % 2 == 0) ? 2 : 1; p <= n; ++p)
    cyc += (p > ((n % 2 == 0) ? 2u : 1u) ? " " : "") + std::to_string(p);
  cyc += ")";
  return table_from_perms(deg, {three, parse_cycles(cyc, deg)}, 20160);
}

TableGroup dihedral(std::size_t n) {
  if (n == 0 || n > 12)
    throw ParseError("dihedral groups are cataloged for 1 <= n <= 12");
  // Element (i, j) = r^i s^j packed as i*2 + j, with s r s = r^-1.
  auto mul = [n](std::size_t x, std::size_t y) {
    std::size_t i1 = x / 2, j1 = x % 2;
    std::size_t i2 = y / 2, j2 = y % 2;
    std::size_t i = j1 ? (i1 + n - i2 % n) % n : (i1 + i2) % n;
    return i * 2 + (j1 ^ j2);
  };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      std::string l = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
      if (j)
        l += l.empty() ? "s" : " s";
      labels.push_back(l.empty() ? "e" : l);
    }
  std::vector<std::size_t> gens;
  if (n > 1)
    gens.push_back(2); // r
  gens.push_back(1);   // s
  return TableGroup(2 * n, mul, 0, std::move(gens), std::move(labels));
}

TableGroup quaternion8() {
  // Elements packed as unit*2 + sign with units 1, i, j, k.
  // umul[a][b] = (sign, unit) of the unit product.
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> umul = {{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  auto mul = [](std::size_t x, std::size_t y) {
    std::size_t u1 = x / 2, n1 = x % 2;
    std::size_t u2 = y / 2, n2 = y % 2;
    auto [sg, u] = umul[u1][u2];
    return static_cast<std::size_t>(u) * 2 +
           (static_cast<std::size_t>(sg) ^ n1 ^ n2);
  };
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return TableGroup(8, mul, 0, {2, 4}, std::move(labels));
}

TableGroup klein4() {
  std::vector<std::string> labels = {"e", "a", "b", "ab"};
  return TableGroup(4, [](std::size_t x, std::size_t y) { return x ^ y; }, 0,
                    {1, 2}, std::move(labels));
}

TableGroup catalog_group(const std::string &name) {
  if (name == "Q8")
    return quaternion8();
  if (name == "V4")
    return klein4();
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'S' || name[0] == 'A' ||
                           name[0] == 'D')) {
    std::size_t n = 0;
    for (std::size_t k = 1; k < name.size(); ++k) {
      if (name[k] < '0' || name[k] > '9')
        throw ParseError("unknown catalog group '" + name + "'");
      n = n * 10 + static_cast<std::size_t>(name[k] - '0');
    }
    switch (name[0]) {
    case 'C':
      return cyclic(n);
    case 'S':
      return symmetric(n);
    case 'A':
      return alternating(n);
    case 'D':
      return dihedral(n);
    }
  }
  throw ParseError("unknown catalog group '" + name + "'");
}

} // namespace hallforge
