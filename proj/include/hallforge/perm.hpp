#pragma once

/**
 * @file perm.hpp
 * @brief Permutations of {1, ..., degree}.
 *
 * Products compose left to right: (p * q)(x) = q(p(x)). Conjugation follows
 * the same orientation, p.conjugated_by(h) = h^-1 * p * h.
 */

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hallforge {

class Permutation {
public:
  // Identity on {1, ..., degree}.
  explicit Permutation(std::uint32_t degree);

  // images[i] is the image of point i+1, values 1-indexed.
  static Permutation from_images(std::vector<std::uint32_t> images);

  // images[i] is the image of point i, values 0-indexed.
  static Permutation from_images0(std::vector<std::uint32_t> images);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(img_.size()); }

  // 1-indexed application.
  std::uint32_t operator()(std::uint32_t point) const { return img_[point - 1] + 1; }

  // 0-indexed application, the fast path.
  std::uint32_t image0(std::uint32_t i) const { return img_[i]; }

  const std::uint32_t *data() const { return img_.data(); }

  Permutation operator*(const Permutation &rhs) const; // apply *this, then rhs
  Permutation inverse() const;
  Permutation conjugated_by(const Permutation &h) const;

  bool is_identity() const;
  bool operator==(const Permutation &rhs) const;
  bool operator!=(const Permutation &rhs) const { return !(*this == rhs); }

  // Smallest moved point (1-indexed), 0 if identity.
  std::uint32_t smallest_moved_point() const;

  std::string cycles() const; // "(1 2 3)(4 5)", identity prints "()"

  std::uint64_t hash() const;

private:
  Permutation() = default;

  std::vector<std::uint32_t> img_; // 0-indexed
};

// Cycle notation parser. Accepts "()" for the identity or one or more
// parenthesized cycles of 1-indexed points, e.g. "(1 2 3)(4 5)".
// Throws ParseError on malformed input, points exceeding the degree,
// or a point repeated within or across cycles.
Permutation parse_cycles(const std::string &text, std::uint32_t degree);

// compose(p, q) == p * q; kept as a free function to mirror the operation's
// left-to-right reading.
inline Permutation compose(const Permutation &p, const Permutation &q) {
  return p * q;
}

std::ostream &operator<<(std::ostream &os, const Permutation &p);

struct PermHash {
  std::size_t operator()(const Permutation &p) const {
    return static_cast<std::size_t>(p.hash());
  }
};

} // namespace hallforge
