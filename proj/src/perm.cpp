#include "hallforge/perm.hpp"

#include "hallforge/errors.hpp"
#include "hallforge/perm_kernels.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hallforge {

Permutation::Permutation(std::uint32_t degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0u);
}

Permutation Permutation::from_images0(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::uint32_t v : images) {
    if (v >= images.size() || seen[v])
      throw Error("image list is not a bijection");
    seen[v] = true;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  for (std::uint32_t &v : images) {
    if (v == 0 || v > images.size())
      throw Error("1-indexed image out of range");
    --v;
  }
  return from_images0(std::move(images));
}

Permutation Permutation::operator*(const Permutation &rhs) const {
  if (degree() != rhs.degree())
    throw Error("degree mismatch in permutation product");
  Permutation out;
  out.img_.resize(img_.size());
  kernels::compose(img_.data(), rhs.img_.data(), out.img_.data(), img_.size());
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_.resize(img_.size());
  kernels::invert(img_.data(), out.img_.data(), img_.size());
  return out;
}

Permutation Permutation::conjugated_by(const Permutation &h) const {
  return h.inverse() * (*this * h);
}

bool Permutation::is_identity() const {
  return kernels::is_identity(img_.data(), img_.size());
}

bool Permutation::operator==(const Permutation &rhs) const {
  return degree() == rhs.degree() &&
         kernels::equal(img_.data(), rhs.img_.data(), img_.size());
}

std::uint32_t Permutation::smallest_moved_point() const {
  for (std::uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i)
      return i + 1;
  return 0;
}

std::string Permutation::cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (std::uint32_t start = 0; start < img_.size(); ++start) {
    if (seen[start] || img_[start] == start)
      continue;
    any = true;
    os << '(' << start + 1;
    seen[start] = true;
    for (std::uint32_t p = img_[start]; p != start; p = img_[p]) {
      seen[p] = true;
      os << ' ' << p + 1;
    }
    os << ')';
  }
  if (!any)
    return "()";
  return os.str();
}

std::uint64_t Permutation::hash() const {
  std::uint64_t h = 1469598103934665603ull; // FNV-1a
  for (std::uint32_t v : img_) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

Permutation parse_cycles(const std::string &text, std::uint32_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  if (i == text.size())
    throw ParseError("empty permutation text");

  bool saw_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size())
      break;
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation near '" +
                       text.substr(i) + "'");
    ++i;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == start)
        throw ParseError("expected point or ')' in cycle");
      unsigned long v = std::stoul(text.substr(start, i - start));
      if (v == 0 || v > degree)
        throw ParseError("point " + std::to_string(v) + " exceeds degree " +
                         std::to_string(degree));
      std::uint32_t p = static_cast<std::uint32_t>(v - 1);
      if (used[p])
        throw ParseError("point " + std::to_string(v) + " repeated");
      used[p] = true;
      cycle.push_back(p);
    }
    saw_cycle = true;
    // "()" is the identity and must stand alone as an empty cycle list entry.
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
      img[cycle[k]] = cycle[k + 1];
    if (cycle.size() >= 2)
      img[cycle.back()] = cycle.front();
  }
  if (!saw_cycle)
    throw ParseError("no cycles found");
  return Permutation::from_images0(std::move(img));
}

std::ostream &operator<<(std::ostream &os, const Permutation &p) {
  return os << p.cycles();
}

} // namespace hallforge
