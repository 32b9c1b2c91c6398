// NEON variants for aarch64. NEON has no 32-bit gather; compose keeps scalar
// loads for the table lookups and vectorizes the stores and comparisons.

#include "hallforge/perm_kernels.hpp"

#ifdef HALLFORGE_WITH_NEON

#include <arm_neon.h>

namespace hallforge::kernels::detail {

void compose_neon(const std::uint32_t *p, const std::uint32_t *q,
                  std::uint32_t *out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t idx = vld1q_u32(p + i);
    uint32x4_t val = {q[vgetq_lane_u32(idx, 0)], q[vgetq_lane_u32(idx, 1)],
                      q[vgetq_lane_u32(idx, 2)], q[vgetq_lane_u32(idx, 3)]};
    vst1q_u32(out + i, val);
  }
  for (; i < n; ++i)
    out[i] = q[p[i]];
}

bool is_identity_neon(const std::uint32_t *p, std::size_t n) {
  const uint32x4_t step = vdupq_n_u32(4);
  uint32x4_t iota = {0, 1, 2, 3};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t v = vld1q_u32(p + i);
    uint32x4_t eq = vceqq_u32(v, iota);
    if (vminvq_u32(eq) != 0xffffffffu)
      return false;
    iota = vaddq_u32(iota, step);
  }
  for (; i < n; ++i)
    if (p[i] != i)
      return false;
  return true;
}

bool equal_neon(const std::uint32_t *p, const std::uint32_t *q, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t eq = vceqq_u32(vld1q_u32(p + i), vld1q_u32(q + i));
    if (vminvq_u32(eq) != 0xffffffffu)
      return false;
  }
  for (; i < n; ++i)
    if (p[i] != q[i])
      return false;
  return true;
}

} // namespace hallforge::kernels::detail

#endif // HALLFORGE_WITH_NEON
