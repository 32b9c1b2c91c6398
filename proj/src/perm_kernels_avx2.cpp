// AVX2 variants. This translation unit is compiled with -mavx2; callers go
// through the runtime dispatch in perm_kernels.cpp.

#include "hallforge/perm_kernels.hpp"

#ifdef HALLFORGE_WITH_AVX2

#include <immintrin.h>

namespace hallforge::kernels::detail {

void compose_avx2(const std::uint32_t *p, const std::uint32_t *q,
                  std::uint32_t *out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i idx =
        _mm256_loadu_si256(reinterpret_cast<const __m256i *>(p + i));
    __m256i val =
        _mm256_i32gather_epi32(reinterpret_cast<const int *>(q), idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(out + i), val);
  }
  for (; i < n; ++i)
    out[i] = q[p[i]];
}

bool is_identity_avx2(const std::uint32_t *p, std::size_t n) {
  const __m256i step = _mm256_set1_epi32(8);
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(p + i));
    __m256i eq = _mm256_cmpeq_epi32(v, iota);
    if (_mm256_movemask_epi8(eq) != -1)
      return false;
    iota = _mm256_add_epi32(iota, step);
  }
  for (; i < n; ++i)
    if (p[i] != i)
      return false;
  return true;
}

bool equal_avx2(const std::uint32_t *p, const std::uint32_t *q, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(p + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(q + i));
    __m256i eq = _mm256_cmpeq_epi32(a, b);
    if (_mm256_movemask_epi8(eq) != -1)
      return false;
  }
  for (; i < n; ++i)
    if (p[i] != q[i])
      return false;
  return true;
}

} // namespace hallforge::kernels::detail

#endif // HALLFORGE_WITH_AVX2
