#pragma once

/**
 * @file perm_kernels.hpp
 * @brief Inner loops on raw permutation image arrays.
 *
 * Every kernel has a scalar reference implementation and, where the target
 * supports it, a vectorized variant (AVX2 on x86, NEON on aarch64). The
 * active variant is picked once at runtime from CPU capabilities and can be
 * forced for testing; scalar and vector variants are interchangeable and are
 * equivalence-tested against each other.
 *
 * Image arrays are 0-indexed: p[i] is the image of point i.
 */

#include <cstddef>
#include <cstdint>
#include <string>

namespace hallforge::kernels {

enum class Backend { Scalar, Avx2, Neon };

Backend active_backend();
bool backend_supported(Backend b);

// Force a backend. Throws hallforge::Error if unsupported on this CPU.
void set_backend(Backend b);

std::string backend_name(Backend b);

// out[i] = q[p[i]]: image array of "apply p, then q". out must not alias p.
void compose(const std::uint32_t *p, const std::uint32_t *q, std::uint32_t *out,
             std::size_t n);

// out[p[i]] = i. out must not alias p.
void invert(const std::uint32_t *p, std::uint32_t *out, std::size_t n);

bool is_identity(const std::uint32_t *p, std::size_t n);

bool equal(const std::uint32_t *p, const std::uint32_t *q, std::size_t n);

namespace detail {

void compose_scalar(const std::uint32_t *p, const std::uint32_t *q,
                    std::uint32_t *out, std::size_t n);
void invert_scalar(const std::uint32_t *p, std::uint32_t *out, std::size_t n);
bool is_identity_scalar(const std::uint32_t *p, std::size_t n);
bool equal_scalar(const std::uint32_t *p, const std::uint32_t *q, std::size_t n);

#ifdef HALLFORGE_WITH_AVX2
void compose_avx2(const std::uint32_t *p, const std::uint32_t *q,
                  std::uint32_t *out, std::size_t n);
bool is_identity_avx2(const std::uint32_t *p, std::size_t n);
bool equal_avx2(const std::uint32_t *p, const std::uint32_t *q, std::size_t n);
#endif

#ifdef HALLFORGE_WITH_NEON
void compose_neon(const std::uint32_t *p, const std::uint32_t *q,
                  std::uint32_t *out, std::size_t n);
bool is_identity_neon(const std::uint32_t *p, std::size_t n);
bool equal_neon(const std::uint32_t *p, const std::uint32_t *q, std::size_t n);
#endif

} // namespace detail

} // namespace hallforge::kernels
