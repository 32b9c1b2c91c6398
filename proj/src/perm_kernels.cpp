#include "hallforge/perm_kernels.hpp"

#include "hallforge/errors.hpp"

#include <atomic>

namespace hallforge::kernels {

namespace detail {

void compose_scalar(const std::uint32_t *p, const std::uint32_t *q,
                    std::uint32_t *out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = q[p[i]];
}

void invert_scalar(const std::uint32_t *p, std::uint32_t *out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    out[p[i]] = static_cast<std::uint32_t>(i);
}

bool is_identity_scalar(const std::uint32_t *p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] != i)
      return false;
  return true;
}

bool equal_scalar(const std::uint32_t *p, const std::uint32_t *q, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] != q[i])
      return false;
  return true;
}

} // namespace detail

namespace {

struct Dispatch {
  void (*compose)(const std::uint32_t *, const std::uint32_t *, std::uint32_t *,
                  std::size_t);
  void (*invert)(const std::uint32_t *, std::uint32_t *, std::size_t);
  bool (*is_identity)(const std::uint32_t *, std::size_t);
  bool (*equal)(const std::uint32_t *, const std::uint32_t *, std::size_t);
};

constexpr Dispatch scalar_dispatch{
    detail::compose_scalar, detail::invert_scalar, detail::is_identity_scalar,
    detail::equal_scalar};

#ifdef HALLFORGE_WITH_AVX2
// AVX2 has gathers but no scatters; invert stays scalar.
constexpr Dispatch avx2_dispatch{
    detail::compose_avx2, detail::invert_scalar, detail::is_identity_avx2,
    detail::equal_avx2};
#endif

#ifdef HALLFORGE_WITH_NEON
constexpr Dispatch neon_dispatch{
    detail::compose_neon, detail::invert_scalar, detail::is_identity_neon,
    detail::equal_neon};
#endif

bool cpu_has_avx2() {
#if defined(HALLFORGE_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

bool cpu_has_neon() {
#ifdef HALLFORGE_WITH_NEON
  return true; // NEON is baseline on aarch64
#else
  return false;
#endif
}

Backend detect_backend() {
  if (cpu_has_avx2())
    return Backend::Avx2;
  if (cpu_has_neon())
    return Backend::Neon;
  return Backend::Scalar;
}

std::atomic<const Dispatch *> active_dispatch{nullptr};
std::atomic<Backend> active{Backend::Scalar};

const Dispatch *dispatch_for(Backend b) {
  switch (b) {
  case Backend::Scalar:
    return &scalar_dispatch;
  case Backend::Avx2:
#ifdef HALLFORGE_WITH_AVX2
    return &avx2_dispatch;
#else
    return nullptr;
#endif
  case Backend::Neon:
#ifdef HALLFORGE_WITH_NEON
    return &neon_dispatch;
#else
    return nullptr;
#endif
  }
  return nullptr;
}

const Dispatch &current() {
  const Dispatch *d = active_dispatch.load(std::memory_order_acquire);
  if (!d) {
    Backend b = detect_backend();
    d = dispatch_for(b);
    active.store(b, std::memory_order_relaxed);
    active_dispatch.store(d, std::memory_order_release);
  }
  return *d;
}

} // namespace

Backend active_backend() {
  current();
  return active.load(std::memory_order_relaxed);
}

bool backend_supported(Backend b) {
  if (b == Backend::Scalar)
    return true;
  if (b == Backend::Avx2)
    return cpu_has_avx2();
  return cpu_has_neon();
}

void set_backend(Backend b) {
  if (!backend_supported(b))
    throw Error("kernel backend " + backend_name(b) +
                " is not supported on this CPU");
  active.store(b, std::memory_order_relaxed);
  active_dispatch.store(dispatch_for(b), std::memory_order_release);
}

std::string backend_name(Backend b) {
  switch (b) {
  case Backend::Scalar:
    return "scalar";
  case Backend::Avx2:
    return "avx2";
  case Backend::Neon:
    return "neon";
  }
  return "?";
}

void compose(const std::uint32_t *p, const std::uint32_t *q, std::uint32_t *out,
             std::size_t n) {
  current().compose(p, q, out, n);
}

void invert(const std::uint32_t *p, std::uint32_t *out, std::size_t n) {
  current().invert(p, out, n);
}

bool is_identity(const std::uint32_t *p, std::size_t n) {
  return current().is_identity(p, n);
}

bool equal(const std::uint32_t *p, const std::uint32_t *q, std::size_t n) {
  return current().equal(p, q, n);
}

} // namespace hallforge::kernels
