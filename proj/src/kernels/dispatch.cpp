#include <atomic>
#include <cstdlib>
#include <cstring>

#include "grcodes/kernels.hpp"

namespace grcodes::kernels {

namespace scalar {

std::size_t hamming_distance(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < n; ++i) d += a[i] != b[i];
  return d;
}

std::size_t count_equal(const std::uint32_t* a, std::size_t n, std::uint32_t value) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += a[i] == value;
  return c;
}

}  // namespace scalar

namespace {

bool cpu_has_avx2() {
#if defined(GRCODES_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<int>& level_slot() {
  static std::atomic<int> slot{static_cast<int>(detected_level())};
  return slot;
}

}  // namespace

std::string simd_level_name(SimdLevel level) { return level == SimdLevel::Avx2 ? "avx2" : "scalar"; }

SimdLevel detected_level() {
  const char* env = std::getenv("GRCODES_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return SimdLevel::Scalar;
  return cpu_has_avx2() ? SimdLevel::Avx2 : SimdLevel::Scalar;
}

SimdLevel active_level() { return static_cast<SimdLevel>(level_slot().load(std::memory_order_relaxed)); }

void force_level(SimdLevel level) {
  if (level == SimdLevel::Avx2 && !cpu_has_avx2()) level = SimdLevel::Scalar;
  level_slot().store(static_cast<int>(level), std::memory_order_relaxed);
}

void reset_level() { level_slot().store(static_cast<int>(detected_level()), std::memory_order_relaxed); }

std::size_t hamming_distance(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
#if defined(GRCODES_HAVE_AVX2)
  if (active_level() == SimdLevel::Avx2) return avx2::hamming_distance(a, b, n);
#endif
  return scalar::hamming_distance(a, b, n);
}

std::size_t count_equal(const std::uint32_t* a, std::size_t n, std::uint32_t value) {
#if defined(GRCODES_HAVE_AVX2)
  if (active_level() == SimdLevel::Avx2) return avx2::count_equal(a, n, value);
#endif
  return scalar::count_equal(a, n, value);
}

}  // namespace grcodes::kernels
