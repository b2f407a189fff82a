// Built with -mavx2; only reached through the dispatcher after a CPU check.
#include <immintrin.h>

#include <bit>

#include "grcodes/kernels.hpp"

namespace grcodes::kernels::avx2 {

std::size_t hamming_distance(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
  std::size_t equal = 0, i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    auto mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(va, vb))));
    equal += std::popcount(mask);
  }
  std::size_t d = i - equal;
  for (; i < n; ++i) d += a[i] != b[i];
  return d;
}

std::size_t count_equal(const std::uint32_t* a, std::size_t n, std::uint32_t value) {
  const __m256i vv = _mm256_set1_epi32(static_cast<int>(value));
  std::size_t c = 0, i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    auto mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(va, vv))));
    c += std::popcount(mask);
  }
  for (; i < n; ++i) c += a[i] == value;
  return c;
}

}  // namespace grcodes::kernels::avx2
