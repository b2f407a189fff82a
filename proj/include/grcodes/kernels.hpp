#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace grcodes::kernels {

enum class SimdLevel { Scalar, Avx2 };

std::string simd_level_name(SimdLevel level);

/// Best level this CPU supports, capped by GRCODES_SIMD=scalar in the environment.
SimdLevel detected_level();
/// Level currently used by the dispatching entry points.
SimdLevel active_level();
/// Pins the dispatch level; requesting an unsupported level falls back to Scalar.
void force_level(SimdLevel level);
/// Back to detected_level().
void reset_level();

/// Number of positions where a and b differ.
std::size_t hamming_distance(const std::uint32_t* a, const std::uint32_t* b, std::size_t n);
/// Number of positions of a equal to value.
std::size_t count_equal(const std::uint32_t* a, std::size_t n, std::uint32_t value);

namespace scalar {
std::size_t hamming_distance(const std::uint32_t* a, const std::uint32_t* b, std::size_t n);
std::size_t count_equal(const std::uint32_t* a, std::size_t n, std::uint32_t value);
}  // namespace scalar

#if defined(GRCODES_HAVE_AVX2)
namespace avx2 {
std::size_t hamming_distance(const std::uint32_t* a, const std::uint32_t* b, std::size_t n);
std::size_t count_equal(const std::uint32_t* a, std::size_t n, std::uint32_t value);
}  // namespace avx2
#endif

}  // namespace grcodes::kernels
