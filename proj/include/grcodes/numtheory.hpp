#pragma once

#include <cstdint>
#include <vector>

namespace grcodes::nt {

bool is_prime(std::uint64_t n);

/// Integer power; throws InvalidArgument on 64-bit overflow.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m; a must be coprime to m.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

}  // namespace grcodes::nt
