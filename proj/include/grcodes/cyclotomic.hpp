#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace grcodes {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Z[zeta_m]: holds m, phi(m) and the cyclotomic polynomial Phi_m.
/// Instances are shared through a process-wide cache and never mutated.
class CyclotomicRing {
 public:
  static std::shared_ptr<const CyclotomicRing> get(std::uint64_t m);

  std::uint64_t order() const noexcept { return m_; }
  std::uint64_t phi() const noexcept { return phi_; }
  /// Dense little-endian coefficients of Phi_m (length phi + 1).
  const std::vector<BigInt>& cyclotomic_poly() const noexcept { return poly_; }

  /// Reduce a length-m exponent vector modulo Phi_m in place; afterwards only
  /// the first phi(m) entries can be nonzero.
  void reduce(std::vector<BigInt>& v) const;

  explicit CyclotomicRing(std::uint64_t m);

 private:
  std::uint64_t m_;
  std::uint64_t phi_;
  std::vector<BigInt> poly_;
  std::vector<std::pair<std::uint64_t, BigInt>> sparse_;  // nonzero terms below the leading one
};

/// Exact element of Z[zeta_m], stored as a length-m vector over the exponents of
/// zeta_m (group-algebra form). Equality is equality after reduction modulo Phi_m.
class CyclotomicInteger {
 public:
  CyclotomicInteger() = default;
  explicit CyclotomicInteger(std::shared_ptr<const CyclotomicRing> ring);

  static CyclotomicInteger root(std::shared_ptr<const CyclotomicRing> ring, std::int64_t k);
  static CyclotomicInteger from_int(std::shared_ptr<const CyclotomicRing> ring, const BigInt& value);

  const std::shared_ptr<const CyclotomicRing>& ring() const noexcept { return ring_; }
  std::uint64_t order() const noexcept { return ring_ ? ring_->order() : 0; }
  /// Raw group-algebra coefficient of zeta^k.
  const BigInt& raw(std::uint64_t k) const { return coeffs_[k]; }

  CyclotomicInteger& operator+=(const CyclotomicInteger& other);
  CyclotomicInteger& operator-=(const CyclotomicInteger& other);
  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);
  CyclotomicInteger operator-() const;

  /// Multiply by zeta^k.
  CyclotomicInteger mul_root(std::int64_t k) const;
  /// this += scale * zeta^k * other  (cheap rotate-and-add).
  void add_rotated(const CyclotomicInteger& other, std::int64_t k, const BigInt& scale = 1);
  /// this += scale * zeta^k.
  void add_root(std::int64_t k, const BigInt& scale = 1);

  CyclotomicInteger scalar_mul(const BigInt& c) const;
  /// Complex conjugation: zeta^k -> zeta^-k.
  CyclotomicInteger conjugate() const;
  /// z * conj(z).
  CyclotomicInteger abs_square() const;
  /// Image in Z[zeta_m'] for m | m'.
  CyclotomicInteger coerce(std::shared_ptr<const CyclotomicRing> target) const;

  /// Canonical representative: reduced modulo Phi_m, length phi(m).
  std::vector<BigInt> canonical() const;
  /// Same value, stored in canonical form.
  CyclotomicInteger reduced() const;

  bool is_zero() const;
  bool is_rational() const;
  /// The rational integer this element equals; NotRational otherwise.
  BigInt as_rational_integer() const;

  /// Approximate complex value, for human-readable magnitude printouts only.
  std::complex<double> approx() const;

  /// {"m": m, "coeffs": [...canonical...]}; coefficients beyond 64 bits are strings.
  nlohmann::json to_json() const;
  std::string to_string() const;

  friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b);

 private:
  void check_same(const CyclotomicInteger& other) const;
  std::uint64_t wrap(std::int64_t k) const noexcept;

  std::shared_ptr<const CyclotomicRing> ring_;
  std::vector<BigInt> coeffs_;
};

/// Accumulates sums of roots of unity as exact 64-bit exponent counts; every
/// count is bounded by the number of terms added.
class RootTally {
 public:
  explicit RootTally(std::shared_ptr<const CyclotomicRing> ring);
  void add(std::uint64_t k) noexcept { ++counts_[k % counts_.size()]; }
  void add(std::uint64_t k, std::int64_t times) noexcept { counts_[k % counts_.size()] += times; }
  CyclotomicInteger value() const;

 private:
  std::shared_ptr<const CyclotomicRing> ring_;
  std::vector<std::int64_t> counts_;
};

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);
nlohmann::json bigint_json(const BigInt& v);

}  // namespace grcodes
