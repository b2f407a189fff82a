#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grcodes {

/// Polynomial over Z/NZ, little-endian coefficients, kept trimmed (no trailing zeros).
class ModPoly {
 public:
  ModPoly() = default;
  ModPoly(std::uint32_t modulus, std::vector<std::uint32_t> coeffs);

  static ModPoly monomial(std::uint32_t modulus, std::size_t degree, std::uint32_t coeff = 1);
  static ModPoly constant(std::uint32_t modulus, std::uint32_t value);

  std::uint32_t modulus() const noexcept { return modulus_; }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }

  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  std::uint32_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::uint32_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  /// Reduce coefficients into Z/new_modulus (new_modulus must divide modulus()).
  ModPoly reduce(std::uint32_t new_modulus) const;

  /// "x^2 + x + 1" style rendering.
  std::string to_string() const;
  /// "1,1,1" (little-endian, comma separated).
  std::string to_literal() const;

  friend bool operator==(const ModPoly&, const ModPoly&) = default;

 private:
  void trim();

  std::uint32_t modulus_ = 1;
  std::vector<std::uint32_t> coeffs_;
};

namespace poly {

ModPoly add(const ModPoly& a, const ModPoly& b);
ModPoly sub(const ModPoly& a, const ModPoly& b);
ModPoly mul(const ModPoly& a, const ModPoly& b);
ModPoly scale(const ModPoly& a, std::uint32_t c);

/// Division with remainder; the divisor's leading coefficient must be a unit mod N.
void divmod(const ModPoly& a, const ModPoly& b, ModPoly& quot, ModPoly& rem);
ModPoly rem(const ModPoly& a, const ModPoly& b);

/// Extended gcd over a prime field: g = s*a + t*b with g monic.
void ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& g, ModPoly& s, ModPoly& t);

/// x^e mod m over Z/NZ (m monic).
ModPoly pow_x_mod(std::uint64_t e, const ModPoly& m);

/// True if x has multiplicative order exactly p^n - 1 modulo g over F_p (deg g = n).
bool is_primitive(const ModPoly& g);

/// Smallest primitive monic polynomial of degree n over F_p, ordered by the integer
/// value of its little-endian base-p coefficient vector.
ModPoly find_primitive_poly(std::uint32_t p, unsigned n);

/// Lift a primitive g over F_p to a monic h over Z/p^2 with h = g (mod p) and
/// h | x^(p^n - 1) - 1, by one Newton step on the coprime factorisation
/// x^(p^n-1) - 1 = g k over F_p.
ModPoly hensel_lift_basic_primitive(const ModPoly& g);

/// True if x^(q-1) = 1 modulo (p^2, h) with q = p^deg(h).
bool divides_x_pow_minus_one(const ModPoly& h, std::uint32_t p);

}  // namespace poly
}  // namespace grcodes
