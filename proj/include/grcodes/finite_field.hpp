#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "grcodes/modpoly.hpp"

namespace grcodes {

/// Element of F_{p^n}: the integer sum c_i p^i of its coordinate vector in the
/// basis 1, x, ..., x^{n-1} modulo the defining primitive polynomial.
using FieldElem = std::uint32_t;

/// F_{p^n} built from a primitive polynomial, with exp/log tables for the
/// generator (the class of x). Immutable after construction.
class FiniteField {
 public:
  explicit FiniteField(ModPoly primitive_modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return q_; }
  const ModPoly& modulus() const noexcept { return modulus_; }

  FieldElem zero() const noexcept { return 0; }
  FieldElem one() const noexcept { return 1; }
  FieldElem generator() const noexcept { return exp_[q_ > 2 ? 1 : 0]; }
  FieldElem from_int(std::int64_t value) const;

  FieldElem add(FieldElem a, FieldElem b) const noexcept;
  FieldElem sub(FieldElem a, FieldElem b) const noexcept;
  FieldElem neg(FieldElem a) const noexcept;
  FieldElem scale(FieldElem a, std::uint32_t c) const noexcept;
  FieldElem mul(FieldElem a, FieldElem b) const noexcept;
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;

  /// Generator power g^k (k taken mod q-1).
  FieldElem exp(std::uint64_t k) const noexcept { return exp_[k % (q_ - 1)]; }
  /// Discrete log base the generator; a must be nonzero.
  std::uint32_t log(FieldElem a) const;

  /// a^(p^j).
  FieldElem frobenius(FieldElem a, unsigned j) const noexcept;

  /// Absolute trace to F_p, returned as an integer in [0, p).
  std::uint32_t trace(FieldElem a) const noexcept { return trace_[a]; }

  /// True if a lies in the subfield of order p^k (k must divide n).
  bool in_subfield(FieldElem a, unsigned k) const noexcept { return frobenius(a, k) == a; }

  /// Relative trace from F_{p^n} down to its subfield F_{p^k}.
  FieldElem relative_trace(FieldElem a, unsigned k) const;

  /// Absolute trace of an element of the subfield F_{p^k} computed inside
  /// that subfield: sum of a^(p^i) for i < k, as an integer in [0, p).
  std::uint32_t subfield_trace(FieldElem a, unsigned k) const;

  /// Coordinates (little-endian) in the polynomial basis.
  std::vector<std::uint32_t> coords(FieldElem a) const;
  FieldElem from_coords(std::span<const std::uint32_t> coords) const;

  /// "c0,c1,..." literal.
  std::string to_literal(FieldElem a) const;
  FieldElem parse_literal(const std::string& text) const;

 private:
  ModPoly modulus_;
  std::uint32_t p_;
  unsigned n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> pow_p_;  // p^i
  std::vector<FieldElem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> trace_;
};

}  // namespace grcodes
