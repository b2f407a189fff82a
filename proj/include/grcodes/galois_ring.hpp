#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grcodes/finite_field.hpp"
#include "grcodes/modpoly.hpp"

namespace grcodes {

inline constexpr unsigned kMaxRingDegree = 16;

/// Element of GR(p^2, n): coefficients of 1, xi, ..., xi^{n-1}, each in [0, p^2).
/// Unused trailing slots are zero so defaulted comparison is canonical equality.
struct RingElem {
  std::array<std::uint32_t, kMaxRingDegree> c{};

  friend bool operator==(const RingElem&, const RingElem&) = default;
};

/// alpha = first + p * second with both parts Teichmueller representatives.
struct TeichmullerPair {
  RingElem first;
  RingElem second;
};

/// Unit alpha = t (1 + p v) with t in T* and v in T.
struct UnitParts {
  RingElem t;
  RingElem v;
};

/// Compact coordinates of a unit xi^k (1 + p v): the exponent k and the residue of v.
struct UnitCoords {
  std::uint64_t log_t;
  FieldElem v;
};

/// GR(p^2, n) = Z_{p^2}[x]/(h(x)) for a basic primitive h. Immutable after construction.
class GaloisRing {
 public:
  /// Uses the lexicographically smallest primitive polynomial, Hensel lifted.
  GaloisRing(std::uint32_t p, unsigned degree);
  /// Uses a caller-supplied modulus over Z_{p^2}; validated as basic primitive.
  GaloisRing(std::uint32_t p, unsigned degree, ModPoly modulus);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t p_squared() const noexcept { return p2_; }
  unsigned degree() const noexcept { return n_; }
  /// Residue field size q = p^n.
  std::uint32_t q() const noexcept { return field_.size(); }
  /// |R| = q^2.
  std::uint64_t size() const noexcept { return std::uint64_t{q()} * q(); }
  const ModPoly& modulus() const noexcept { return modulus_; }
  const FiniteField& field() const noexcept { return field_; }

  RingElem zero() const noexcept { return RingElem{}; }
  RingElem one() const noexcept;
  RingElem xi() const noexcept;
  RingElem from_int(std::int64_t value) const noexcept;
  RingElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  RingElem from_index(std::uint64_t index) const noexcept;
  /// Canonical order key: sum of c_i (p^2)^i.
  std::uint64_t index(const RingElem& a) const noexcept;

  RingElem add(const RingElem& a, const RingElem& b) const noexcept;
  RingElem sub(const RingElem& a, const RingElem& b) const noexcept;
  RingElem neg(const RingElem& a) const noexcept;
  RingElem mul(const RingElem& a, const RingElem& b) const noexcept;
  RingElem scale(const RingElem& a, std::uint32_t c) const noexcept;
  RingElem pow(RingElem a, std::uint64_t e) const noexcept;
  RingElem inverse(const RingElem& a) const;

  bool is_zero(const RingElem& a) const noexcept { return a == RingElem{}; }
  bool is_unit(const RingElem& a) const noexcept { return reduce(a) != 0; }

  /// Reduction modulo p onto F_q (same polynomial basis).
  FieldElem reduce(const RingElem& a) const noexcept;
  /// The unique Teichmueller element with the given residue.
  const RingElem& teich_lift(FieldElem a) const noexcept { return lift_[a]; }
  /// xi^k.
  const RingElem& xi_pow(std::uint64_t k) const noexcept { return lift_[field_.exp(k)]; }

  TeichmullerPair teichmuller_decompose(const RingElem& a) const;
  UnitParts unit_decompose(const RingElem& a) const;
  UnitCoords unit_coords(const RingElem& a) const;
  /// For a in M = pR: residue of the Teichmueller a_2 with a = p a_2.
  FieldElem ideal_coord(const RingElem& a) const;

  /// sigma_p^j.
  RingElem frobenius(const RingElem& a, unsigned j = 1) const;
  /// Absolute trace to Z_{p^2}, via the precomputed basis traces.
  std::uint32_t trace(const RingElem& a) const noexcept;
  /// Absolute trace as the sum of Frobenius conjugates.
  RingElem trace_by_frobenius(const RingElem& a) const;

  std::string to_literal(const RingElem& a) const;
  RingElem parse_literal(const std::string& text) const;

 private:
  void init();

  std::uint32_t p_;
  std::uint32_t p2_;
  unsigned n_;
  ModPoly modulus_;
  FiniteField field_;
  std::vector<RingElem> lift_;            // by residue
  std::vector<std::uint32_t> basis_trace_;  // trace(xi^i)
};

}  // namespace grcodes
