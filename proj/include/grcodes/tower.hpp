#pragma once

#include <memory>
#include <optional>

#include "grcodes/galois_ring.hpp"

namespace grcodes {

enum class TowerLevel { Prime = 0, Base = 1, Extension = 2 };

/// The pair Z_{p^2} <= R = GR(p^2, r) <= R^(s) = GR(p^2, rs), with the subring
/// embedding xi -> eta^(j (Q-1)/(q-1)) for the smallest admissible j (j = 1 when
/// R's modulus is the minimal polynomial of eta^((Q-1)/(q-1))).
class RingTower {
 public:
  RingTower(std::shared_ptr<const GaloisRing> base, std::shared_ptr<const GaloisRing> ext);

  /// R^(s) from the default modulus (or `ext_modulus`); R's modulus is then
  /// derived from R^(s) so that xi = eta^((Q-1)/(q-1)) exactly.
  static std::shared_ptr<const RingTower> build(std::uint32_t p, unsigned r, unsigned s,
                                                std::optional<ModPoly> ext_modulus = std::nullopt);

  const GaloisRing& base() const noexcept { return *base_; }
  const GaloisRing& ext() const noexcept { return *ext_; }
  std::shared_ptr<const GaloisRing> base_ptr() const noexcept { return base_; }
  std::shared_ptr<const GaloisRing> ext_ptr() const noexcept { return ext_; }
  unsigned s() const noexcept { return s_; }
  std::uint32_t q() const noexcept { return base_->q(); }
  std::uint32_t big_q() const noexcept { return ext_->q(); }
  /// (Q-1)/(q-1).
  std::uint64_t index_of_teichmuller() const noexcept { return cofactor_; }
  /// Exponent of eta that xi maps to.
  std::uint64_t xi_image_log() const noexcept { return xi_log_; }

  RingElem embed(const RingElem& a) const noexcept;
  bool in_base(const RingElem& x) const noexcept;
  /// Inverse of embed on its image; InvalidTower otherwise.
  RingElem restrict_to_base(const RingElem& x) const;

  FieldElem embed_field(FieldElem a) const noexcept;
  FieldElem restrict_field(FieldElem a) const;

  /// sigma_q on R^(s).
  RingElem sigma_q(const RingElem& x) const { return ext_->frobenius(x, base_->degree()); }

  /// T_R^{R^(s)} via precomputed images of the Z_{p^2}-basis.
  RingElem relative_trace(const RingElem& x) const noexcept;
  /// T_R^{R^(s)} as the sum of sigma_q conjugates, restricted back to R.
  RingElem relative_trace_by_frobenius(const RingElem& x) const;
  /// T_q^Q on residue fields.
  FieldElem field_relative_trace(FieldElem a) const;

  /// Trace from `from` down to `to`. Elements at Prime level are constants of
  /// the base ring. InvalidTower if `to` is above `from`.
  RingElem trace(const RingElem& x, TowerLevel from, TowerLevel to) const;

 private:
  std::shared_ptr<const GaloisRing> base_;
  std::shared_ptr<const GaloisRing> ext_;
  unsigned s_;
  std::uint64_t cofactor_;
  std::uint64_t xi_log_;
  std::vector<RingElem> embed_basis_;  // images of xi^i
  std::vector<RingElem> trace_basis_;  // T(eta^i) in R
};

}  // namespace grcodes
