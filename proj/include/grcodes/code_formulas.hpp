#pragma once

#include <memory>
#include <vector>

#include "grcodes/characters.hpp"
#include "grcodes/codes.hpp"

namespace grcodes {

/// Result of the max-over-beta character-sum bounds on the zero counts.
struct DistanceBounds {
  Rational m1;  // max over b in F_Q* of the field character sum / (Q-1)
  Rational m2;  // max over units beta of the mixed ring/field sum
  bool both_below_one = false;
  Rational d_h;  // min{n(q-1)/q (1-M1), n(q^2-1)/q^2 (1-M2)}; meaningful when both_below_one
  bool size_condition = false;    // (Q-1) p^d / e' > Q
  bool cyclic_condition = false;  // ((Q-1)/e')^2 > Q
};

/// Component counts N_beta(a) and homogeneous weights of the trace code,
/// evaluated from Gauss sums over R^(s), R, F_Q and F_q in exact cyclotomic
/// arithmetic. Every Gauss-sum product per character is precomputed once.
class GaussSumFormulas {
 public:
  explicit GaussSumFormulas(std::shared_ptr<const CodeContext> ctx);

  const CodeContext& context() const noexcept { return *ctx_; }

  /// Exact rational value of the formula for N_beta(a).
  Rational component_count_exact(const RingElem& beta, const RingElem& a) const;
  /// The same, checked to be an integer in [0, n].
  BigInt component_count(const RingElem& beta, const RingElem& a) const;

  /// w_hom(c_beta) from the character-sum formula, checked integral.
  BigInt hom_weight(const RingElem& beta) const;
  /// w_hom(c_beta) / l as an exact rational.
  Rational hom_weight_tilde(const RingElem& beta) const;

  DistanceBounds bounds(unsigned threads = 1) const;

  /// sum over (R^(s)*/GR*)^ of chi(1/beta) G_{R^(s)}(chi), beta a unit.
  CyclotomicInteger unit_character_sum(const RingElem& beta) const;
  /// sum over (F_Q*/<xi^e'>)^ of chi(x) G_Q(chi).
  CyclotomicInteger field_character_sum(FieldElem x) const;

  std::size_t character_count() const noexcept;

 private:
  struct Term {
    MultChar chi;
    CyclotomicInteger weight;
  };

  CyclotomicInteger ring_sum(const std::vector<Term>& terms, const RingElem& x) const;
  CyclotomicInteger field_sum(const std::vector<Term>& terms, FieldElem x) const;
  BigInt to_integer(const CyclotomicInteger& z, const char* what, const RingElem& beta, const RingElem& a) const;

  std::shared_ptr<const CodeContext> ctx_;
  std::shared_ptr<const CyclotomicRing> cyclo_;
  std::vector<Term> ring_mod_g_;       // G_{R^(s)}(chi) conj(G_R(chi|R*))
  std::vector<Term> ring_mod_g1m_;     // G_{R^(s)}(chi) conj(G_q(chi|T*))
  std::vector<Term> ring_mod_grstar_;  // G_{R^(s)}(chi)
  std::vector<Term> field_mod_e_;      // G_Q(chi) conj(G_q(chi|))
  std::vector<Term> field_mod_eprime_; // G_Q(chi)
};

}  // namespace grcodes
