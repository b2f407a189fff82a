#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "grcodes/cyclotomic.hpp"
#include "grcodes/galois_ring.hpp"
#include "grcodes/tower.hpp"

namespace grcodes {

/// Multiplicative character omega^i phi_b of R* = T* x (1+M):
/// omega(xi) = zeta_{q-1}, phi_b(1 + p c) = zeta_p^{Tr(b c)}; b is kept as its residue.
struct MultChar {
  std::uint64_t i = 0;
  FieldElem b = 0;

  bool trivial() const noexcept { return i == 0 && b == 0; }
  friend bool operator==(const MultChar&, const MultChar&) = default;
};

/// lcm(p^2, q-1): enough roots of unity for every character value of R.
std::uint64_t character_root_order(const GaloisRing& R);

/// Exponent of zeta_m in lambda_beta(x) = zeta_{p^2}^{Tr(beta x)}.
std::uint64_t additive_exponent(const GaloisRing& R, const RingElem& beta, const RingElem& x, std::uint64_t m);
/// Exponent of zeta_m in chi(x); NotAUnit if x is in M.
std::uint64_t mult_exponent(const GaloisRing& R, const MultChar& chi, const RingElem& x, std::uint64_t m);
/// Exponent of zeta_m in omega^i(x) for x in F*.
std::uint64_t field_char_exponent(const FiniteField& F, std::uint64_t i, FieldElem x, std::uint64_t m);

CyclotomicInteger eval_additive(const GaloisRing& R, const RingElem& beta, const RingElem& x,
                                std::shared_ptr<const CyclotomicRing> ring);
CyclotomicInteger eval_mult(const GaloisRing& R, const MultChar& chi, const RingElem& x,
                            std::shared_ptr<const CyclotomicRing> ring);

/// All (q-1) q multiplicative characters of R*, ordered by (b, i).
std::vector<MultChar> all_mult_chars(const GaloisRing& R);

/// G_q(omega^i) = sum over F* of omega^i(x) zeta_p^{Tr(x)}, by enumeration.
CyclotomicInteger gauss_sum_field(const FiniteField& F, std::uint64_t i, std::shared_ptr<const CyclotomicRing> ring);

/// G(chi, lambda_beta) = sum over R* of chi(x) lambda_beta(x), by enumeration.
CyclotomicInteger gauss_sum_ring_definition(const GaloisRing& R, const MultChar& chi, const RingElem& beta,
                                            std::shared_ptr<const CyclotomicRing> ring);

/// G(chi) = G(chi, lambda_1) in closed form: 0 if b = 0, else q omega^i(b') zeta_{p^2}^{Tr(b')}
/// with b' the Teichmueller lift of -b (equal to b when p = 2).
CyclotomicInteger gauss_sum_unit(const GaloisRing& R, const MultChar& chi, std::shared_ptr<const CyclotomicRing> ring);

/// G(chi, lambda_p) in closed form: q G_q(omega^i) if b = 0, else 0.
CyclotomicInteger gauss_sum_prime(const GaloisRing& R, const MultChar& chi, std::shared_ptr<const CyclotomicRing> ring);

/// G(chi, lambda_beta) reduced to the two closed forms above.
CyclotomicInteger gauss_sum_ring_closed_form(const GaloisRing& R, const MultChar& chi, const RingElem& beta,
                                             std::shared_ptr<const CyclotomicRing> ring);

/// Restriction of a character of R^(s)* to the embedded R*.
MultChar restrict_char(const RingTower& tower, const MultChar& chi);
/// Restriction of omega_Q^i on F_Q* to F_q*: the exponent of omega_q.
std::uint64_t restrict_field_char(const RingTower& tower, std::uint64_t i);

enum class QuotientKind {
  FieldModE,           // F_Q* / <xi^e>
  FieldModEPrime,      // F_Q* / <xi^e'>
  RingModG,            // R^(s)* / G
  RingModGOnePlusM,    // R^(s)* / G(1+M)
  RingModGRStar,       // R^(s)* / G R*
};

std::string quotient_name(QuotientKind kind);

/// Characters of an ambient group trivial on a subgroup, listed explicitly.
struct QuotientCharSet {
  QuotientKind kind;
  std::uint64_t index = 0;      // ambient order / subgroup order
  std::vector<MultChar> chars;  // field kinds use b = 0
};

/// Characters of F_Q* trivial on <g^gap>, i.e. omega^{j (Q-1)/gap} for j < gap.
QuotientCharSet field_quotient(const FiniteField& F, std::uint64_t gap, QuotientKind kind);

/// Characters of R^(s)* trivial on <eta^gap> x (1 + p W) for the F_p-span W of
/// `w_basis`: (t (Q-1)/gap, b) with t < gap and b in the trace dual of W.
QuotientCharSet ring_quotient(const GaloisRing& E, std::uint64_t gap, const std::vector<FieldElem>& w_basis,
                              QuotientKind kind);

}  // namespace grcodes
