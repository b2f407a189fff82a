#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grcodes/cyclotomic.hpp"
#include "grcodes/tower.hpp"

namespace grcodes {

/// G = <eta^e> x (1 + pV) inside R^(s)*, V the Teichmueller lift of span(vbar_basis).
struct SubgroupSpec {
  std::uint64_t e = 1;
  std::vector<FieldElem> vbar_basis;
};

/// Exhaustive enumeration refuses Q^2 above this unless explicitly allowed.
inline constexpr std::uint64_t kDeskScaleLimit = std::uint64_t{1} << 24;

enum class BetaClass { UnitInS, UnitNotInS, Unit, PrimeTeichmuller, Zero };
enum class SymbolClass { Unit, PrimeTeichmuller, Zero };

std::string beta_class_name(BetaClass c);
std::string symbol_class_name(SymbolClass c);

/// The trace code c_beta = (T(beta x))_{x in G} and its coset-punctured companion.
/// Immutable after construction; every per-beta method is a pure function.
class CodeContext {
 public:
  CodeContext(std::shared_ptr<const RingTower> tower, SubgroupSpec spec, bool allow_large = false);

  const RingTower& tower() const noexcept { return *tower_; }
  std::shared_ptr<const RingTower> tower_ptr() const noexcept { return tower_; }
  const GaloisRing& base() const noexcept { return tower_->base(); }
  const GaloisRing& ext() const noexcept { return tower_->ext(); }

  std::uint64_t e() const noexcept { return e_; }
  std::uint64_t f() const noexcept { return f_; }
  /// dim V over F_p.
  unsigned d() const noexcept { return static_cast<unsigned>(vbar_basis_.size()); }
  std::uint64_t n() const noexcept { return elements_.size(); }
  /// gcd(e, (Q-1)/(q-1)).
  std::uint64_t e_prime() const noexcept { return e_prime_; }
  std::uint64_t q() const noexcept { return tower_->q(); }
  std::uint64_t big_q() const noexcept { return tower_->big_q(); }

  /// Echelon basis of V-bar, and all of its elements (sorted).
  const std::vector<FieldElem>& vbar_basis() const noexcept { return vbar_basis_; }
  const std::vector<FieldElem>& vbar() const noexcept { return vbar_; }
  /// Basis of the trace dual of V-bar in F_Q.
  const std::vector<FieldElem>& vbar_perp_basis() const noexcept { return vbar_perp_basis_; }

  /// Elements of G in canonical order.
  const std::vector<RingElem>& elements() const noexcept { return elements_; }

  /// lcm(p^2, Q-1): root-of-unity order used by every character sum of this code.
  std::shared_ptr<const CyclotomicRing> cyclotomic() const noexcept { return cyclo_; }

  /// |G n R*| and the smallest element of each coset of G n R* in G.
  std::uint64_t l() const noexcept { return l_; }
  const std::vector<RingElem>& coset_representatives() const noexcept { return reps_; }

  /// s' = s/p when p divides s.
  std::optional<unsigned> s_prime() const noexcept { return s_prime_; }
  /// True when s = p s' and the dual of V-bar lies in F_{Q'}.
  bool dual_in_subfield() const noexcept { return dual_in_subfield_; }
  /// S: the dual of V-bar^perp inside F_{Q'} (sorted); empty unless dual_in_subfield().
  const std::vector<FieldElem>& s_set() const noexcept { return s_set_; }
  /// Whether T_{Q'}^Q(beta_2 bar) + 1 lies in S for a unit beta = beta_1 (1 + p beta_2).
  bool s_condition(const RingElem& beta) const;

  BetaClass classify_beta(const RingElem& beta) const;
  SymbolClass classify_symbol(const RingElem& a) const;

  /// Symbols of c_beta as canonical indices of R.
  std::vector<std::uint32_t> encode(const RingElem& beta) const;
  /// Symbols of the punctured codeword over the coset representatives.
  std::vector<std::uint32_t> encode_tilde(const RingElem& beta) const;
  /// N_beta(a) for every a in R (indexed canonically), by direct tally.
  std::vector<std::uint64_t> count_components(const RingElem& beta) const;

  std::string describe() const;

 private:
  std::shared_ptr<const RingTower> tower_;
  std::uint64_t e_, f_, e_prime_;
  std::vector<FieldElem> vbar_basis_, vbar_, vbar_perp_basis_;
  std::vector<RingElem> elements_;
  std::shared_ptr<const CyclotomicRing> cyclo_;
  std::uint64_t l_ = 0;
  std::vector<RingElem> reps_;
  std::optional<unsigned> s_prime_;
  bool dual_in_subfield_ = false;
  std::vector<FieldElem> s_set_;
};

/// Homogeneous weight on R: q-1 on units, q on pT*, 0 at 0.
std::uint64_t hom_weight(const GaloisRing& R, const RingElem& a);
std::uint64_t hom_weight_index(const GaloisRing& R, std::uint32_t index);

/// Per-beta enumeration results over all of R^(s), indexed by canonical beta index.
struct WeightTable {
  std::vector<std::vector<std::uint64_t>> counts;  // N_beta(a)
  std::vector<std::uint64_t> hamming;              // w_H(c_beta)
  std::vector<std::uint64_t> hom;                  // w_hom(c_beta)
  std::vector<std::uint64_t> hom_tilde;            // w_hom(c~_beta)
  std::vector<std::uint64_t> hamming_tilde;        // w_H(c~_beta)
  std::vector<BetaClass> classes;

  /// A_i for i = 0..n.
  std::vector<std::uint64_t> hamming_distribution() const;
  /// Complete weight distribution: count vector -> number of codewords.
  std::map<std::vector<std::uint64_t>, std::uint64_t> complete_distribution() const;
  std::uint64_t min_nonzero_hamming() const;
  std::uint64_t min_nonzero_hamming_tilde() const;
};

WeightTable enumerate_weights(const CodeContext& ctx, unsigned threads);

/// Number of distinct codewords of C (or of the punctured code).
std::uint64_t count_distinct_codewords(const CodeContext& ctx, bool tilde, unsigned threads);

/// V-bar spanned by the first d monomials 1, x, ..., x^{d-1} of F_Q.
std::vector<FieldElem> standard_vbar(const FiniteField& F, unsigned d);
/// V-bar = U^perp where U is spanned by the first rs-d powers of a generator of
/// F_{Q'}; then V-bar^perp = U lies in F_{Q'} as the e=1 / e'=1 tables require.
std::vector<FieldElem> subfield_dual_vbar(const FiniteField& F, unsigned subfield_degree, unsigned d);

}  // namespace grcodes
