#include "grcodes/codes.hpp"

#include <algorithm>
#include <sstream>

#include "grcodes/errors.hpp"
#include "grcodes/numtheory.hpp"
#include "grcodes/parallel.hpp"
#include "grcodes/subspace.hpp"

namespace grcodes {

std::string beta_class_name(BetaClass c) {
  switch (c) {
    case BetaClass::UnitInS: return "unit_in_S";
    case BetaClass::UnitNotInS: return "unit_not_in_S";
    case BetaClass::Unit: return "unit";
    case BetaClass::PrimeTeichmuller: return "p_teichmuller";
    case BetaClass::Zero: return "zero";
  }
  return "?";
}

std::string symbol_class_name(SymbolClass c) {
  switch (c) {
    case SymbolClass::Unit: return "unit";
    case SymbolClass::PrimeTeichmuller: return "p_teichmuller";
    case SymbolClass::Zero: return "zero";
  }
  return "?";
}

CodeContext::CodeContext(std::shared_ptr<const RingTower> tower, SubgroupSpec spec, bool allow_large)
    : tower_(std::move(tower)), e_(spec.e) {
  const GaloisRing& E = ext();
  const FiniteField& F = E.field();
  const std::uint64_t big_q1 = big_q() - 1;
  if (!allow_large && std::uint64_t{E.q()} * E.q() > kDeskScaleLimit)
    throw Error(Errc::ScaleGuard, "Q^2 = " + std::to_string(std::uint64_t{E.q()} * E.q()) +
                                      " exceeds the exhaustive-enumeration limit 2^24 (override to force)");
  if (e_ == 0 || big_q1 % e_ != 0)
    throw Error(Errc::InvalidSubgroup, "e = " + std::to_string(e_) + " does not divide Q-1 = " + std::to_string(big_q1));
  for (auto v : spec.vbar_basis)
    if (v >= F.size()) throw Error(Errc::InvalidSubgroup, "V basis element outside F_Q");
  if (!fp_independent(F, spec.vbar_basis))
    throw Error(Errc::InvalidSubgroup, "V basis is not independent over F_p");
  f_ = big_q1 / e_;
  e_prime_ = nt::gcd(e_, tower_->index_of_teichmuller());
  vbar_basis_ = echelon_basis(F, spec.vbar_basis);
  vbar_ = span_elements(F, vbar_basis_);
  vbar_perp_basis_ = dual_subspace(F, vbar_basis_);
  cyclo_ = CyclotomicRing::get(nt::lcm(std::uint64_t{E.p_squared()}, big_q1));

  elements_.reserve(f_ * vbar_.size());
  for (std::uint64_t k = 0; k < f_; ++k) {
    const RingElem& t = E.xi_pow(e_ * k);
    for (auto v : vbar_) elements_.push_back(E.mul(t, E.add(E.one(), E.scale(E.teich_lift(v), E.p()))));
  }
  std::sort(elements_.begin(), elements_.end(),
            [&](const RingElem& a, const RingElem& b) { return E.index(a) < E.index(b); });
  std::vector<std::uint64_t> sorted_idx;
  sorted_idx.reserve(elements_.size());
  for (const auto& x : elements_) sorted_idx.push_back(E.index(x));
  if (std::adjacent_find(sorted_idx.begin(), sorted_idx.end()) != sorted_idx.end())
    throw Error(Errc::InvalidSubgroup, "subgroup enumeration produced repeated elements");
  auto position = [&](const RingElem& x) -> std::ptrdiff_t {
    auto it = std::lower_bound(sorted_idx.begin(), sorted_idx.end(), E.index(x));
    if (it == sorted_idx.end() || *it != E.index(x)) return -1;
    return it - sorted_idx.begin();
  };
  // closure under the generators eta^e and 1 + p v
  std::vector<RingElem> gens{E.xi_pow(e_)};
  for (auto v : vbar_basis_) gens.push_back(E.add(E.one(), E.scale(E.teich_lift(v), E.p())));
  for (const auto& x : elements_)
    for (const auto& g : gens)
      if (position(E.mul(x, g)) < 0) throw Error(Errc::InvalidSubgroup, "enumerated G is not closed");

  std::vector<RingElem> in_base;
  for (const auto& x : elements_)
    if (tower_->in_base(x)) in_base.push_back(x);
  l_ = in_base.size();
  std::vector<bool> covered(elements_.size(), false);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (covered[i]) continue;
    reps_.push_back(elements_[i]);
    for (const auto& h : in_base) {
      auto pos = position(E.mul(elements_[i], h));
      if (pos < 0) throw Error(Errc::InvalidSubgroup, "coset leaves G");
      covered[static_cast<std::size_t>(pos)] = true;
    }
  }

  const unsigned s = tower_->s();
  if (s % E.p() == 0) {
    s_prime_ = s / E.p();
    const unsigned k = base().degree() * *s_prime_;
    dual_in_subfield_ = std::all_of(vbar_perp_basis_.begin(), vbar_perp_basis_.end(),
                                    [&](FieldElem a) { return F.in_subfield(a, k); });
    if (dual_in_subfield_) s_set_ = span_elements(F, dual_subspace(F, vbar_perp_basis_, k));
  }
}

bool CodeContext::s_condition(const RingElem& beta) const {
  if (!dual_in_subfield_) throw Error(Errc::PreconditionViolated, "S is undefined: V-bar^perp is not inside F_{Q'}");
  const FiniteField& F = ext().field();
  const auto coords = ext().unit_coords(beta);
  const FieldElem t = F.add(F.relative_trace(coords.v, base().degree() * *s_prime_), F.one());
  return std::binary_search(s_set_.begin(), s_set_.end(), t);
}

BetaClass CodeContext::classify_beta(const RingElem& beta) const {
  const GaloisRing& E = ext();
  if (E.is_zero(beta)) return BetaClass::Zero;
  if (!E.is_unit(beta)) return BetaClass::PrimeTeichmuller;
  if (!dual_in_subfield_) return BetaClass::Unit;
  return s_condition(beta) ? BetaClass::UnitInS : BetaClass::UnitNotInS;
}

SymbolClass CodeContext::classify_symbol(const RingElem& a) const {
  if (base().is_zero(a)) return SymbolClass::Zero;
  return base().is_unit(a) ? SymbolClass::Unit : SymbolClass::PrimeTeichmuller;
}

std::vector<std::uint32_t> CodeContext::encode(const RingElem& beta) const {
  std::vector<std::uint32_t> out;
  out.reserve(elements_.size());
  for (const auto& x : elements_)
    out.push_back(static_cast<std::uint32_t>(base().index(tower_->relative_trace(ext().mul(beta, x)))));
  return out;
}

std::vector<std::uint32_t> CodeContext::encode_tilde(const RingElem& beta) const {
  std::vector<std::uint32_t> out;
  out.reserve(reps_.size());
  for (const auto& x : reps_)
    out.push_back(static_cast<std::uint32_t>(base().index(tower_->relative_trace(ext().mul(beta, x)))));
  return out;
}

std::vector<std::uint64_t> CodeContext::count_components(const RingElem& beta) const {
  std::vector<std::uint64_t> counts(base().size(), 0);
  for (auto sym : encode(beta)) ++counts[sym];
  return counts;
}

std::string CodeContext::describe() const {
  std::ostringstream out;
  out << "p=" << ext().p() << " r=" << base().degree() << " s=" << tower_->s() << " e=" << e_ << " d=" << d()
      << " n=" << n() << " e'=" << e_prime_ << " l=" << l_;
  return out.str();
}

std::uint64_t hom_weight(const GaloisRing& R, const RingElem& a) {
  if (R.is_zero(a)) return 0;
  return R.is_unit(a) ? R.q() - 1 : R.q();
}

std::uint64_t hom_weight_index(const GaloisRing& R, std::uint32_t index) {
  return hom_weight(R, R.from_index(index));
}

std::vector<std::uint64_t> WeightTable::hamming_distribution() const {
  std::uint64_t n = 0;
  if (!counts.empty())
    for (auto c : counts.front()) n += c;
  std::vector<std::uint64_t> a(n + 1, 0);
  for (auto w : hamming) ++a[w];
  return a;
}

std::map<std::vector<std::uint64_t>, std::uint64_t> WeightTable::complete_distribution() const {
  std::map<std::vector<std::uint64_t>, std::uint64_t> out;
  for (const auto& c : counts) ++out[c];
  return out;
}

namespace {

std::uint64_t min_nonzero(const std::vector<std::uint64_t>& v) {
  std::uint64_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] != 0 && (best == 0 || v[i] < best)) best = v[i];
  return best;
}

}  // namespace

std::uint64_t WeightTable::min_nonzero_hamming() const { return min_nonzero(hamming); }
std::uint64_t WeightTable::min_nonzero_hamming_tilde() const { return min_nonzero(hamming_tilde); }

WeightTable enumerate_weights(const CodeContext& ctx, unsigned threads) {
  const GaloisRing& R = ctx.base();
  const GaloisRing& E = ctx.ext();
  const std::uint64_t total = E.size();
  std::vector<std::uint64_t> sym_weight(R.size());
  for (std::uint32_t a = 0; a < R.size(); ++a) sym_weight[a] = hom_weight_index(R, a);

  WeightTable t;
  t.counts.resize(total);
  t.hamming.resize(total);
  t.hom.resize(total);
  t.hom_tilde.resize(total);
  t.hamming_tilde.resize(total);
  t.classes.resize(total);
  parallel_for(total, threads, [&](std::size_t i) {
    const RingElem beta = E.from_index(i);
    auto counts = ctx.count_components(beta);
    std::uint64_t hom = 0;
    for (std::size_t a = 0; a < counts.size(); ++a) hom += counts[a] * sym_weight[a];
    std::uint64_t hom_tilde = 0, ham_tilde = 0;
    for (auto sym : ctx.encode_tilde(beta)) {
      hom_tilde += sym_weight[sym];
      ham_tilde += sym != 0;
    }
    t.hamming[i] = ctx.n() - counts[0];
    t.hom[i] = hom;
    t.hom_tilde[i] = hom_tilde;
    t.hamming_tilde[i] = ham_tilde;
    t.classes[i] = ctx.classify_beta(beta);
    t.counts[i] = std::move(counts);
  });
  return t;
}

std::uint64_t count_distinct_codewords(const CodeContext& ctx, bool tilde, unsigned threads) {
  const GaloisRing& E = ctx.ext();
  std::vector<std::vector<std::uint32_t>> words(E.size());
  parallel_for(words.size(), threads, [&](std::size_t i) {
    words[i] = tilde ? ctx.encode_tilde(E.from_index(i)) : ctx.encode(E.from_index(i));
  });
  std::sort(words.begin(), words.end());
  return static_cast<std::uint64_t>(std::unique(words.begin(), words.end()) - words.begin());
}

std::vector<FieldElem> standard_vbar(const FiniteField& F, unsigned d) {
  if (d > F.degree())
    throw Error(Errc::InvalidSubgroup, "d = " + std::to_string(d) + " exceeds dim F_Q = " + std::to_string(F.degree()));
  std::vector<FieldElem> out;
  FieldElem mono = 1;
  for (unsigned j = 0; j < d; ++j) {
    out.push_back(mono);
    mono *= F.characteristic();
  }
  return out;
}

std::vector<FieldElem> subfield_dual_vbar(const FiniteField& F, unsigned subfield_degree, unsigned d) {
  if (d > F.degree())
    throw Error(Errc::InvalidSubgroup, "d = " + std::to_string(d) + " exceeds dim F_Q = " + std::to_string(F.degree()));
  const unsigned u_dim = F.degree() - d;
  if (u_dim > subfield_degree)
    throw Error(Errc::PreconditionViolated, "d = " + std::to_string(d) + " is below rs - rs' = " +
                                                std::to_string(F.degree() - subfield_degree) +
                                                ", so V-bar^perp cannot lie in F_{Q'}");
  auto sub = subfield_basis(F, subfield_degree);
  sub.resize(u_dim);
  return dual_subspace(F, sub);
}

}  // namespace grcodes
