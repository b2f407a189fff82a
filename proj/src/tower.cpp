#include "grcodes/tower.hpp"

#include "grcodes/errors.hpp"
#include "grcodes/numtheory.hpp"

namespace grcodes {

namespace {

/// Evaluate the base modulus at an element of the extension ring.
RingElem eval_modulus(const GaloisRing& ext, const ModPoly& h, const RingElem& x) {
  RingElem acc = ext.zero();
  for (int i = h.degree(); i >= 0; --i)
    acc = ext.add(ext.mul(acc, x), ext.from_int(h.coeff(static_cast<std::size_t>(i))));
  return acc;
}

}  // namespace

RingTower::RingTower(std::shared_ptr<const GaloisRing> base, std::shared_ptr<const GaloisRing> ext)
    : base_(std::move(base)), ext_(std::move(ext)) {
  if (base_->p() != ext_->p())
    throw Error(Errc::IncompatibleTower, "rings have different characteristic");
  if (ext_->degree() % base_->degree() != 0)
    throw Error(Errc::IncompatibleTower, "base degree does not divide extension degree");
  s_ = ext_->degree() / base_->degree();
  const std::uint64_t q = base_->q(), big_q = ext_->q();
  cofactor_ = (big_q - 1) / (q - 1);

  // Smallest j coprime to q-1 with h(eta^(j cofactor)) = 0.
  std::optional<std::uint64_t> found;
  for (std::uint64_t j = 1; j <= q - 1 && !found; ++j) {
    if (nt::gcd(j, q - 1) != 1) continue;
    RingElem cand = ext_->xi_pow(j * cofactor_);
    if (ext_->is_zero(eval_modulus(*ext_, base_->modulus(), cand))) found = j * cofactor_;
  }
  if (!found) throw Error(Errc::IncompatibleTower, "base modulus has no Teichmueller root in extension");
  xi_log_ = *found;

  embed_basis_.resize(base_->degree());
  for (unsigned i = 0; i < base_->degree(); ++i) embed_basis_[i] = ext_->xi_pow(xi_log_ * i);

  trace_basis_.resize(ext_->degree());
  for (unsigned i = 0; i < ext_->degree(); ++i) {
    RingElem basis{};
    basis.c[i] = 1;
    trace_basis_[i] = relative_trace_by_frobenius(basis);
  }
}

std::shared_ptr<const RingTower> RingTower::build(std::uint32_t p, unsigned r, unsigned s,
                                                  std::optional<ModPoly> ext_modulus) {
  if (s < 1) throw Error(Errc::InvalidArgument, "s must be at least 1");
  if (r < 1) throw Error(Errc::InvalidArgument, "r must be at least 1");
  if (std::uint64_t{r} * s > kMaxRingDegree)
    throw Error(Errc::InvalidArgument, "extension degree rs exceeds " + std::to_string(kMaxRingDegree));
  auto ext = ext_modulus ? std::make_shared<const GaloisRing>(p, r * s, *ext_modulus)
                         : std::make_shared<const GaloisRing>(p, r * s);
  if (s == 1) return std::make_shared<const RingTower>(ext, ext);

  // Minimal polynomial over F_p of eta-bar^((Q-1)/(q-1)), then its basic primitive lift.
  const FiniteField& big = ext->field();
  const std::uint64_t q = nt::ipow(p, r);
  const FieldElem alpha = big.exp((big.size() - 1) / (q - 1));
  std::vector<FieldElem> mp{big.one()};  // coefficients in F_Q, little-endian
  FieldElem conj = alpha;
  for (unsigned i = 0; i < r; ++i) {
    std::vector<FieldElem> next(mp.size() + 1, big.zero());
    for (std::size_t k = 0; k < mp.size(); ++k) {
      next[k + 1] = big.add(next[k + 1], mp[k]);
      next[k] = big.sub(next[k], big.mul(mp[k], conj));
    }
    mp = std::move(next);
    conj = big.frobenius(conj, 1);
  }
  std::vector<std::uint32_t> coeffs(mp.size());
  for (std::size_t k = 0; k < mp.size(); ++k) {
    if (mp[k] >= p) throw Error(Errc::IncompatibleTower, "minimal polynomial not over F_p");
    coeffs[k] = mp[k];
  }
  ModPoly h = poly::hensel_lift_basic_primitive(ModPoly(p, coeffs));
  auto base = std::make_shared<const GaloisRing>(p, r, h);
  return std::make_shared<const RingTower>(base, ext);
}

RingElem RingTower::embed(const RingElem& a) const noexcept {
  RingElem out = ext_->zero();
  for (unsigned i = 0; i < base_->degree(); ++i)
    if (a.c[i] != 0) out = ext_->add(out, ext_->scale(embed_basis_[i], a.c[i]));
  return out;
}

FieldElem RingTower::embed_field(FieldElem a) const noexcept {
  if (a == 0) return 0;
  return ext_->field().exp(nt::mod_mul(base_->field().log(a), xi_log_, ext_->q() - 1));
}

FieldElem RingTower::restrict_field(FieldElem a) const {
  if (a == 0) return 0;
  const FiniteField& big = ext_->field();
  std::uint64_t k = big.log(a);
  if (k % cofactor_ != 0) throw Error(Errc::InvalidTower, "field element is not in the subfield");
  // eta^k = xi^m with xi = eta^(j cofactor):  m j = k / cofactor (mod q-1).
  const std::uint64_t order = base_->q() - 1;
  const std::uint64_t j = xi_log_ / cofactor_;
  const std::uint64_t m = order == 1 ? 0 : nt::mod_mul(k / cofactor_, nt::mod_inverse(j % order, order), order);
  return base_->field().exp(m);
}

bool RingTower::in_base(const RingElem& x) const noexcept {
  try {
    (void)restrict_to_base(x);
    return true;
  } catch (const Error&) {
    return false;
  }
}

RingElem RingTower::restrict_to_base(const RingElem& x) const {
  TeichmullerPair tp = ext_->teichmuller_decompose(x);
  FieldElem first = restrict_field(ext_->reduce(tp.first));
  FieldElem second = restrict_field(ext_->reduce(tp.second));
  return base_->add(base_->teich_lift(first), base_->scale(base_->teich_lift(second), base_->p()));
}

RingElem RingTower::relative_trace(const RingElem& x) const noexcept {
  RingElem out = base_->zero();
  for (unsigned i = 0; i < ext_->degree(); ++i)
    if (x.c[i] != 0) out = base_->add(out, base_->scale(trace_basis_[i], x.c[i]));
  return out;
}

RingElem RingTower::relative_trace_by_frobenius(const RingElem& x) const {
  RingElem t = ext_->zero();
  RingElem y = x;
  for (unsigned i = 0; i < s_; ++i) {
    t = ext_->add(t, y);
    y = sigma_q(y);
  }
  return restrict_to_base(t);
}

FieldElem RingTower::field_relative_trace(FieldElem a) const {
  return restrict_field(ext_->field().relative_trace(a, base_->degree()));
}

RingElem RingTower::trace(const RingElem& x, TowerLevel from, TowerLevel to) const {
  if (static_cast<int>(to) > static_cast<int>(from))
    throw Error(Errc::InvalidTower, "trace target is above the source ring");
  if (from == to) return x;
  if (from == TowerLevel::Extension) {
    if (to == TowerLevel::Base) return relative_trace(x);
    return base_->from_int(ext_->trace(x));
  }
  return base_->from_int(base_->trace(x));
}

}  // namespace grcodes
