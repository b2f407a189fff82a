#include "grcodes/code_formulas.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "grcodes/errors.hpp"
#include "grcodes/parallel.hpp"
#include "grcodes/subspace.hpp"

namespace grcodes {

namespace {

bool nonzero(const CyclotomicInteger& z) {
  for (std::uint64_t k = 0; k < z.order(); ++k)
    if (z.raw(k) != 0) return true;
  return false;
}

}  // namespace

GaussSumFormulas::GaussSumFormulas(std::shared_ptr<const CodeContext> ctx)
    : ctx_(std::move(ctx)), cyclo_(ctx_->cyclotomic()) {
  const RingTower& tw = ctx_->tower();
  const GaloisRing& R = tw.base();
  const GaloisRing& E = tw.ext();
  const FiniteField& FQ = E.field();

  std::map<std::uint64_t, CyclotomicInteger> gq_cache, gbig_cache;
  auto gauss_q = [&](std::uint64_t i) -> const CyclotomicInteger& {
    auto it = gq_cache.find(i);
    if (it == gq_cache.end()) it = gq_cache.emplace(i, gauss_sum_field(R.field(), i, cyclo_)).first;
    return it->second;
  };
  auto gauss_big = [&](std::uint64_t i) -> const CyclotomicInteger& {
    auto it = gbig_cache.find(i);
    if (it == gbig_cache.end()) it = gbig_cache.emplace(i, gauss_sum_field(FQ, i, cyclo_)).first;
    return it->second;
  };
  auto keep = [](std::vector<Term>& out, const MultChar& chi, CyclotomicInteger w) {
    w = w.reduced();
    if (nonzero(w)) out.push_back({chi, std::move(w)});
  };

  std::vector<FieldElem> with_fq = ctx_->vbar_basis();
  for (auto b : subfield_basis(FQ, R.degree())) with_fq.push_back(b);
  with_fq = echelon_basis(FQ, with_fq);

  for (const auto& chi : ring_quotient(E, ctx_->e(), ctx_->vbar_basis(), QuotientKind::RingModG).chars)
    keep(ring_mod_g_, chi, gauss_sum_unit(E, chi, cyclo_) * gauss_sum_unit(R, restrict_char(tw, chi), cyclo_).conjugate());
  for (const auto& chi : ring_quotient(E, ctx_->e(), with_fq, QuotientKind::RingModGOnePlusM).chars)
    keep(ring_mod_g1m_, chi, gauss_sum_unit(E, chi, cyclo_) * gauss_q(restrict_char(tw, chi).i).conjugate());
  for (const auto& chi : ring_quotient(E, ctx_->e_prime(), with_fq, QuotientKind::RingModGRStar).chars)
    keep(ring_mod_grstar_, chi, gauss_sum_unit(E, chi, cyclo_));
  for (const auto& chi : field_quotient(FQ, ctx_->e(), QuotientKind::FieldModE).chars)
    keep(field_mod_e_, chi, gauss_big(chi.i) * gauss_q(restrict_field_char(tw, chi.i)).conjugate());
  for (const auto& chi : field_quotient(FQ, ctx_->e_prime(), QuotientKind::FieldModEPrime).chars)
    keep(field_mod_eprime_, chi, gauss_big(chi.i));
}

std::size_t GaussSumFormulas::character_count() const noexcept {
  return ring_mod_g_.size() + ring_mod_g1m_.size() + ring_mod_grstar_.size() + field_mod_e_.size() +
         field_mod_eprime_.size();
}

CyclotomicInteger GaussSumFormulas::ring_sum(const std::vector<Term>& terms, const RingElem& x) const {
  const GaloisRing& E = ctx_->ext();
  CyclotomicInteger acc(cyclo_);
  for (const auto& t : terms)
    acc.add_rotated(t.weight, static_cast<std::int64_t>(mult_exponent(E, t.chi, x, cyclo_->order())));
  return acc;
}

CyclotomicInteger GaussSumFormulas::field_sum(const std::vector<Term>& terms, FieldElem x) const {
  const FiniteField& FQ = ctx_->ext().field();
  CyclotomicInteger acc(cyclo_);
  for (const auto& t : terms)
    acc.add_rotated(t.weight, static_cast<std::int64_t>(field_char_exponent(FQ, t.chi.i, x, cyclo_->order())));
  return acc;
}

CyclotomicInteger GaussSumFormulas::unit_character_sum(const RingElem& beta) const {
  return ring_sum(ring_mod_grstar_, ctx_->ext().inverse(beta));
}

CyclotomicInteger GaussSumFormulas::field_character_sum(FieldElem x) const {
  return field_sum(field_mod_eprime_, x);
}

BigInt GaussSumFormulas::to_integer(const CyclotomicInteger& z, const char* what, const RingElem& beta,
                                    const RingElem& a) const {
  try {
    return z.as_rational_integer();
  } catch (const Error&) {
    throw Error(Errc::NotRational, std::string(what) + " for beta = " + ctx_->ext().to_literal(beta) +
                                       ", a = " + ctx_->base().to_literal(a) + " is not rational: " + z.to_string());
  }
}

Rational GaussSumFormulas::component_count_exact(const RingElem& beta, const RingElem& a) const {
  const RingTower& tw = ctx_->tower();
  const GaloisRing& R = tw.base();
  const GaloisRing& E = tw.ext();
  const FiniteField& FQ = E.field();
  const BigInt n = ctx_->n();
  const BigInt q = R.q();
  const BigInt Q = E.q();

  if (E.is_zero(beta)) return R.is_zero(a) ? Rational(n) : Rational(0);

  if (!E.is_unit(beta)) {
    const FieldElem b = E.ideal_coord(beta);
    if (R.is_unit(a)) return 0;
    if (R.is_zero(a)) {
      const BigInt s = to_integer(field_sum(field_mod_eprime_, FQ.inv(b)), "zero-count field sum", beta, a);
      return Rational(n, q) + Rational(n * (q - 1) * s, q * (Q - 1));
    }
    const FieldElem c = tw.embed_field(R.ideal_coord(a));
    const BigInt s = to_integer(field_sum(field_mod_e_, FQ.div(c, b)), "field Gauss-sum product", beta, a);
    return Rational(n, q) + Rational(n * s, q * (Q - 1));
  }

  const RingElem beta_inv = E.inverse(beta);
  const FieldElem beta1 = E.reduce(beta);
  CyclotomicInteger bracket(cyclo_);
  if (R.is_unit(a)) {
    bracket += ring_sum(ring_mod_g_, E.mul(tw.embed(a), beta_inv));
    bracket += field_sum(field_mod_e_, FQ.div(tw.embed_field(R.reduce(a)), beta1)).scalar_mul(Q);
  } else if (!R.is_zero(a)) {
    const RingElem a2 = tw.embed(R.teich_lift(R.ideal_coord(a)));
    bracket += ring_sum(ring_mod_g1m_, E.mul(a2, beta_inv)).scalar_mul(q);
    bracket += field_sum(field_mod_eprime_, FQ.inv(beta1)).scalar_mul(Q * (q - 1));
  } else {
    bracket += ring_sum(ring_mod_grstar_, beta_inv).scalar_mul(q * (q - 1));
    bracket += field_sum(field_mod_eprime_, FQ.inv(beta1)).scalar_mul(Q * (q - 1));
  }
  const BigInt s = to_integer(bracket, "unit-beta bracket", beta, a);
  return Rational(n, q * q) + Rational(n * s, q * q * Q * (Q - 1));
}

BigInt GaussSumFormulas::component_count(const RingElem& beta, const RingElem& a) const {
  const Rational v = component_count_exact(beta, a);
  const std::string where = " for beta = " + ctx_->ext().to_literal(beta) + ", a = " + ctx_->base().to_literal(a);
  if (boost::multiprecision::denominator(v) != 1)
    throw Error(Errc::NonIntegralCount, "formula gives " + to_string(v) + where);
  const BigInt k = boost::multiprecision::numerator(v);
  if (k < 0) throw Error(Errc::NegativeCount, "formula gives " + to_string(k) + where);
  if (k > ctx_->n()) throw Error(Errc::CountOutOfRange, "formula gives " + to_string(k) + " > n" + where);
  return k;
}

BigInt GaussSumFormulas::hom_weight(const RingElem& beta) const {
  const GaloisRing& E = ctx_->ext();
  const BigInt n = ctx_->n();
  const BigInt q = ctx_->q();
  const BigInt Q = E.q();
  if (E.is_zero(beta)) return 0;
  Rational w;
  if (E.is_unit(beta)) {
    const BigInt s = to_integer(unit_character_sum(beta), "unit character sum", beta, ctx_->base().zero());
    w = Rational((q - 1) * n) - Rational(n * (q - 1) * s, Q * (Q - 1));
  } else {
    const FieldElem b = E.ideal_coord(beta);
    const BigInt s = to_integer(field_character_sum(E.field().inv(b)), "field character sum", beta, ctx_->base().zero());
    w = Rational((q - 1) * n) - Rational(n * (q - 1) * s, Q - 1);
  }
  if (boost::multiprecision::denominator(w) != 1)
    throw Error(Errc::NonIntegralCount, "homogeneous weight formula gives " + to_string(w) + " for beta = " +
                                            E.to_literal(beta));
  return boost::multiprecision::numerator(w);
}

Rational GaussSumFormulas::hom_weight_tilde(const RingElem& beta) const {
  return Rational(hom_weight(beta), BigInt(ctx_->l()));
}

DistanceBounds GaussSumFormulas::bounds(unsigned threads) const {
  const GaloisRing& E = ctx_->ext();
  const FiniteField& FQ = E.field();
  const BigInt n = ctx_->n();
  const BigInt q = ctx_->q();
  const BigInt Q = E.q();
  DistanceBounds out;

  std::vector<Rational> m1_vals(FQ.size() - 1);
  parallel_for(m1_vals.size(), threads, [&](std::size_t i) {
    const FieldElem b = static_cast<FieldElem>(i + 1);
    const BigInt s = to_integer(field_sum(field_mod_eprime_, b), "M1 sum", E.zero(), ctx_->base().zero());
    m1_vals[i] = Rational(s, Q - 1);
  });
  out.m1 = *std::max_element(m1_vals.begin(), m1_vals.end());

  std::vector<std::optional<Rational>> m2_vals(E.size());
  parallel_for(E.size(), threads, [&](std::size_t i) {
    const RingElem beta = E.from_index(i);
    if (!E.is_unit(beta)) return;
    const BigInt s1 = to_integer(unit_character_sum(beta), "M2 ring sum", beta, ctx_->base().zero());
    const BigInt s2 = to_integer(field_sum(field_mod_eprime_, FQ.inv(E.reduce(beta))), "M2 field sum", beta,
                                 ctx_->base().zero());
    m2_vals[i] = Rational(q * s1, (q + 1) * Q * (Q - 1)) + Rational(s2, (q + 1) * (Q - 1));
  });
  bool first = true;
  for (const auto& v : m2_vals) {
    if (!v) continue;
    if (first || *v > out.m2) out.m2 = *v;
    first = false;
  }

  out.both_below_one = out.m1 < 1 && out.m2 < 1;
  const Rational d1 = Rational(n * (q - 1), q) * (1 - out.m1);
  const Rational d2 = Rational(n * (q * q - 1), q * q) * (1 - out.m2);
  out.d_h = d1 < d2 ? d1 : d2;

  const BigInt ep = ctx_->e_prime();
  const BigInt pd = boost::multiprecision::pow(BigInt(E.p()), ctx_->d());
  out.size_condition = (Q - 1) * pd > Q * ep;
  out.cyclic_condition = (Q - 1) * (Q - 1) > Q * ep * ep;
  return out;
}

}  // namespace grcodes
