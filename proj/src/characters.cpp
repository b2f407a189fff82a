#include "grcodes/characters.hpp"

#include "grcodes/errors.hpp"
#include "grcodes/numtheory.hpp"
#include "grcodes/subspace.hpp"

namespace grcodes {

namespace {

void require_divides(std::uint64_t m, std::uint64_t d, const char* what) {
  if (m % d != 0)
    throw Error(Errc::OrderMismatch, std::string("root-of-unity order ") + std::to_string(m) +
                                         " is not a multiple of " + what + " = " + std::to_string(d));
}


}  // namespace

std::uint64_t character_root_order(const GaloisRing& R) {
  return nt::lcm(std::uint64_t{R.p_squared()}, R.q() - 1);
}

std::uint64_t additive_exponent(const GaloisRing& R, const RingElem& beta, const RingElem& x, std::uint64_t m) {
  return std::uint64_t{R.trace(R.mul(beta, x))} * (m / R.p_squared()) % m;
}

std::uint64_t mult_exponent(const GaloisRing& R, const MultChar& chi, const RingElem& x, std::uint64_t m) {
  const auto c = R.unit_coords(x);
  const std::uint64_t q1 = R.q() - 1;
  std::uint64_t k = nt::mod_mul(chi.i % q1, c.log_t, q1) * (m / q1) % m;
  if (chi.b != 0) k += std::uint64_t{R.field().trace(R.field().mul(chi.b, c.v))} * (m / R.p()) % m;
  return k % m;
}

std::uint64_t field_char_exponent(const FiniteField& F, std::uint64_t i, FieldElem x, std::uint64_t m) {
  const std::uint64_t q1 = F.size() - 1;
  return nt::mod_mul(i % q1, F.log(x), q1) * (m / q1) % m;
}

CyclotomicInteger eval_additive(const GaloisRing& R, const RingElem& beta, const RingElem& x,
                                std::shared_ptr<const CyclotomicRing> ring) {
  require_divides(ring->order(), R.p_squared(), "p^2");
  const auto k = additive_exponent(R, beta, x, ring->order());
  return CyclotomicInteger::root(std::move(ring), static_cast<std::int64_t>(k));
}

CyclotomicInteger eval_mult(const GaloisRing& R, const MultChar& chi, const RingElem& x,
                            std::shared_ptr<const CyclotomicRing> ring) {
  require_divides(ring->order(), character_root_order(R), "lcm(p^2, q-1)");
  const auto k = mult_exponent(R, chi, x, ring->order());
  return CyclotomicInteger::root(std::move(ring), static_cast<std::int64_t>(k));
}

std::vector<MultChar> all_mult_chars(const GaloisRing& R) {
  std::vector<MultChar> out;
  for (FieldElem b = 0; b < R.q(); ++b)
    for (std::uint64_t i = 0; i < R.q() - 1; ++i) out.push_back({i, b});
  return out;
}

CyclotomicInteger gauss_sum_field(const FiniteField& F, std::uint64_t i, std::shared_ptr<const CyclotomicRing> ring) {
  const std::uint64_t m = ring->order();
  require_divides(m, nt::lcm(F.characteristic(), F.size() - 1), "lcm(p, q-1)");
  RootTally tally(ring);
  for (FieldElem x = 1; x < F.size(); ++x)
    tally.add(field_char_exponent(F, i, x, m) + std::uint64_t{F.trace(x)} * (m / F.characteristic()));
  return tally.value();
}

CyclotomicInteger gauss_sum_ring_definition(const GaloisRing& R, const MultChar& chi, const RingElem& beta,
                                            std::shared_ptr<const CyclotomicRing> ring) {
  const std::uint64_t m = ring->order();
  require_divides(m, character_root_order(R), "lcm(p^2, q-1)");
  RootTally tally(ring);
  for (std::uint64_t idx = 0; idx < R.size(); ++idx) {
    auto x = R.from_index(idx);
    if (!R.is_unit(x)) continue;
    tally.add(mult_exponent(R, chi, x, m) + additive_exponent(R, beta, x, m));
  }
  return tally.value();
}

CyclotomicInteger gauss_sum_unit(const GaloisRing& R, const MultChar& chi, std::shared_ptr<const CyclotomicRing> ring) {
  const std::uint64_t m = ring->order();
  require_divides(m, character_root_order(R), "lcm(p^2, q-1)");
  if (chi.b == 0) return CyclotomicInteger(std::move(ring));
  const auto& b_prime = R.teich_lift(R.field().neg(chi.b));
  const std::uint64_t k = (mult_exponent(R, {chi.i, 0}, b_prime, m) + additive_exponent(R, R.one(), b_prime, m)) % m;
  CyclotomicInteger out(std::move(ring));
  out.add_root(static_cast<std::int64_t>(k), R.q());
  return out;
}

CyclotomicInteger gauss_sum_prime(const GaloisRing& R, const MultChar& chi, std::shared_ptr<const CyclotomicRing> ring) {
  if (chi.b != 0) return CyclotomicInteger(std::move(ring));
  return gauss_sum_field(R.field(), chi.i, ring).scalar_mul(R.q());
}

CyclotomicInteger gauss_sum_ring_closed_form(const GaloisRing& R, const MultChar& chi, const RingElem& beta,
                                             std::shared_ptr<const CyclotomicRing> ring) {
  const std::uint64_t m = ring->order();
  require_divides(m, character_root_order(R), "lcm(p^2, q-1)");
  const BigInt q = R.q();
  const bool trivial = chi.i % (R.q() - 1) == 0 && chi.b == 0;
  if (R.is_zero(beta)) return CyclotomicInteger::from_int(std::move(ring), trivial ? q * (q - 1) : BigInt(0));
  if (trivial) return CyclotomicInteger::from_int(std::move(ring), R.is_unit(beta) ? BigInt(0) : BigInt(-q));
  if (R.is_unit(beta)) {
    // G(chi, lambda_beta) = conj(chi(beta)) G(chi)
    const auto k = mult_exponent(R, chi, beta, m);
    return gauss_sum_unit(R, chi, ring).mul_root(-static_cast<std::int64_t>(k));
  }
  // beta = p y with y a unit: G(chi, lambda_beta) = conj(chi(y)) G(chi, lambda_p)
  const auto& y = R.teich_lift(R.ideal_coord(beta));
  const auto k = mult_exponent(R, chi, y, m);
  return gauss_sum_prime(R, chi, ring).mul_root(-static_cast<std::int64_t>(k));
}

MultChar restrict_char(const RingTower& tower, const MultChar& chi) {
  const std::uint64_t q1 = tower.q() - 1;
  const std::uint64_t j = tower.xi_image_log() / tower.index_of_teichmuller();
  return {nt::mod_mul(chi.i % (tower.big_q() - 1) % q1, j % q1, q1) % q1,
          tower.field_relative_trace(chi.b)};
}

std::uint64_t restrict_field_char(const RingTower& tower, std::uint64_t i) {
  return restrict_char(tower, {i, 0}).i;
}

std::string quotient_name(QuotientKind kind) {
  switch (kind) {
    case QuotientKind::FieldModE: return "F_Q*/<xi^e>";
    case QuotientKind::FieldModEPrime: return "F_Q*/<xi^e'>";
    case QuotientKind::RingModG: return "R^(s)*/G";
    case QuotientKind::RingModGOnePlusM: return "R^(s)*/G(1+M)";
    case QuotientKind::RingModGRStar: return "R^(s)*/GR*";
  }
  return "?";
}

QuotientCharSet field_quotient(const FiniteField& F, std::uint64_t gap, QuotientKind kind) {
  const std::uint64_t q1 = F.size() - 1;
  if (gap == 0 || q1 % gap != 0)
    throw Error(Errc::InvalidSubgroup, std::to_string(gap) + " does not divide " + std::to_string(q1));
  QuotientCharSet out{kind, gap, {}};
  for (std::uint64_t j = 0; j < gap; ++j) out.chars.push_back({j * (q1 / gap), 0});
  return out;
}

QuotientCharSet ring_quotient(const GaloisRing& E, std::uint64_t gap, const std::vector<FieldElem>& w_basis,
                              QuotientKind kind) {
  const std::uint64_t q1 = E.q() - 1;
  if (gap == 0 || q1 % gap != 0)
    throw Error(Errc::InvalidSubgroup, std::to_string(gap) + " does not divide " + std::to_string(q1));
  const auto& F = E.field();
  const auto basis = echelon_basis(F, w_basis);
  const auto dual = span_elements(F, dual_subspace(F, basis));
  QuotientCharSet out{kind, gap * nt::ipow(F.characteristic(), F.degree() - static_cast<unsigned>(basis.size())), {}};
  for (auto b : dual)
    for (std::uint64_t t = 0; t < gap; ++t) out.chars.push_back({t * (q1 / gap), b});
  if (out.chars.size() != out.index)
    throw Error(Errc::InvalidSubgroup, "quotient character count differs from the subgroup index");
  return out;
}

}  // namespace grcodes
