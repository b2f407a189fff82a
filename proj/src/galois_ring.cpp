#include "grcodes/galois_ring.hpp"

#include <sstream>

#include "grcodes/errors.hpp"
#include "grcodes/numtheory.hpp"

namespace grcodes {

namespace {

void check_params(std::uint32_t p, unsigned degree) {
  if (!nt::is_prime(p)) throw Error(Errc::InvalidArgument, "p must be prime");
  if (degree < 1 || degree > kMaxRingDegree)
    throw Error(Errc::InvalidArgument,
                "ring degree must be in [1, " + std::to_string(kMaxRingDegree) + "]");
  if (std::uint64_t{p} * p > UINT32_MAX / 2) throw Error(Errc::InvalidArgument, "p too large");
}

ModPoly default_modulus(std::uint32_t p, unsigned degree) {
  check_params(p, degree);
  return poly::hensel_lift_basic_primitive(poly::find_primitive_poly(p, degree));
}

ModPoly validated_modulus(std::uint32_t p, unsigned degree, ModPoly h) {
  check_params(p, degree);
  if (h.modulus() != p * p) h = ModPoly(p * p, h.coeffs());
  if (h.degree() != static_cast<int>(degree) || !h.is_monic())
    throw Error(Errc::NonPrimitiveInput, "modulus must be monic of degree " + std::to_string(degree));
  ModPoly residue = h.reduce(p);
  if (!poly::is_primitive(residue))
    throw Error(Errc::NonPrimitiveInput,
                "modulus reduces to " + residue.to_string() + ", which is not primitive over F_" +
                    std::to_string(p));
  if (!poly::divides_x_pow_minus_one(h, p))
    throw Error(Errc::NonPrimitiveInput,
                "order check failed: x^(q-1) != 1 modulo " + h.to_string() +
                    " over Z_" + std::to_string(p * p) + ", so ord(x) != q-1");
  return h;
}

}  // namespace

GaloisRing::GaloisRing(std::uint32_t p, unsigned degree)
    : p_(p), p2_(p * p), n_(degree), modulus_(default_modulus(p, degree)),
      field_(modulus_.reduce(p)) {
  init();
}

GaloisRing::GaloisRing(std::uint32_t p, unsigned degree, ModPoly modulus)
    : p_(p), p2_(p * p), n_(degree), modulus_(validated_modulus(p, degree, std::move(modulus))),
      field_(modulus_.reduce(p)) {
  init();
}

void GaloisRing::init() {
  const std::uint32_t q = field_.size();
  lift_.assign(q, RingElem{});
  RingElem x = xi();
  RingElem cur = one();
  for (std::uint32_t k = 0; k + 1 < q; ++k) {
    lift_[field_.exp(k)] = cur;
    cur = mul(cur, x);
  }
  if (cur != one()) throw Error(Errc::NonPrimitiveInput, "xi does not have order q-1");

  basis_trace_.assign(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    RingElem basis{};
    basis.c[i] = 1;
    RingElem t = trace_by_frobenius(basis);
    for (unsigned j = 1; j < n_; ++j)
      if (t.c[j] != 0) throw Error(Errc::InvalidTower, "trace left Z_{p^2}");
    basis_trace_[i] = t.c[0];
  }
}

RingElem GaloisRing::one() const noexcept {
  RingElem e{};
  e.c[0] = 1;
  return e;
}

RingElem GaloisRing::xi() const noexcept {
  RingElem e{};
  if (n_ == 1) {
    // x mod (x + h0) is -h0.
    e.c[0] = (p2_ - modulus_.coeff(0)) % p2_;
  } else {
    e.c[1] = 1;
  }
  return e;
}

RingElem GaloisRing::from_int(std::int64_t value) const noexcept {
  std::int64_t r = value % static_cast<std::int64_t>(p2_);
  if (r < 0) r += p2_;
  RingElem e{};
  e.c[0] = static_cast<std::uint32_t>(r);
  return e;
}

RingElem GaloisRing::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > n_) throw Error(Errc::InvalidArgument, "too many coefficients for ring element");
  RingElem e{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) e.c[i] = coeffs[i] % p2_;
  return e;
}

RingElem GaloisRing::from_index(std::uint64_t index) const noexcept {
  RingElem e{};
  for (unsigned i = 0; i < n_; ++i) {
    e.c[i] = static_cast<std::uint32_t>(index % p2_);
    index /= p2_;
  }
  return e;
}

std::uint64_t GaloisRing::index(const RingElem& a) const noexcept {
  std::uint64_t out = 0;
  for (unsigned i = n_; i-- > 0;) out = out * p2_ + a.c[i];
  return out;
}

RingElem GaloisRing::add(const RingElem& a, const RingElem& b) const noexcept {
  RingElem e{};
  for (unsigned i = 0; i < n_; ++i) e.c[i] = (a.c[i] + b.c[i]) % p2_;
  return e;
}

RingElem GaloisRing::sub(const RingElem& a, const RingElem& b) const noexcept {
  RingElem e{};
  for (unsigned i = 0; i < n_; ++i) e.c[i] = (a.c[i] + p2_ - b.c[i]) % p2_;
  return e;
}

RingElem GaloisRing::neg(const RingElem& a) const noexcept {
  RingElem e{};
  for (unsigned i = 0; i < n_; ++i) e.c[i] = (p2_ - a.c[i]) % p2_;
  return e;
}

RingElem GaloisRing::mul(const RingElem& a, const RingElem& b) const noexcept {
  std::array<std::uint64_t, 2 * kMaxRingDegree> t{};
  const std::uint64_t m = p2_;
  for (unsigned i = 0; i < n_; ++i) {
    if (a.c[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) t[i + j] = (t[i + j] + std::uint64_t{a.c[i]} * b.c[j]) % m;
  }
  // x^n = -(h_0 + ... + h_{n-1} x^{n-1}).
  for (unsigned d = 2 * n_ - 2; d >= n_; --d) {
    std::uint64_t c = t[d];
    if (c != 0) {
      t[d] = 0;
      for (unsigned j = 0; j < n_; ++j)
        t[d - n_ + j] = (t[d - n_ + j] + (m - c) * modulus_.coeff(j)) % m;
    }
    if (d == n_) break;
  }
  RingElem e{};
  for (unsigned i = 0; i < n_; ++i) e.c[i] = static_cast<std::uint32_t>(t[i]);
  return e;
}

RingElem GaloisRing::scale(const RingElem& a, std::uint32_t k) const noexcept {
  RingElem e{};
  for (unsigned i = 0; i < n_; ++i)
    e.c[i] = static_cast<std::uint32_t>(std::uint64_t{a.c[i]} * k % p2_);
  return e;
}

RingElem GaloisRing::pow(RingElem a, std::uint64_t e) const noexcept {
  RingElem result = one();
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

RingElem GaloisRing::inverse(const RingElem& a) const {
  if (!is_unit(a)) throw Error(Errc::NotAUnit, "element " + to_literal(a) + " lies in pR");
  // (t (1 + p v))^{-1} = t^{-1} (1 - p v).
  UnitCoords uc = unit_coords(a);
  const std::uint64_t order = q() - 1;
  RingElem t_inv = xi_pow((order - uc.log_t % order) % order);
  RingElem one_minus = sub(one(), scale(teich_lift(uc.v), p_));
  return mul(t_inv, one_minus);
}

FieldElem GaloisRing::reduce(const RingElem& a) const noexcept {
  std::array<std::uint32_t, kMaxRingDegree> c{};
  for (unsigned i = 0; i < n_; ++i) c[i] = a.c[i] % p_;
  return field_.from_coords(std::span<const std::uint32_t>(c.data(), n_));
}

TeichmullerPair GaloisRing::teichmuller_decompose(const RingElem& a) const {
  // alpha^q kills the 1 + M factor of a unit and annihilates M.
  RingElem first = pow(a, q());
  RingElem diff = sub(a, first);
  return {first, teich_lift(ideal_coord(diff))};
}

UnitParts GaloisRing::unit_decompose(const RingElem& a) const {
  if (!is_unit(a)) throw Error(Errc::NotAUnit, "element " + to_literal(a) + " lies in pR");
  UnitCoords uc = unit_coords(a);
  return {xi_pow(uc.log_t), teich_lift(uc.v)};
}

UnitCoords GaloisRing::unit_coords(const RingElem& a) const {
  FieldElem r = reduce(a);
  if (r == 0) throw Error(Errc::NotAUnit, "element " + to_literal(a) + " lies in pR");
  const std::uint64_t k = field_.log(r);
  const std::uint64_t order = q() - 1;
  RingElem rest = mul(a, xi_pow((order - k) % order));  // = 1 + p m
  rest.c[0] = (rest.c[0] + p2_ - 1) % p2_;
  return {k, ideal_coord(rest)};
}

FieldElem GaloisRing::ideal_coord(const RingElem& a) const {
  std::array<std::uint32_t, kMaxRingDegree> c{};
  for (unsigned i = 0; i < n_; ++i) {
    if (a.c[i] % p_ != 0)
      throw Error(Errc::InvalidArgument, "element " + to_literal(a) + " is not in pR");
    c[i] = a.c[i] / p_;
  }
  return field_.from_coords(std::span<const std::uint32_t>(c.data(), n_));
}

RingElem GaloisRing::frobenius(const RingElem& a, unsigned j) const {
  TeichmullerPair tp = teichmuller_decompose(a);
  RingElem first = teich_lift(field_.frobenius(reduce(tp.first), j));
  RingElem second = teich_lift(field_.frobenius(reduce(tp.second), j));
  return add(first, scale(second, p_));
}

std::uint32_t GaloisRing::trace(const RingElem& a) const noexcept {
  std::uint64_t t = 0;
  for (unsigned i = 0; i < n_; ++i) t = (t + std::uint64_t{a.c[i]} * basis_trace_[i]) % p2_;
  return static_cast<std::uint32_t>(t);
}

RingElem GaloisRing::trace_by_frobenius(const RingElem& a) const {
  RingElem t = zero();
  RingElem x = a;
  for (unsigned i = 0; i < n_; ++i) {
    t = add(t, x);
    x = frobenius(x, 1);
  }
  return t;
}

std::string GaloisRing::to_literal(const RingElem& a) const {
  std::ostringstream out;
  for (unsigned i = 0; i < n_; ++i) {
    if (i) out << ',';
    out << a.c[i];
  }
  return out.str();
}

RingElem GaloisRing::parse_literal(const std::string& text) const {
  std::vector<std::uint32_t> c;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    long long v;
    try {
      v = std::stoll(tok);
    } catch (const std::logic_error&) {
      throw Error(Errc::InvalidArgument, "bad ring element literal '" + text + "'");
    }
    if (v < 0 || v >= static_cast<long long>(p2_))
      throw Error(Errc::InvalidArgument, "coefficient " + tok + " outside [0, " + std::to_string(p2_) + ")");
    c.push_back(static_cast<std::uint32_t>(v));
  }
  return from_coeffs(c);
}

}  // namespace grcodes
