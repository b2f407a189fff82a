#include "grcodes/finite_field.hpp"

#include <sstream>

#include "grcodes/errors.hpp"
#include "grcodes/numtheory.hpp"

namespace grcodes {

namespace {
constexpr std::uint32_t kNoLog = UINT32_MAX;
}

FiniteField::FiniteField(ModPoly primitive_modulus) : modulus_(std::move(primitive_modulus)) {
  if (!poly::is_primitive(modulus_))
    throw Error(Errc::NonPrimitiveInput,
                "field modulus " + modulus_.to_string() + " is not primitive");
  p_ = modulus_.modulus();
  n_ = static_cast<unsigned>(modulus_.degree());
  const std::uint64_t q = nt::ipow(p_, n_);
  if (q > (std::uint64_t{1} << 26)) throw Error(Errc::ScaleGuard, "finite field too large for tables");
  q_ = static_cast<std::uint32_t>(q);
  pow_p_.resize(n_ + 1);
  pow_p_[0] = 1;
  for (unsigned i = 1; i <= n_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

  // Powers of x by repeated multiplication in coordinates.
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, kNoLog);
  std::vector<std::uint32_t> cur(n_, 0);
  cur[0] = 1;
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    FieldElem e = 0;
    for (unsigned i = 0; i < n_; ++i) e += cur[i] * pow_p_[i];
    exp_[k] = e;
    if (log_[e] != kNoLog) throw Error(Errc::NonPrimitiveInput, "generator order is too small");
    log_[e] = k;
    // cur *= x modulo the monic modulus.
    std::uint32_t top = cur[n_ - 1];
    for (unsigned i = n_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (unsigned i = 0; i < n_; ++i)
      cur[i] = (cur[i] + (p_ - top) * modulus_.coeff(i)) % p_;
  }

  trace_.assign(q_, 0);
  for (FieldElem a = 0; a < q_; ++a) {
    FieldElem t = 0, x = a;
    for (unsigned i = 0; i < n_; ++i) {
      t = add(t, x);
      x = pow(x, p_);
    }
    if (t >= p_) throw Error(Errc::InvalidArgument, "trace left the prime field");
    trace_[a] = t;
  }
}

FieldElem FiniteField::from_int(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<FieldElem>(r);
}

FieldElem FiniteField::add(FieldElem a, FieldElem b) const noexcept {
  FieldElem out = 0;
  for (unsigned i = 0; i < n_; ++i) {
    std::uint32_t d = (a % p_ + b % p_) % p_;
    out += d * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return out;
}

FieldElem FiniteField::sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

FieldElem FiniteField::neg(FieldElem a) const noexcept {
  FieldElem out = 0;
  for (unsigned i = 0; i < n_; ++i) {
    std::uint32_t d = a % p_;
    out += ((p_ - d) % p_) * pow_p_[i];
    a /= p_;
  }
  return out;
}

FieldElem FiniteField::scale(FieldElem a, std::uint32_t c) const noexcept {
  FieldElem out = 0;
  c %= p_;
  for (unsigned i = 0; i < n_; ++i) {
    out += (a % p_) * c % p_ * pow_p_[i];
    a /= p_;
  }
  return out;
}

FieldElem FiniteField::mul(FieldElem a, FieldElem b) const noexcept {
  if (a == 0 || b == 0) return 0;
  std::uint64_t k = std::uint64_t{log_[a]} + log_[b];
  return exp_[k % (q_ - 1)];
}

FieldElem FiniteField::inv(FieldElem a) const {
  if (a == 0) throw Error(Errc::NotAUnit, "zero has no inverse in a field");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FieldElem FiniteField::div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

FieldElem FiniteField::pow(FieldElem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[nt::mod_mul(log_[a], e, q_ - 1)];
}

std::uint32_t FiniteField::log(FieldElem a) const {
  if (a == 0 || a >= q_) throw Error(Errc::InvalidArgument, "log of zero or out-of-range element");
  return log_[a];
}

FieldElem FiniteField::frobenius(FieldElem a, unsigned j) const noexcept {
  return pow(a, nt::ipow(p_, j % n_));
}

FieldElem FiniteField::relative_trace(FieldElem a, unsigned k) const {
  if (k == 0 || n_ % k != 0) throw Error(Errc::InvalidTower, "subfield degree must divide field degree");
  FieldElem t = 0, x = a;
  for (unsigned i = 0; i < n_ / k; ++i) {
    t = add(t, x);
    x = frobenius(x, k);
  }
  return t;
}

std::uint32_t FiniteField::subfield_trace(FieldElem a, unsigned k) const {
  if (k == 0 || n_ % k != 0) throw Error(Errc::InvalidTower, "subfield degree must divide field degree");
  if (!in_subfield(a, k)) throw Error(Errc::InvalidTower, "element is not in the requested subfield");
  FieldElem t = 0, x = a;
  for (unsigned i = 0; i < k; ++i) {
    t = add(t, x);
    x = frobenius(x, 1);
  }
  return t;
}

std::vector<std::uint32_t> FiniteField::coords(FieldElem a) const {
  std::vector<std::uint32_t> c(n_);
  for (unsigned i = 0; i < n_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

FieldElem FiniteField::from_coords(std::span<const std::uint32_t> c) const {
  if (c.size() > n_) throw Error(Errc::InvalidArgument, "too many coordinates for field element");
  FieldElem out = 0;
  for (std::size_t i = 0; i < c.size(); ++i) out += (c[i] % p_) * pow_p_[i];
  return out;
}

std::string FiniteField::to_literal(FieldElem a) const {
  std::ostringstream out;
  auto c = coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out << ',';
    out << c[i];
  }
  return out.str();
}

FieldElem FiniteField::parse_literal(const std::string& text) const {
  std::vector<std::uint32_t> c;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      long long v = std::stoll(tok);
      c.push_back(static_cast<std::uint32_t>(from_int(v)));
    } catch (const std::logic_error&) {
      throw Error(Errc::InvalidArgument, "bad field element literal '" + text + "'");
    }
  }
  return from_coords(c);
}

}  // namespace grcodes
