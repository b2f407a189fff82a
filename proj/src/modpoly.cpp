#include "grcodes/modpoly.hpp"

#include <sstream>

#include "grcodes/errors.hpp"
#include "grcodes/numtheory.hpp"

namespace grcodes {

ModPoly::ModPoly(std::uint32_t modulus, std::vector<std::uint32_t> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  if (modulus_ == 0) throw Error(Errc::InvalidArgument, "polynomial modulus must be positive");
  for (auto& c : coeffs_) c %= modulus_;
  trim();
}

ModPoly ModPoly::monomial(std::uint32_t modulus, std::size_t degree, std::uint32_t coeff) {
  std::vector<std::uint32_t> c(degree + 1, 0);
  c[degree] = coeff;
  return ModPoly(modulus, std::move(c));
}

ModPoly ModPoly::constant(std::uint32_t modulus, std::uint32_t value) {
  return ModPoly(modulus, {value});
}

ModPoly ModPoly::reduce(std::uint32_t new_modulus) const {
  if (modulus_ % new_modulus != 0)
    throw Error(Errc::InvalidArgument, "reduction modulus must divide the coefficient modulus");
  return ModPoly(new_modulus, coeffs_);
}

void ModPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string ModPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    std::uint32_t c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c;
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

std::string ModPoly::to_literal() const {
  std::ostringstream out;
  if (coeffs_.empty()) return "0";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ',';
    out << coeffs_[i];
  }
  return out.str();
}

namespace poly {
namespace {

void check_same(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus())
    throw Error(Errc::InvalidArgument, "polynomials over different coefficient rings");
}

std::uint64_t inverse_mod(std::uint32_t a, std::uint32_t n) { return nt::mod_inverse(a, n); }

}  // namespace

ModPoly add(const ModPoly& a, const ModPoly& b) {
  check_same(a, b);
  const auto n = a.modulus();
  std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % n;
  return ModPoly(n, std::move(c));
}

ModPoly sub(const ModPoly& a, const ModPoly& b) {
  check_same(a, b);
  const auto n = a.modulus();
  std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + n - b.coeff(i)) % n;
  return ModPoly(n, std::move(c));
}

ModPoly mul(const ModPoly& a, const ModPoly& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return ModPoly(a.modulus(), {});
  const std::uint64_t n = a.modulus();
  std::vector<std::uint64_t> acc(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      acc[i + j] = (acc[i + j] + std::uint64_t{a.coeffs()[i]} * b.coeffs()[j]) % n;
  std::vector<std::uint32_t> c(acc.begin(), acc.end());
  return ModPoly(a.modulus(), std::move(c));
}

ModPoly scale(const ModPoly& a, std::uint32_t k) {
  std::vector<std::uint32_t> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = static_cast<std::uint32_t>(std::uint64_t{a.coeffs()[i]} * k % a.modulus());
  return ModPoly(a.modulus(), std::move(c));
}

void divmod(const ModPoly& a, const ModPoly& b, ModPoly& quot, ModPoly& rem_out) {
  check_same(a, b);
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division by zero");
  const std::uint32_t n = a.modulus();
  const std::uint64_t lead_inv = inverse_mod(b.leading(), n);
  std::vector<std::uint32_t> r = a.coeffs();
  const int db = b.degree();
  std::vector<std::uint32_t> q(r.size() > static_cast<std::size_t>(db) ? r.size() - db : 0, 0);
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    std::uint32_t c = static_cast<std::uint32_t>(r[i] * lead_inv % n);
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) {
      std::uint64_t sub = std::uint64_t{c} * b.coeffs()[j] % n;
      r[i - db + j] = static_cast<std::uint32_t>((r[i - db + j] + n - sub) % n);
    }
  }
  quot = ModPoly(n, std::move(q));
  if (r.size() > static_cast<std::size_t>(db)) r.resize(db);
  rem_out = ModPoly(n, std::move(r));
}

ModPoly rem(const ModPoly& a, const ModPoly& b) {
  ModPoly q, r;
  divmod(a, b, q, r);
  return r;
}

void ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& g, ModPoly& s, ModPoly& t) {
  check_same(a, b);
  const std::uint32_t n = a.modulus();
  ModPoly r0 = a, r1 = b;
  ModPoly s0 = ModPoly::constant(n, 1), s1(n, {});
  ModPoly t0(n, {}), t1 = ModPoly::constant(n, 1);
  while (!r1.is_zero()) {
    ModPoly q, r;
    divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = sub(t0, mul(q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    g = r0;
    s = s0;
    t = t0;
    return;
  }
  auto inv = static_cast<std::uint32_t>(inverse_mod(r0.leading(), n));
  g = scale(r0, inv);
  s = scale(s0, inv);
  t = scale(t0, inv);
}

ModPoly pow_x_mod(std::uint64_t e, const ModPoly& m) {
  const std::uint32_t n = m.modulus();
  ModPoly result = rem(ModPoly::constant(n, 1), m);
  ModPoly base = rem(ModPoly::monomial(n, 1), m);
  while (e != 0) {
    if (e & 1) result = rem(mul(result, base), m);
    base = rem(mul(base, base), m);
    e >>= 1;
  }
  return result;
}

bool is_primitive(const ModPoly& g) {
  const std::uint32_t p = g.modulus();
  if (!nt::is_prime(p) || !g.is_monic() || g.degree() < 1) return false;
  const std::uint64_t order = nt::ipow(p, static_cast<unsigned>(g.degree())) - 1;
  const ModPoly one = ModPoly::constant(p, 1);
  if (pow_x_mod(order, g) != one) return false;
  for (auto ell : nt::prime_factors(order))
    if (pow_x_mod(order / ell, g) == one) return false;
  // x of order p^n - 1 in F_p[x]/(g) forces that quotient to be a field.
  return g.coeff(0) != 0;
}

ModPoly find_primitive_poly(std::uint32_t p, unsigned n) {
  if (!nt::is_prime(p)) throw Error(Errc::InvalidArgument, "p must be prime");
  if (n < 1) throw Error(Errc::InvalidArgument, "degree must be at least 1");
  const std::uint64_t count = nt::ipow(p, n);
  for (std::uint64_t v = 0; v < count; ++v) {
    std::vector<std::uint32_t> c(n + 1, 0);
    std::uint64_t rest = v;
    for (unsigned i = 0; i < n; ++i) {
      c[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    c[n] = 1;
    ModPoly g(p, std::move(c));
    if (is_primitive(g)) return g;
  }
  throw Error(Errc::InvalidArgument, "no primitive polynomial found");  // unreachable
}

ModPoly hensel_lift_basic_primitive(const ModPoly& g) {
  if (!is_primitive(g))
    throw Error(Errc::NonPrimitiveInput, "polynomial " + g.to_string() + " is not primitive over F_" +
                                             std::to_string(g.modulus()));
  const std::uint32_t p = g.modulus();
  const std::uint32_t p2 = p * p;
  const unsigned n = static_cast<unsigned>(g.degree());
  const std::uint64_t big_n = nt::ipow(p, n) - 1;

  // x^N - 1 = g k over F_p, with gcd(g, k) = 1 since p does not divide N.
  ModPoly target_p = sub(ModPoly::monomial(p, big_n), ModPoly::constant(p, 1));
  ModPoly k, r;
  divmod(target_p, g, k, r);

  // Integer lifts (coefficients already in [0,p)) viewed mod p^2.
  ModPoly g2(p2, g.coeffs()), k2(p2, k.coeffs());
  ModPoly target = sub(ModPoly::monomial(p2, big_n), ModPoly::constant(p2, 1));
  ModPoly defect = sub(target, mul(g2, k2));  // divisible by p
  std::vector<std::uint32_t> e_coeffs(defect.coeffs().size());
  for (std::size_t i = 0; i < e_coeffs.size(); ++i) e_coeffs[i] = defect.coeffs()[i] / p;
  ModPoly e(p, std::move(e_coeffs));

  // Solve u k + w g = e (mod p) with deg u < n:  s g + t k = 1  =>  u = t e mod g.
  ModPoly gcd, s, t;
  ext_gcd(g, k, gcd, s, t);
  ModPoly u = rem(mul(t, e), g);

  std::vector<std::uint32_t> h(n + 1, 0);
  for (unsigned i = 0; i <= n; ++i) h[i] = (g.coeff(i) + p * u.coeff(i)) % p2;
  ModPoly lifted(p2, std::move(h));
  if (!divides_x_pow_minus_one(lifted, p))
    throw Error(Errc::NonPrimitiveInput, "Hensel step failed to produce a basic primitive lift");
  return lifted;
}

bool divides_x_pow_minus_one(const ModPoly& h, std::uint32_t p) {
  const std::uint64_t order = nt::ipow(p, static_cast<unsigned>(h.degree())) - 1;
  return pow_x_mod(order, h) == ModPoly::constant(h.modulus(), 1);
}

}  // namespace poly
}  // namespace grcodes
