#include "grcodes/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "grcodes/errors.hpp"
#include "grcodes/numtheory.hpp"

namespace grcodes {

std::shared_ptr<const CyclotomicRing> CyclotomicRing::get(std::uint64_t m) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::shared_ptr<const CyclotomicRing>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // Built outside the lock: construction recursively asks for proper divisors.
  auto ring = std::make_shared<const CyclotomicRing>(m);
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(ring)).first->second;
}

CyclotomicRing::CyclotomicRing(std::uint64_t m) : m_(m), phi_(nt::euler_phi(m)) {
  if (m == 0) throw Error(Errc::InvalidArgument, "root-of-unity order must be positive");
  // x^m - 1 divided exactly by Phi_d for every proper divisor d.
  std::vector<BigInt> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (auto d : nt::divisors(m)) {
    if (d == m) continue;
    const auto& div = CyclotomicRing::get(d)->poly_;
    const std::size_t dd = div.size() - 1;
    std::vector<BigInt> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      BigInt c = num[i];
      if (c == 0) continue;
      quot[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * div[j];
    }
    for (std::size_t j = 0; j < dd; ++j)
      if (num[j] != 0) throw Error(Errc::InvalidArgument, "cyclotomic division was not exact");
    num = std::move(quot);
  }
  if (num.size() != phi_ + 1) throw Error(Errc::InvalidArgument, "cyclotomic degree mismatch");
  poly_ = std::move(num);
  for (std::uint64_t j = 0; j < phi_; ++j)
    if (poly_[j] != 0) sparse_.emplace_back(j, poly_[j]);
}

void CyclotomicRing::reduce(std::vector<BigInt>& v) const {
  for (std::uint64_t d = v.size(); d-- > phi_;) {
    if (v[d] == 0) continue;
    BigInt c = std::move(v[d]);
    v[d] = 0;
    const std::uint64_t shift = d - phi_;
    for (const auto& [j, coef] : sparse_) v[shift + j] -= c * coef;
  }
}

CyclotomicInteger::CyclotomicInteger(std::shared_ptr<const CyclotomicRing> ring)
    : ring_(std::move(ring)), coeffs_(ring_->order(), 0) {}

CyclotomicInteger CyclotomicInteger::root(std::shared_ptr<const CyclotomicRing> ring, std::int64_t k) {
  CyclotomicInteger z(std::move(ring));
  z.coeffs_[z.wrap(k)] = 1;
  return z;
}

CyclotomicInteger CyclotomicInteger::from_int(std::shared_ptr<const CyclotomicRing> ring,
                                              const BigInt& value) {
  CyclotomicInteger z(std::move(ring));
  z.coeffs_[0] = value;
  return z;
}

std::uint64_t CyclotomicInteger::wrap(std::int64_t k) const noexcept {
  const auto m = static_cast<std::int64_t>(ring_->order());
  std::int64_t r = k % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

void CyclotomicInteger::check_same(const CyclotomicInteger& other) const {
  if (!ring_ || !other.ring_ || ring_->order() != other.ring_->order())
    throw Error(Errc::OrderMismatch, "cyclotomic orders differ (" + std::to_string(order()) + " vs " +
                                         std::to_string(other.order()) + ")");
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& other) {
  check_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (other.coeffs_[i] != 0) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& other) {
  check_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (other.coeffs_[i] != 0) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  a.check_same(b);
  const std::uint64_t m = a.order();
  CyclotomicInteger out(a.ring_);
  std::vector<std::uint64_t> nz_b;
  for (std::uint64_t j = 0; j < m; ++j)
    if (b.coeffs_[j] != 0) nz_b.push_back(j);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (auto j : nz_b) {
      std::uint64_t k = i + j;
      if (k >= m) k -= m;
      out.coeffs_[k] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

CyclotomicInteger CyclotomicInteger::operator-() const {
  CyclotomicInteger out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicInteger CyclotomicInteger::mul_root(std::int64_t k) const {
  CyclotomicInteger out(ring_);
  out.add_rotated(*this, k);
  return out;
}

void CyclotomicInteger::add_rotated(const CyclotomicInteger& other, std::int64_t k, const BigInt& scale) {
  check_same(other);
  const std::uint64_t m = order();
  const std::uint64_t shift = wrap(k);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (other.coeffs_[i] == 0) continue;
    std::uint64_t t = i + shift;
    if (t >= m) t -= m;
    if (scale == 1)
      coeffs_[t] += other.coeffs_[i];
    else
      coeffs_[t] += scale * other.coeffs_[i];
  }
}

void CyclotomicInteger::add_root(std::int64_t k, const BigInt& scale) { coeffs_[wrap(k)] += scale; }

CyclotomicInteger CyclotomicInteger::scalar_mul(const BigInt& c) const {
  CyclotomicInteger out(*this);
  for (auto& v : out.coeffs_) v *= c;
  return out;
}

CyclotomicInteger CyclotomicInteger::conjugate() const {
  CyclotomicInteger out(ring_);
  const std::uint64_t m = order();
  for (std::uint64_t i = 0; i < m; ++i)
    if (coeffs_[i] != 0) out.coeffs_[(m - i) % m] = coeffs_[i];
  return out;
}

CyclotomicInteger CyclotomicInteger::abs_square() const { return (*this * conjugate()).reduced(); }

CyclotomicInteger CyclotomicInteger::coerce(std::shared_ptr<const CyclotomicRing> target) const {
  if (target->order() % order() != 0)
    throw Error(Errc::OrderMismatch, "coercion target order must be a multiple of the source order");
  const std::uint64_t factor = target->order() / order();
  CyclotomicInteger out(std::move(target));
  for (std::uint64_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.coeffs_[i * factor] = coeffs_[i];
  return out;
}

std::vector<BigInt> CyclotomicInteger::canonical() const {
  if (!ring_) return {};
  std::vector<BigInt> v = coeffs_;
  ring_->reduce(v);
  v.resize(ring_->phi());
  return v;
}

CyclotomicInteger CyclotomicInteger::reduced() const {
  CyclotomicInteger out(*this);
  ring_->reduce(out.coeffs_);
  return out;
}

bool CyclotomicInteger::is_zero() const {
  for (const auto& c : canonical())
    if (c != 0) return false;
  return true;
}

bool CyclotomicInteger::is_rational() const {
  auto v = canonical();
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

BigInt CyclotomicInteger::as_rational_integer() const {
  auto v = canonical();
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] != 0) throw Error(Errc::NotRational, "value " + to_string() + " is not a rational integer");
  return v.empty() ? BigInt(0) : v[0];
}

std::complex<double> CyclotomicInteger::approx() const {
  std::complex<double> acc{0.0, 0.0};
  const double m = static_cast<double>(order());
  for (std::uint64_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / m;
    acc += coeffs_[i].convert_to<double>() * std::polar(1.0, angle);
  }
  return acc;
}

nlohmann::json CyclotomicInteger::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : canonical()) coeffs.push_back(bigint_json(c));
  return nlohmann::json{{"m", order()}, {"coeffs", std::move(coeffs)}};
}

std::string CyclotomicInteger::to_string() const {
  auto v = canonical();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) out << (v[i] < 0 ? " - " : " + ");
    else if (v[i] < 0) out << '-';
    first = false;
    BigInt mag = v[i] < 0 ? BigInt(-v[i]) : v[i];
    if (i == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << "z" << order() << '^' << i;
  }
  if (first) out << '0';
  return out.str();
}

bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  a.check_same(b);
  return (a - b).is_zero();
}

RootTally::RootTally(std::shared_ptr<const CyclotomicRing> ring)
    : ring_(std::move(ring)), counts_(ring_->order(), 0) {}

CyclotomicInteger RootTally::value() const {
  CyclotomicInteger z(ring_);
  for (std::size_t k = 0; k < counts_.size(); ++k)
    if (counts_[k] != 0) z.add_root(static_cast<std::int64_t>(k), BigInt(counts_[k]));
  return z;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(v);
  if (boost::multiprecision::denominator(v) != 1) out << '/' << boost::multiprecision::denominator(v);
  return out.str();
}

nlohmann::json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return nlohmann::json(v.convert_to<std::int64_t>());
  return nlohmann::json(v.str());
}

}  // namespace grcodes
