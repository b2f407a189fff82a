#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "grcodes/gray.hpp"
#include "grcodes/kernels.hpp"
#include "grcodes/subspace.hpp"
#include "grcodes/tables.hpp"

using namespace grcodes;

namespace {

std::shared_ptr<const CodeContext> subfield_code(std::uint32_t p, unsigned r, unsigned sprime, std::uint64_t e,
                                                 unsigned d) {
  auto tw = RingTower::build(p, r, p * sprime);
  return std::make_shared<const CodeContext>(
      tw, SubgroupSpec{e, subfield_dual_vbar(tw->ext().field(), r * sprime, d)});
}

std::uint64_t hamming(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

}  // namespace

TEST_CASE("kernel levels agree") {
  std::mt19937_64 rng(7);
  std::vector<kernels::SimdLevel> levels{kernels::SimdLevel::Scalar, kernels::SimdLevel::Avx2};
  for (std::size_t n : {0, 1, 7, 8, 9, 15, 16, 17, 63, 64, 65, 1000, 4099}) {
    for (std::uint32_t alphabet : {2u, 3u, 16u}) {
      std::vector<std::uint32_t> a(n), b(n);
      for (auto& x : a) x = rng() % alphabet;
      for (auto& x : b) x = rng() % alphabet;
      std::uint64_t naive_d = 0, naive_c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        naive_d += a[i] != b[i];
        naive_c += a[i] == 1;
      }
      for (auto lvl : levels) {
        kernels::force_level(lvl);
        CHECK(kernels::hamming_distance(a.data(), b.data(), n) == naive_d);
        CHECK(kernels::count_equal(a.data(), n, 1) == naive_c);
      }
#if defined(GRCODES_HAVE_AVX2)
      if (kernels::detected_level() == kernels::SimdLevel::Avx2) {
        CHECK(kernels::avx2::hamming_distance(a.data(), b.data(), n) == kernels::scalar::hamming_distance(a.data(), b.data(), n));
        CHECK(kernels::avx2::count_equal(a.data(), n, 0) == kernels::scalar::count_equal(a.data(), n, 0));
      }
#endif
    }
  }
  kernels::reset_level();
}

TEST_CASE("homogeneous weight on small rings") {
  GaloisRing z4(2, 1), z9(3, 1);
  CHECK(hom_weight(z4, z4.zero()) == 0);
  CHECK(hom_weight(z4, z4.from_int(2)) == 2);
  CHECK(hom_weight(z4, z4.from_int(1)) == 1);
  CHECK(hom_weight(z4, z4.from_int(3)) == 1);
  CHECK(hom_weight(z9, z9.from_int(3)) == 3);
  CHECK(hom_weight(z9, z9.from_int(2)) == 2);
}

TEST_CASE("Gray map on Z_4") {
  GaloisRing z4(2, 1);
  GrayMap psi(z4);
  CHECK(psi.map(z4.zero()) == std::vector<std::uint32_t>{0, 0});
  CHECK(psi.map(z4.from_int(1)) == std::vector<std::uint32_t>{0, 1});
  CHECK(psi.map(z4.from_int(2)) == std::vector<std::uint32_t>{1, 1});
  CHECK(psi.map(z4.from_int(3)) == std::vector<std::uint32_t>{1, 0});
  CHECK(psi.map_word({1, 2}) == std::vector<std::uint32_t>{0, 1, 1, 1});
}

TEST_CASE("Gray map is an isometry onto the affine code") {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}}) {
    GaloisRing R(p, r);
    GrayMap psi(R);
    std::set<std::vector<std::uint32_t>> image;
    for (std::uint64_t x = 0; x < R.size(); ++x) {
      image.insert(psi.map(R.from_index(x)));
      for (std::uint64_t y = 0; y < R.size(); ++y) {
        auto diff = R.sub(R.from_index(x), R.from_index(y));
        CHECK(hamming(psi.map(R.from_index(x)), psi.map(R.from_index(y))) == hom_weight(R, diff));
      }
    }
    // affine functions built directly: x -> a x + b, with F_q listed 0 then powers of the generator
    const FiniteField& F = R.field();
    std::set<std::vector<std::uint32_t>> rm;
    for (FieldElem a = 0; a < F.size(); ++a)
      for (FieldElem b = 0; b < F.size(); ++b) {
        std::vector<std::uint32_t> w{b};
        FieldElem g = F.one();
        for (std::uint32_t k = 0; k + 1 < F.size(); ++k, g = F.mul(g, F.generator())) w.push_back(F.add(F.mul(a, g), b));
        rm.insert(w);
      }
    CHECK(image.size() == R.size());
    CHECK(image == rm);
    auto ac = affine_code(F);
    CHECK(std::set<std::vector<std::uint32_t>>(ac.begin(), ac.end()) == rm);
  }
}

TEST_CASE("Gray map isometry on random words") {
  GaloisRing R(3, 2);
  GrayMap psi(R);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::uint32_t> v(13), u(13), diff(13);
    std::uint64_t hw = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = rng() % R.size();
      u[i] = rng() % R.size();
      hw += hom_weight(R, R.sub(R.from_index(v[i]), R.from_index(u[i])));
    }
    CHECK(hamming(psi.map_word(v), psi.map_word(u)) == hw);
  }
}

TEST_CASE("two-distance images") {
  auto ctx = subfield_code(2, 1, 1, 1, 2);
  auto img = analyze_gray_image(*ctx, false, 2);
  CHECK(img.length == 24);
  CHECK(img.distinct == 16);
  CHECK(img.distances.size() == 2);
  CHECK(img.distances.count(12) == 1);
  CHECK(img.distances.count(16) == 1);
  CHECK(img.min_distance == 12);
  CHECK(img.two_distance);
  std::uint64_t pairs = 0;
  for (auto [d, c] : img.distances) pairs += c;
  CHECK(pairs == 120);

  auto tl = analyze_gray_image(*ctx, true, 3);
  CHECK(tl.length == 12);
  CHECK(tl.distinct == 16);
  CHECK(tl.distances.count(6) == 1);
  CHECK(tl.distances.count(8) == 1);
  CHECK(tl.min_distance == 6);
  CHECK(tl.two_distance);

  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{3, 1}, {3, 2}}) {
    auto c = subfield_code(p, 1, 1, e, 2);
    auto w = enumerate_weights(*c, 2);
    auto a = analyze_gray_image(*c, false, 0);
    std::map<std::uint64_t, std::uint64_t> hom;
    for (auto x : w.hom) ++hom[x];
    CHECK(a.weights == hom);
    CHECK(a.distinct == c->big_q() * c->big_q());
    CHECK(a.two_distance);
    const std::uint64_t Q = c->big_q(), q = c->q(), pd = p * p;
    CHECK(a.min_distance == Q * (q - 1) * (pd - 1) / e);
    auto b = analyze_gray_image(*c, true, 0);
    CHECK(b.length == (Q - 1) * pd / (q - 1));
    CHECK(b.two_distance);
    CHECK(b.min_distance == Q * (pd - 1) / q);
  }
}

TEST_CASE("Gray analysis does not depend on the worker count") {
  auto ctx = subfield_code(3, 1, 1, 2, 2);
  auto a = analyze_gray_image(*ctx, false, 1);
  auto b = analyze_gray_image(*ctx, false, 5);
  CHECK(a.distances == b.distances);
  CHECK(a.weights == b.weights);
}
