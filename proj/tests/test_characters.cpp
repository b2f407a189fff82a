#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "grcodes/characters.hpp"
#include "grcodes/errors.hpp"
#include "grcodes/numtheory.hpp"
#include "grcodes/subspace.hpp"

using namespace grcodes;

namespace {

// Brute-force annihilator of span(basis) inside the subfield of degree k.
std::vector<FieldElem> brute_dual(const FiniteField& F, const std::vector<FieldElem>& basis, unsigned k) {
  auto a = span_elements(F, basis);
  std::vector<FieldElem> out;
  for (FieldElem y = 0; y < F.size(); ++y) {
    if (!F.in_subfield(y, k)) continue;
    bool ok = true;
    for (auto x : a) ok = ok && F.subfield_trace(F.mul(x, y), k) == 0;
    if (ok) out.push_back(y);
  }
  return out;
}

}  // namespace

TEST_CASE("dual subspace against brute force") {
  GaloisRing gr42(2, 2);
  const auto& F4 = gr42.field();
  CHECK(dual_subspace(F4, std::vector<FieldElem>{1, 2}).empty());
  CHECK(span_elements(F4, dual_subspace(F4, std::vector<FieldElem>{})).size() == 4);
  CHECK(span_elements(F4, dual_subspace(F4, std::vector<FieldElem>{1})) == std::vector<FieldElem>{0, 1});

  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 2}, {2, 6}, {3, 3}}) {
    GaloisRing R(p, n);
    const auto& F = R.field();
    for (unsigned k = 1; k <= n; ++k) {
      if (n % k) continue;
      auto sub = subfield_basis(F, k);
      CHECK(fp_independent(F, sub));
      for (std::size_t d = 0; d <= sub.size(); ++d) {
        // several subspaces of dimension d: span of d shifted basis products
        for (FieldElem mult : {FieldElem{1}, sub.back()}) {
          std::vector<FieldElem> basis;
          for (std::size_t j = 0; j < d; ++j) basis.push_back(F.mul(sub[j], mult));
          if (fp_rank(F, basis) != d) continue;
          auto dual = dual_subspace(F, basis, k);
          CHECK(dual.size() + d == k);
          CHECK(span_elements(F, dual) == brute_dual(F, basis, k));
        }
      }
    }
  }
}

TEST_CASE("character evaluation examples") {
  GaloisRing z4(2, 1);
  auto r4 = CyclotomicRing::get(character_root_order(z4));
  CHECK(r4->order() == 4);
  CHECK(eval_additive(z4, z4.one(), z4.one(), r4) == CyclotomicInteger::root(r4, 1));
  CHECK(eval_additive(z4, z4.zero(), z4.from_int(3), r4) == CyclotomicInteger::from_int(r4, 1));
  CHECK(eval_mult(z4, {0, 1}, z4.from_int(3), r4) == CyclotomicInteger::from_int(r4, -1));
  CHECK_THROWS_AS(eval_mult(z4, {0, 1}, z4.from_int(2), r4), Error);

  GaloisRing gr42(2, 2);
  auto r12 = CyclotomicRing::get(character_root_order(gr42));
  CHECK(eval_additive(gr42, gr42.one(), gr42.xi(), r12) == CyclotomicInteger::root(r12, 9));
  CHECK(eval_mult(gr42, {1, 0}, gr42.xi(), r12) == CyclotomicInteger::root(r12, 4));
  CHECK(all_mult_chars(gr42).size() == 12);
  CHECK(all_mult_chars(z4).size() == 2);
}

TEST_CASE("characters are homomorphisms and satisfy orthogonality") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 3}}) {
    GaloisRing R(p, n);
    const std::uint64_t m = character_root_order(R);
    auto ring = CyclotomicRing::get(m);
    std::vector<RingElem> units;
    for (std::uint64_t i = 0; i < R.size(); ++i)
      if (R.is_unit(R.from_index(i))) units.push_back(R.from_index(i));
    for (std::uint64_t bi = 0; bi < R.size(); ++bi) {
      auto beta = R.from_index(bi);
      RootTally tally(ring);
      for (std::uint64_t xi = 0; xi < R.size(); ++xi) {
        auto x = R.from_index(xi);
        tally.add(additive_exponent(R, beta, x, m));
        auto y = R.from_index((xi * 5 + 2) % R.size());
        CHECK((additive_exponent(R, beta, x, m) + additive_exponent(R, beta, y, m)) % m ==
              additive_exponent(R, beta, R.add(x, y), m));
      }
      CHECK(tally.value().as_rational_integer() == (R.is_zero(beta) ? BigInt(R.size()) : BigInt(0)));
    }
    std::set<std::vector<std::uint64_t>> distinct;
    for (const auto& chi : all_mult_chars(R)) {
      RootTally tally(ring);
      std::vector<std::uint64_t> values;
      for (std::size_t u = 0; u < units.size(); ++u) {
        const auto k = mult_exponent(R, chi, units[u], m);
        values.push_back(k);
        tally.add(k);
        const auto& v = units[(u * 7 + 1) % units.size()];
        CHECK((k + mult_exponent(R, chi, v, m)) % m == mult_exponent(R, chi, R.mul(units[u], v), m));
      }
      distinct.insert(values);
      CHECK(tally.value().as_rational_integer() == (chi.trivial() ? BigInt(units.size()) : BigInt(0)));
    }
    CHECK(distinct.size() == units.size());
  }
}

TEST_CASE("field Gauss sums") {
  GaloisRing z4(2, 1);
  auto r2 = CyclotomicRing::get(2);
  CHECK(gauss_sum_field(z4.field(), 0, r2).as_rational_integer() == -1);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 1}}) {
    GaloisRing R(p, n);
    const auto& F = R.field();
    auto ring = CyclotomicRing::get(nt::lcm(p, F.size() - 1));
    CHECK(gauss_sum_field(F, 0, ring).as_rational_integer() == -1);
    for (std::uint64_t i = 1; i < F.size() - 1; ++i)
      CHECK(gauss_sum_field(F, i, ring).abs_square().as_rational_integer() == F.size());
  }
}

TEST_CASE("closed-form Gauss sums equal the defining sums") {
  GaloisRing z4(2, 1);
  auto r4 = CyclotomicRing::get(4);
  CHECK(gauss_sum_ring_definition(z4, {0, 0}, z4.zero(), r4).as_rational_integer() == 2);
  CHECK(gauss_sum_ring_definition(z4, {0, 0}, z4.from_int(2), r4).as_rational_integer() == -2);
  CHECK(gauss_sum_ring_definition(z4, {0, 0}, z4.one(), r4).as_rational_integer() == 0);
  CHECK(gauss_sum_ring_closed_form(z4, {0, 1}, z4.one(), r4) == CyclotomicInteger::root(r4, 1).scalar_mul(2));
  CHECK(gauss_sum_ring_closed_form(z4, {0, 1}, z4.from_int(2), r4).is_zero());

  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 3}}) {
    CAPTURE(p);
    CAPTURE(n);
    GaloisRing R(p, n);
    auto ring = CyclotomicRing::get(character_root_order(R));
    std::size_t pairs = 0;
    for (const auto& chi : all_mult_chars(R)) {
      if (!chi.trivial()) CHECK(gauss_sum_ring_closed_form(R, chi, R.zero(), ring).is_zero());
      for (std::uint64_t bi = 0; bi < R.size(); ++bi) {
        auto beta = R.from_index(bi);
        CHECK(gauss_sum_ring_closed_form(R, chi, beta, ring) == gauss_sum_ring_definition(R, chi, beta, ring));
        ++pairs;
      }
    }
    CHECK(pairs == std::uint64_t{R.q()} * (R.q() - 1) * R.size());
  }
}

TEST_CASE("restriction to the subring") {
  struct Shape {
    std::uint32_t p;
    unsigned r, s;
  };
  for (auto sh : std::vector<Shape>{{2, 1, 2}, {3, 1, 2}, {2, 2, 2}, {2, 1, 3}}) {
    auto tw = RingTower::build(sh.p, sh.r, sh.s);
    const auto& R = tw->base();
    const auto& E = tw->ext();
    const std::uint64_t m = nt::lcm(character_root_order(E), character_root_order(R));
    for (const auto& chi : all_mult_chars(E)) {
      auto res = restrict_char(*tw, chi);
      for (std::uint64_t i = 0; i < R.size(); ++i) {
        auto x = R.from_index(i);
        if (!R.is_unit(x)) continue;
        CHECK(mult_exponent(R, res, x, m) == mult_exponent(E, chi, tw->embed(x), m));
      }
      auto fr = restrict_field_char(*tw, chi.i);
      for (FieldElem a = 1; a < R.q(); ++a)
        CHECK(field_char_exponent(R.field(), fr, a, m) == field_char_exponent(E.field(), chi.i, tw->embed_field(a), m));
    }
  }
}

TEST_CASE("quotient character sets") {
  GaloisRing gr42(2, 2);
  CHECK(field_quotient(gr42.field(), 1, QuotientKind::FieldModE).chars.size() == 1);
  CHECK(field_quotient(gr42.field(), 3, QuotientKind::FieldModE).chars.size() == 3);
  CHECK_THROWS_AS(field_quotient(gr42.field(), 2, QuotientKind::FieldModE), Error);
  auto full = ring_quotient(gr42, 1, {1, 2}, QuotientKind::RingModG);
  REQUIRE(full.chars.size() == 1);
  CHECK(full.chars[0].trivial());

  GaloisRing R(3, 2);
  const std::uint64_t m = character_root_order(R);
  const auto& F = R.field();
  for (std::uint64_t gap : {1u, 2u, 4u, 8u}) {
    for (const auto& w : std::vector<std::vector<FieldElem>>{{}, {1}, {F.generator()}, {1, F.generator()}}) {
      auto set = ring_quotient(R, gap, w, QuotientKind::RingModG);
      const std::uint64_t sub_order = (R.q() - 1) / gap * nt::ipow(3, static_cast<unsigned>(w.size()));
      CHECK(set.chars.size() * sub_order == std::uint64_t{R.q()} * (R.q() - 1));
      for (const auto& chi : set.chars) {
        CHECK(mult_exponent(R, chi, R.xi_pow(gap), m) == 0);
        for (auto v : w) CHECK(mult_exponent(R, chi, R.add(R.one(), R.scale(R.teich_lift(v), 3)), m) == 0);
      }
    }
  }
}
