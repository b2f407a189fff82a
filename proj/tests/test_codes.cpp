#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "grcodes/code_formulas.hpp"
#include "grcodes/codes.hpp"
#include "grcodes/errors.hpp"
#include "grcodes/numtheory.hpp"
#include "grcodes/subspace.hpp"
#include "grcodes/tables.hpp"

using namespace grcodes;

namespace {

struct Instance {
  std::uint32_t p;
  unsigned r, s;
  std::uint64_t e;
  unsigned d;
};

std::shared_ptr<const CodeContext> make(const Instance& in) {
  auto tw = RingTower::build(in.p, in.r, in.s);
  return std::make_shared<const CodeContext>(tw, SubgroupSpec{in.e, standard_vbar(tw->ext().field(), in.d)});
}

std::shared_ptr<const CodeContext> make_subfield(std::uint32_t p, unsigned r, unsigned sprime, std::uint64_t e,
                                                 unsigned d) {
  auto tw = RingTower::build(p, r, p * sprime);
  return std::make_shared<const CodeContext>(
      tw, SubgroupSpec{e, subfield_dual_vbar(tw->ext().field(), r * sprime, d)});
}

// G rebuilt independently: all units of R^(s) of the form t (1 + p v) with t in
// <eta^e> and v-bar in V-bar, found by scanning R^(s).
std::set<std::uint64_t> brute_group(const CodeContext& ctx) {
  const auto& E = ctx.ext();
  std::set<FieldElem> vbar(ctx.vbar().begin(), ctx.vbar().end());
  std::set<std::uint64_t> out;
  for (std::uint64_t i = 0; i < E.size(); ++i) {
    auto x = E.from_index(i);
    if (!E.is_unit(x)) continue;
    auto c = E.unit_coords(x);
    if (c.log_t % ctx.e() == 0 && vbar.count(c.v)) out.insert(i);
  }
  return out;
}

}  // namespace

TEST_CASE("subgroup construction") {
  auto c1 = make({2, 1, 2, 1, 2});
  CHECK(c1->n() == 12);
  auto c2 = make_subfield(3, 1, 1, 2, 2);
  CHECK(c2->n() == 117);
  auto tw = RingTower::build(2, 1, 2);
  CodeContext trivial(tw, SubgroupSpec{3, {}});
  CHECK(trivial.n() == 1);
  CHECK(trivial.elements()[0] == tw->ext().one());
  CHECK_THROWS_AS(CodeContext(tw, SubgroupSpec{2, {}}), Error);
  CHECK_THROWS_AS(CodeContext(tw, SubgroupSpec{1, {1, 1}}), Error);

  for (Instance in : std::vector<Instance>{{2, 1, 2, 1, 2}, {2, 1, 2, 3, 1}, {3, 1, 2, 4, 0}, {2, 2, 2, 5, 2}, {2, 1, 3, 7, 3}}) {
    auto ctx = make(in);
    std::set<std::uint64_t> got;
    for (const auto& x : ctx->elements()) got.insert(ctx->ext().index(x));
    CHECK(got == brute_group(*ctx));
    CHECK(ctx->n() == ctx->f() * nt::ipow(in.p, in.d));
    CHECK(ctx->coset_representatives().size() * ctx->l() == ctx->n());
    CHECK(ctx->e_prime() == nt::gcd(in.e, (ctx->big_q() - 1) / (ctx->q() - 1)));
  }
}

TEST_CASE("encoding is linear and pb codewords live in M") {
  auto ctx = make({2, 1, 2, 1, 2});
  const auto& E = ctx->ext();
  const auto& R = ctx->base();
  CHECK(ctx->encode(E.zero()) == std::vector<std::uint32_t>(ctx->n(), 0));
  for (std::uint64_t i = 0; i < E.size(); ++i)
    for (std::uint64_t j = 0; j < E.size(); ++j) {
      auto b = E.from_index(i), g = E.from_index(j);
      auto cb = ctx->encode(b), cg = ctx->encode(g), sum = ctx->encode(E.add(b, g));
      for (std::size_t k = 0; k < cb.size(); ++k)
        CHECK(sum[k] == R.index(R.add(R.from_index(cb[k]), R.from_index(cg[k]))));
    }
  for (std::uint64_t i = 0; i < E.size(); ++i) {
    auto b = E.from_index(i);
    if (E.is_unit(b)) continue;
    for (auto sym : ctx->encode(b)) CHECK(!R.is_unit(R.from_index(sym)));
  }
  // R-linearity: c_{r beta} = r c_beta
  for (std::uint64_t ri = 0; ri < R.size(); ++ri) {
    auto rr = R.from_index(ri);
    for (std::uint64_t i = 0; i < E.size(); ++i) {
      auto b = E.from_index(i);
      auto cb = ctx->encode(b), crb = ctx->encode(E.mul(ctx->tower().embed(rr), b));
      for (std::size_t k = 0; k < cb.size(); ++k) CHECK(crb[k] == R.index(R.mul(rr, R.from_index(cb[k]))));
    }
  }
}

TEST_CASE("count examples on the e=1, d=2 binary instance") {
  auto ctx = make_subfield(2, 1, 1, 1, 2);
  const auto& E = ctx->ext();
  const auto& R = ctx->base();
  auto zero = ctx->count_components(E.zero());
  CHECK(zero[0] == ctx->n());
  auto pb = ctx->count_components(E.scale(E.xi(), 2));
  CHECK(pb[R.index(R.from_int(2))] == 8);
  CHECK(pb[0] == 4);
  CHECK(pb[1] + pb[3] == 0);
  for (std::uint64_t i = 0; i < E.size(); ++i) {
    auto b = E.from_index(i);
    if (ctx->classify_beta(b) == BetaClass::UnitInS) CHECK(ctx->count_components(b)[0] == 2);
  }
}

TEST_CASE("Gauss-sum component counts equal enumeration") {
  for (Instance in : std::vector<Instance>{{2, 1, 2, 1, 2},
                                           {2, 1, 2, 1, 1},
                                           {2, 1, 2, 3, 1},
                                           {3, 1, 2, 2, 1},
                                           {3, 1, 2, 4, 0},
                                           {2, 1, 3, 1, 1},
                                           {2, 1, 3, 7, 2},
                                           {2, 2, 2, 3, 1},
                                           {2, 2, 2, 5, 2},
                                           {3, 1, 2, 1, 2},
                                           {2, 1, 4, 3, 2}}) {
    CAPTURE(in.p);
    CAPTURE(in.r);
    CAPTURE(in.s);
    CAPTURE(in.e);
    CAPTURE(in.d);
    auto ctx = make(in);
    GaussSumFormulas formulas(ctx);
    const auto& E = ctx->ext();
    const auto& R = ctx->base();
    for (std::uint64_t i = 0; i < E.size(); ++i) {
      auto beta = E.from_index(i);
      auto counts = ctx->count_components(beta);
      std::uint64_t hom = 0;
      for (std::uint64_t a = 0; a < R.size(); ++a) {
        CHECK(formulas.component_count(beta, R.from_index(a)) == counts[a]);
        hom += counts[a] * hom_weight(R, R.from_index(a));
      }
      CHECK(formulas.hom_weight(beta) == hom);
    }
  }
}

TEST_CASE("complete weight table for e = 1") {
  for (auto [p, sp] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}}) {
    auto ctx = make_subfield(p, 1, sp, 1, 2);
    auto w = enumerate_weights(*ctx, 2);
    auto rep = complete_weight_table(*ctx, w);
    for (const auto& c : rep.cells) {
      CAPTURE(beta_class_name(c.beta_class));
      CAPTURE(c.column);
      CHECK(c.match);
    }
    const Rational Q(ctx->big_q()), q(ctx->q()), pd(p * p);
    CHECK(Rational(w.min_nonzero_hamming()) == Q * pd * (q - 1) / q);
    CHECK(count_distinct_codewords(*ctx, false, 2) == ctx->big_q() * ctx->big_q());
    // p^d(Q/q^2 - 1) < that + (q-1)Q/q <= (Q/q - 1)p^d < n
    Rational a = pd * (Q / (q * q) - 1), b = a + (q - 1) * Q / q, c = (Q / q - 1) * pd;
    CHECK(a < b);
    CHECK(b <= c);
    CHECK(c < Rational(ctx->n()));
  }
  auto ctx = make_subfield(2, 1, 1, 1, 2);
  auto rep = complete_weight_table(*ctx, enumerate_weights(*ctx, 1));
  for (const auto& c : rep.cells) {
    if (c.beta_class == BetaClass::PrimeTeichmuller && c.column == "a_p_teichmuller") CHECK(c.predicted == 8);
    if (c.beta_class == BetaClass::PrimeTeichmuller && c.column == "a_zero") CHECK(c.predicted == 4);
    if (c.beta_class == BetaClass::UnitInS && c.column == "count") CHECK(c.observed == std::vector<std::uint64_t>{12});
    if (c.beta_class == BetaClass::UnitNotInS && c.column == "count") CHECK(c.observed == std::vector<std::uint64_t>{0});
  }
}

TEST_CASE("table hypotheses are enforced") {
  auto e2 = make_subfield(3, 1, 1, 2, 2);
  CHECK_THROWS_AS(complete_weight_table(*e2, enumerate_weights(*e2, 2)), Error);
  auto not_multiple = make({2, 1, 3, 1, 3});
  CHECK_THROWS_AS(check_subfield_setting(*not_multiple, true, false), Error);
  auto std_d1 = make({3, 1, 3, 1, 1});
  try {
    check_subfield_setting(*std_d1, true, false);
    FAIL("expected PreconditionViolated");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::PreconditionViolated);
  }
  auto eprime = make_subfield(2, 1, 1, 3, 2);  // e = 3 = (Q-1)/(q-1), e' = 3
  CHECK_THROWS_AS(predicted_parameters(*eprime), Error);
}

TEST_CASE("parameters when e' = 1") {
  auto ctx = make_subfield(3, 1, 1, 2, 2);
  auto par = predicted_parameters(*ctx);
  CHECK(par.n == 117);
  CHECK(par.d == 81);
  CHECK(par.n_tilde == 39);
  CHECK(par.d_tilde == 27);
  auto w = enumerate_weights(*ctx, 0);
  CHECK(ctx->n() == 117);
  CHECK(w.min_nonzero_hamming() == 81);
  CHECK(ctx->coset_representatives().size() == 39);
  CHECK(w.min_nonzero_hamming_tilde() == 27);

  auto e1 = make_subfield(2, 1, 1, 1, 2);
  auto p1 = predicted_parameters(*e1);
  CHECK(p1.n == 12);
  CHECK(p1.d == 8);
  CHECK(p1.n_tilde == 6);
  CHECK(p1.d_tilde == 4);
  CHECK(e1->l() == 2);
}

TEST_CASE("homogeneous weight table for e' = 1") {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{2, 1}, {3, 1}, {3, 2}}) {
    auto ctx = make_subfield(p, 1, 1, e, 2);
    auto w = enumerate_weights(*ctx, 2);
    auto rep = hom_weight_table(*ctx, w);
    for (const auto& c : rep.cells) {
      CAPTURE(beta_class_name(c.beta_class));
      CAPTURE(c.column);
      CHECK(c.match);
    }
    if (p == 3 && e == 2)
      for (const auto& c : rep.cells)
        if (c.beta_class == BetaClass::UnitNotInS && c.column != "count")
          CHECK(c.predicted == (c.column == "w_hom" ? 243 : 81));
    if (p == 2)
      for (const auto& c : rep.cells)
        if (c.beta_class == BetaClass::UnitInS && c.column != "count")
          CHECK(c.predicted == (c.column == "w_hom" ? 12 : 6));
  }
}

TEST_CASE("homogeneous weight formula and punctured scaling") {
  for (Instance in : std::vector<Instance>{{2, 1, 2, 1, 2}, {2, 1, 2, 1, 1}, {2, 1, 2, 3, 1}, {3, 1, 2, 2, 1}, {3, 1, 2, 4, 0}}) {
    auto ctx = make(in);
    GaussSumFormulas formulas(ctx);
    auto w = enumerate_weights(*ctx, 2);
    for (std::uint64_t b = 0; b < ctx->ext().size(); ++b) {
      auto beta = ctx->ext().from_index(b);
      CHECK(formulas.hom_weight(beta) == w.hom[b]);
      CHECK(formulas.hom_weight_tilde(beta) == Rational(w.hom_tilde[b]));
      CHECK(w.hom[b] == w.hom_tilde[b] * ctx->l());
    }
  }
}

TEST_CASE("distance bounds") {
  auto ctx = make({2, 1, 2, 1, 2});
  GaussSumFormulas formulas(ctx);
  auto bd = formulas.bounds();
  CHECK(bd.m1 == Rational(-1, 3));
  for (Instance in : std::vector<Instance>{{2, 1, 2, 1, 2}, {2, 1, 2, 1, 1}, {2, 1, 2, 3, 1}, {3, 1, 2, 2, 1},
                                           {3, 1, 2, 4, 0}, {2, 1, 3, 1, 2}, {2, 2, 2, 3, 2}, {3, 1, 2, 1, 2}}) {
    auto c = make(in);
    GaussSumFormulas f(c);
    auto b = f.bounds(2);
    auto w = enumerate_weights(*c, 2);
    bool distinct = count_distinct_codewords(*c, false, 2) == c->big_q() * c->big_q();
    if (b.both_below_one) {
      CHECK(distinct);
      CHECK(b.d_h == Rational(w.min_nonzero_hamming()));
    }
    if (b.size_condition && b.cyclic_condition) CHECK(b.both_below_one);
  }
}

TEST_CASE("scaling beta by G n R* relabels the counts") {
  auto ctx = make({3, 1, 2, 2, 1});
  const auto& E = ctx->ext();
  const auto& R = ctx->base();
  for (const auto& g : ctx->elements()) {
    if (!ctx->tower().in_base(g)) continue;
    auto gr = ctx->tower().restrict_to_base(g);
    for (std::uint64_t b = 0; b < E.size(); ++b) {
      auto beta = E.from_index(b);
      auto nb = ctx->count_components(beta), ngb = ctx->count_components(E.mul(g, beta));
      for (std::uint64_t a = 0; a < R.size(); ++a) CHECK(ngb[R.index(R.mul(gr, R.from_index(a)))] == nb[a]);
    }
  }
}
