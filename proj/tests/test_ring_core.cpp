#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "grcodes/errors.hpp"
#include "grcodes/galois_ring.hpp"
#include "grcodes/modpoly.hpp"
#include "grcodes/numtheory.hpp"
#include "grcodes/tower.hpp"

using namespace grcodes;

namespace {

using Vec = std::vector<std::int64_t>;

// Naive (a*b) mod (N, h) on plain vectors; h monic of degree n.
Vec naive_mulmod(const Vec& a, const Vec& b, const Vec& h, std::int64_t N) {
  const std::size_t n = h.size() - 1;
  Vec prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % N;
  for (std::size_t d = prod.size(); d-- > n;) {
    std::int64_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) prod[d - n + j] = ((prod[d - n + j] - c * h[j]) % N + N) % N;
  }
  prod.resize(n, 0);
  return prod;
}

// Multiplicative order of x modulo (N, h), or 0 if it exceeds `cap`.
std::uint64_t naive_order_of_x(const Vec& h, std::int64_t N, std::uint64_t cap) {
  const std::size_t n = h.size() - 1;
  Vec one(n, 0), x(n, 0);
  one[0] = 1;
  if (n == 1) {
    x[0] = ((-h[0]) % N + N) % N;
  } else {
    x[1] = 1;
  }
  Vec cur = x;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (cur == one) return k;
    cur = naive_mulmod(cur, x, h, N);
  }
  return 0;
}

Vec to_vec(const ModPoly& m, std::size_t len) {
  Vec v(len, 0);
  for (std::size_t i = 0; i < len; ++i) v[i] = m.coeff(i);
  return v;
}

// Smallest monic primitive polynomial by exhaustive order computation.
Vec brute_primitive(std::int64_t p, unsigned n) {
  const auto q = nt::ipow(p, n);
  for (std::uint64_t code = 0; code < q; ++code) {
    Vec h(n + 1, 0);
    h[n] = 1;
    std::uint64_t c = code;
    for (unsigned i = 0; i < n; ++i) {
      h[i] = static_cast<std::int64_t>(c % p);
      c /= p;
    }
    if (naive_order_of_x(h, p, q - 1) == q - 1) return h;
  }
  return {};
}

}  // namespace

TEST_CASE("primitive polynomial search matches exhaustive order check") {
  CHECK(poly::find_primitive_poly(2, 1).to_string() == "x + 1");
  CHECK(poly::find_primitive_poly(2, 2).to_string() == "x^2 + x + 1");
  CHECK(poly::find_primitive_poly(3, 2).to_string() == "x^2 + x + 2");
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 2}}) {
    CAPTURE(p);
    CAPTURE(n);
    auto g = poly::find_primitive_poly(p, n);
    CHECK(to_vec(g, n + 1) == brute_primitive(p, n));
  }
}

TEST_CASE("Hensel lift is the unique basic primitive lift") {
  CHECK(poly::hensel_lift_basic_primitive(poly::find_primitive_poly(2, 2)).to_literal() == "1,1,1");
  CHECK(poly::hensel_lift_basic_primitive(poly::find_primitive_poly(2, 1)).to_literal() == "3,1");
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {5, 2}}) {
    CAPTURE(p);
    CAPTURE(n);
    const std::int64_t N = std::int64_t{p} * p;
    const auto q = nt::ipow(p, n);
    auto g = poly::find_primitive_poly(p, n);
    auto h = poly::hensel_lift_basic_primitive(g);
    // all p^n lifts g + p u, u of degree < n
    std::vector<Vec> good;
    for (std::uint64_t code = 0; code < q; ++code) {
      Vec cand = to_vec(g, n + 1);
      std::uint64_t c = code;
      for (unsigned i = 0; i < n; ++i) {
        cand[i] += static_cast<std::int64_t>(p * (c % p));
        c /= p;
      }
      if (naive_order_of_x(cand, N, q - 1) == q - 1) good.push_back(cand);
    }
    REQUIRE(good.size() == 1);
    CHECK(to_vec(h, n + 1) == good[0]);
    CHECK(poly::divides_x_pow_minus_one(h, p));
  }
}

TEST_CASE("non-primitive input is rejected") {
  CHECK_THROWS_AS(poly::hensel_lift_basic_primitive(ModPoly(2, {1, 0, 1})), Error);
  try {
    GaloisRing bad(2, 2, ModPoly(4, {3, 1, 1}));
    FAIL("accepted a non basic primitive modulus");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPrimitiveInput);
  }
}

TEST_CASE("ring arithmetic examples and naive multiplication oracle") {
  GaloisRing z4(2, 1);
  CHECK(z4.mul(z4.from_int(3), z4.from_int(3)) == z4.one());
  try {
    (void)z4.inverse(z4.from_int(2));
    FAIL("2 inverted in Z_4");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAUnit);
  }
  GaloisRing gr42(2, 2);
  CHECK(gr42.mul(gr42.xi(), gr42.mul(gr42.xi(), gr42.xi())) == gr42.one());

  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}}) {
    GaloisRing R(p, n);
    const std::int64_t N = std::int64_t{p} * p;
    Vec h = to_vec(R.modulus(), n + 1);
    std::uint64_t units = 0, ideal = 0;
    for (std::uint64_t i = 0; i < R.size(); ++i) {
      auto a = R.from_index(i);
      CHECK(R.index(a) == i);
      if (R.is_unit(a)) {
        ++units;
        CHECK(R.mul(a, R.inverse(a)) == R.one());
      } else {
        ++ideal;
      }
      Vec av(a.c.begin(), a.c.begin() + n);
      for (std::uint64_t j = 0; j < R.size(); j += 7) {
        auto b = R.from_index(j);
        Vec bv(b.c.begin(), b.c.begin() + n);
        Vec expect = naive_mulmod(av, bv, h, N);
        auto got = R.mul(a, b);
        CHECK(Vec(got.c.begin(), got.c.begin() + n) == expect);
        CHECK(R.reduce(R.add(a, b)) == R.field().add(R.reduce(a), R.reduce(b)));
        CHECK(R.reduce(got) == R.field().mul(R.reduce(a), R.reduce(b)));
      }
    }
    CHECK(units == std::uint64_t{R.q()} * (R.q() - 1));
    CHECK(ideal == R.q());
  }
}

TEST_CASE("Teichmueller set, decomposition and unit group") {
  GaloisRing z4(2, 1);
  auto d3 = z4.teichmuller_decompose(z4.from_int(3));
  CHECK(d3.first == z4.one());
  CHECK(d3.second == z4.one());
  auto d2 = z4.teichmuller_decompose(z4.from_int(2));
  CHECK(d2.first == z4.zero());
  CHECK(d2.second == z4.one());
  auto u3 = z4.unit_decompose(z4.from_int(3));
  CHECK(u3.t == z4.one());
  CHECK(u3.v == z4.one());
  CHECK_THROWS_AS(z4.unit_decompose(z4.from_int(2)), Error);

  GaloisRing gr42(2, 2);
  auto a = gr42.add(gr42.one(), gr42.scale(gr42.xi(), 2));
  CHECK(gr42.pow(a, 4) == gr42.one());
  auto da = gr42.teichmuller_decompose(a);
  CHECK(da.first == gr42.one());
  CHECK(da.second == gr42.xi());
  auto u = gr42.unit_decompose(gr42.scale(gr42.xi(), 3));
  CHECK(u.t == gr42.xi());
  CHECK(u.v == gr42.one());

  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 3}, {5, 1}}) {
    GaloisRing R(p, n);
    const auto q = R.q();
    // T: q distinct elements, closed under q-th power, xi of order exactly q-1
    std::set<std::uint64_t> teich;
    for (FieldElem t = 0; t < q; ++t) {
      auto lift = R.teich_lift(t);
      CHECK(R.reduce(lift) == t);
      CHECK(R.pow(lift, q) == lift);
      teich.insert(R.index(lift));
    }
    CHECK(teich.size() == q);
    for (std::uint64_t k = 1; k < q - 1; ++k) CHECK(R.pow(R.xi(), k) != R.one());
    CHECK(R.pow(R.xi(), q - 1) == R.one());
    // (a1, a2) -> a1 + p a2 is a bijection T x T -> R
    std::set<std::uint64_t> image;
    for (FieldElem s = 0; s < q; ++s)
      for (FieldElem t = 0; t < q; ++t) {
        auto x = R.add(R.teich_lift(s), R.scale(R.teich_lift(t), p));
        image.insert(R.index(x));
        auto d = R.teichmuller_decompose(x);
        CHECK(d.first == R.teich_lift(s));
        CHECK(d.second == R.teich_lift(t));
      }
    CHECK(image.size() == R.size());
    for (std::uint64_t i = 0; i < R.size(); ++i) {
      auto x = R.from_index(i);
      if (!R.is_unit(x)) continue;
      auto parts = R.unit_decompose(x);
      CHECK(R.mul(parts.t, R.add(R.one(), R.scale(parts.v, p))) == x);
      auto coords = R.unit_coords(x);
      CHECK(R.xi_pow(coords.log_t) == parts.t);
      CHECK(R.teich_lift(coords.v) == parts.v);
    }
  }
}

TEST_CASE("Frobenius and absolute trace") {
  GaloisRing z4(2, 1);
  CHECK(z4.frobenius(z4.from_int(3)) == z4.from_int(3));
  GaloisRing gr42(2, 2);
  CHECK(gr42.frobenius(gr42.xi()) == gr42.mul(gr42.xi(), gr42.xi()));
  CHECK(gr42.trace(gr42.xi()) == 3);
  CHECK(gr42.trace(gr42.one()) == 2);
  CHECK(gr42.field().trace(gr42.reduce(gr42.xi())) == 1);

  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {5, 2}}) {
    GaloisRing R(p, n);
    std::set<std::uint32_t> hit;
    for (std::uint64_t i = 0; i < R.size(); ++i) {
      auto a = R.from_index(i);
      CHECK(R.frobenius(a, n) == a);
      auto b = R.from_index((i * 7 + 3) % R.size());
      CHECK(R.frobenius(R.mul(a, b)) == R.mul(R.frobenius(a), R.frobenius(b)));
      CHECK(R.frobenius(R.add(a, b)) == R.add(R.frobenius(a), R.frobenius(b)));
      auto tf = R.trace_by_frobenius(a);
      CHECK(tf == R.from_int(R.trace(a)));
      // diagram: reduce(trace) = trace(reduce)
      CHECK(R.trace(a) % p == R.field().trace(R.reduce(a)));
      hit.insert(R.trace(a));
    }
    CHECK(hit.size() == std::size_t{p} * p);
  }
}

TEST_CASE("tower embedding, relative trace and transitivity") {
  auto t = RingTower::build(2, 1, 2);
  CHECK(t->embed(t->base().one()) == t->ext().one());
  CHECK(t->embed(t->base().xi()) == t->ext().one());

  auto t9 = RingTower::build(3, 1, 2);
  auto img = t9->embed(t9->base().xi());
  CHECK(img == t9->ext().xi_pow(4));
  CHECK(t9->ext().mul(img, img) == t9->ext().one());
  CHECK(img != t9->ext().one());
  CHECK(t9->ext().reduce(img) == t9->embed_field(t9->base().reduce(t9->base().xi())));
  CHECK(t9->base().reduce(t9->base().xi()) == 2);

  CHECK_THROWS_AS(t9->trace(t9->base().one(), TowerLevel::Base, TowerLevel::Extension), Error);
  CHECK_THROWS_AS(RingTower(std::make_shared<GaloisRing>(2, 2), std::make_shared<GaloisRing>(2, 3)), Error);

  struct Shape {
    std::uint32_t p;
    unsigned r, s;
  };
  for (auto sh : std::vector<Shape>{{2, 1, 2}, {2, 1, 3}, {2, 2, 2}, {3, 1, 2}, {3, 1, 3}, {2, 1, 4}}) {
    CAPTURE(sh.p);
    CAPTURE(sh.r);
    CAPTURE(sh.s);
    auto tw = RingTower::build(sh.p, sh.r, sh.s);
    const auto& R = tw->base();
    const auto& E = tw->ext();
    // embed is an injective ring map commuting with reduction
    std::set<std::uint64_t> images;
    for (std::uint64_t i = 0; i < R.size(); ++i) {
      auto a = R.from_index(i);
      auto ea = tw->embed(a);
      images.insert(E.index(ea));
      CHECK(tw->restrict_to_base(ea) == a);
      CHECK(E.reduce(ea) == tw->embed_field(R.reduce(a)));
      auto b = R.from_index((i * 5 + 1) % R.size());
      CHECK(tw->embed(R.mul(a, b)) == E.mul(ea, tw->embed(b)));
      CHECK(tw->embed(R.add(a, b)) == E.add(ea, tw->embed(b)));
    }
    CHECK(images.size() == R.size());
    // sigma_q fixes exactly the embedded subring; traces are transitive, surjective,
    // and commute with reduction
    std::set<std::uint64_t> fixed, hit;
    for (std::uint64_t i = 0; i < E.size(); ++i) {
      auto x = E.from_index(i);
      if (tw->sigma_q(x) == x) fixed.insert(i);
      CHECK(tw->in_base(x) == (tw->sigma_q(x) == x));
      auto rt = tw->relative_trace(x);
      CHECK(rt == tw->relative_trace_by_frobenius(x));
      hit.insert(R.index(rt));
      CHECK(R.trace(rt) == E.trace(x));
      CHECK(R.reduce(rt) == tw->field_relative_trace(E.reduce(x)));
      CHECK(tw->trace(x, TowerLevel::Extension, TowerLevel::Prime) == R.from_int(E.trace(x)));
      CHECK(tw->trace(x, TowerLevel::Extension, TowerLevel::Base) == rt);
    }
    CHECK(fixed == images);
    CHECK(hit.size() == R.size());
  }
}

TEST_CASE("element literals round trip") {
  GaloisRing gr42(2, 2);
  auto a = gr42.parse_literal("3,2");
  CHECK(a.c[0] == 3);
  CHECK(a.c[1] == 2);
  CHECK(gr42.to_literal(a) == "3,2");
  CHECK_THROWS_AS(gr42.parse_literal("3,2,1"), Error);
  CHECK_THROWS_AS(gr42.parse_literal("4,0"), Error);
}
