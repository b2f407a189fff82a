#include "grcodes/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "grcodes/characters.hpp"
#include "grcodes/code_formulas.hpp"
#include "grcodes/errors.hpp"
#include "grcodes/gray.hpp"
#include "grcodes/numtheory.hpp"
#include "grcodes/parallel.hpp"
#include "grcodes/tables.hpp"

namespace grcodes {

namespace {

template <typename T>
std::string list(const std::vector<T>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

std::string multiset(const std::map<std::uint64_t, std::uint64_t>& m) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto [k, c] : m) {
    out << (first ? "" : ",") << k << ':' << c;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string flag(bool v) { return v ? "true" : "false"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string char_id(const GaloisRing& R, const MultChar& chi) {
  return "chi(i=" + std::to_string(chi.i) + ",b=" + R.field().to_literal(chi.b) + ")";
}

std::string observed_values(const std::vector<std::uint64_t>& v) {
  return v.size() == 1 ? str(v[0]) : list(v);
}

void add_table(VerificationReport& rep, const TableReport& table, const std::string& anchor) {
  std::map<BetaClass, std::uint64_t> sizes;
  for (const auto& c : table.cells)
    if (c.column == "count") sizes[c.beta_class] = c.observed.at(0);
  for (const auto& c : table.cells) {
    if (c.column != "count" && sizes[c.beta_class] == 0) continue;  // empty class: nothing to compare
    rep.add(beta_class_name(c.beta_class) + "/" + c.column, anchor, to_string(c.predicted),
            observed_values(c.observed));
  }
}

// ---- ring-level suites ----

VerificationReport gauss_closed_form(const RingTower& tw, unsigned threads) {
  const GaloisRing& R = tw.base();
  VerificationReport rep;
  auto ring = CyclotomicRing::get(character_root_order(R));
  auto chars = all_mult_chars(R);
  std::vector<std::uint64_t> agree(chars.size(), 0);
  std::vector<std::string> first_bad(chars.size());
  parallel_for(chars.size(), threads, [&](std::size_t c) {
    for (std::uint64_t b = 0; b < R.size(); ++b) {
      auto beta = R.from_index(b);
      auto closed = gauss_sum_ring_closed_form(R, chars[c], beta, ring);
      auto direct = gauss_sum_ring_definition(R, chars[c], beta, ring);
      if (closed == direct)
        ++agree[c];
      else if (first_bad[c].empty())
        first_bad[c] = " first mismatch at beta=" + R.to_literal(beta) + ": " + closed.to_string() + " vs " +
                       direct.to_string();
    }
  });
  std::uint64_t pairs = 0;
  for (std::size_t c = 0; c < chars.size(); ++c) {
    pairs += agree[c];
    rep.add(char_id(R, chars[c]), "Gauss sum closed form equals the defining sum over R*", str(R.size()),
            str(agree[c]) + first_bad[c]);
  }
  rep.add("pairs", "every (chi, lambda) pair agrees", str(chars.size() * R.size()), str(pairs));
  auto trivial = gauss_sum_ring_definition(R, MultChar{}, R.zero(), ring);
  rep.add("trivial/trivial", "G(1, 1) = q(q-1)", str(std::uint64_t{R.q()} * (R.q() - 1)), trivial.to_string());
  return rep;
}

VerificationReport gauss_magnitude(const RingTower& tw) {
  VerificationReport rep;
  std::vector<const FiniteField*> fields{&tw.base().field()};
  if (tw.s() > 1) fields.push_back(&tw.ext().field());
  for (const FiniteField* F : fields) {
    auto ring = CyclotomicRing::get(nt::lcm(F->characteristic(), F->size() - 1));
    const std::string field = "F_" + std::to_string(F->size());
    rep.add(field + "/trivial", "G(1) = -1", "-1", gauss_sum_field(*F, 0, ring).to_string());
    for (std::uint64_t i = 1; i + 1 < F->size(); ++i)
      rep.add(field + "/omega^" + std::to_string(i), "|G(chi)|^2 = field size for nontrivial chi",
              str(F->size()), gauss_sum_field(*F, i, ring).abs_square().to_string());
  }
  return rep;
}

std::uint64_t orthogonality_failures(const GaloisRing& R) {
  auto ring = CyclotomicRing::get(character_root_order(R));
  const std::uint64_t m = ring->order();
  std::uint64_t bad = 0;
  for (std::uint64_t b = 0; b < R.size(); ++b) {
    RootTally t(ring);
    for (std::uint64_t x = 0; x < R.size(); ++x) t.add(additive_exponent(R, R.from_index(b), R.from_index(x), m));
    auto v = t.value();
    bool ok = v.is_rational() && v.as_rational_integer() == BigInt(b == 0 ? R.size() : 0);
    bad += !ok;
  }
  const std::uint64_t units = std::uint64_t{R.q()} * (R.q() - 1);
  for (const auto& chi : all_mult_chars(R)) {
    RootTally t(ring);
    for (std::uint64_t x = 0; x < R.size(); ++x) {
      auto a = R.from_index(x);
      if (R.is_unit(a)) t.add(mult_exponent(R, chi, a, m));
    }
    auto v = t.value();
    bool ok = v.is_rational() && v.as_rational_integer() == BigInt(chi.trivial() ? units : 0);
    bad += !ok;
  }
  return bad;
}

VerificationReport structure(const RingTower& tw) {
  VerificationReport rep;
  const GaloisRing& R = tw.base();
  const GaloisRing& E = tw.ext();
  for (const GaloisRing* X : {&R, &E}) {
    const std::string name = "GR(" + std::to_string(X->p_squared()) + "," + std::to_string(X->degree()) + ")";
    std::set<std::uint64_t> hit;
    for (FieldElem a = 0; a < X->q(); ++a)
      for (FieldElem b = 0; b < X->q(); ++b)
        hit.insert(X->index(X->add(X->teich_lift(a), X->scale(X->teich_lift(b), X->p()))));
    rep.add(name + "/teichmuller", "T x T -> R, (a, b) -> a + p b is a bijection", str(X->size()), str(hit.size()));
    std::set<std::uint64_t> traces;
    std::uint64_t frob_agree = 0;
    for (std::uint64_t i = 0; i < X->size(); ++i) {
      auto a = X->from_index(i);
      traces.insert(X->trace(a));
      frob_agree += X->from_int(X->trace(a)) == X->trace_by_frobenius(a);
    }
    rep.add(name + "/trace_onto", "absolute trace is onto Z_{p^2}", str(X->p_squared()), str(traces.size()));
    rep.add(name + "/trace_frobenius", "trace equals the sum of Frobenius conjugates", str(X->size()),
            str(frob_agree));
    std::uint64_t diagram = 0;
    for (std::uint64_t i = 0; i < X->size(); ++i) {
      auto a = X->from_index(i);
      diagram += X->trace(a) % X->p() == X->field().trace(X->reduce(a));
    }
    rep.add(name + "/diagram", "reduction mod p commutes with the absolute trace", str(X->size()), str(diagram));
  }
  std::set<std::uint64_t> rel;
  std::uint64_t trans = 0, diagram = 0, fixed_ok = 0;
  for (std::uint64_t i = 0; i < E.size(); ++i) {
    auto a = E.from_index(i);
    auto t = tw.relative_trace(a);
    rel.insert(R.index(t));
    trans += R.trace(t) == E.trace(a);
    diagram += R.reduce(t) == tw.field_relative_trace(E.reduce(a));
    fixed_ok += (tw.sigma_q(a) == a) == tw.in_base(a);
  }
  rep.add("relative/trace_onto", "relative trace is onto R", str(R.size()), str(rel.size()));
  rep.add("relative/transitive", "Tr_{R^(s)} = Tr_R o T_R^{R^(s)}", str(E.size()), str(trans));
  rep.add("relative/diagram", "reduction mod p commutes with the relative trace", str(E.size()), str(diagram));
  rep.add("relative/fixed_ring", "sigma_q fixes exactly the embedded R", str(E.size()), str(fixed_ok));
  rep.add("orthogonality/R", "character orthogonality on R and R*", "0", str(orthogonality_failures(R)));
  if (E.size() <= 4096)
    rep.add("orthogonality/R^(s)", "character orthogonality on R^(s) and R^(s)*", "0",
            str(orthogonality_failures(E)));
  return rep;
}

// ---- code suites ----

VerificationReport component_counts(const std::shared_ptr<const CodeContext>& ctx, unsigned threads) {
  VerificationReport rep;
  const GaloisRing& E = ctx->ext();
  const GaloisRing& R = ctx->base();
  GaussSumFormulas formulas(ctx);
  std::vector<std::string> predicted(E.size()), observed(E.size());
  parallel_for(E.size(), threads, [&](std::size_t b) {
    auto beta = E.from_index(b);
    auto counts = ctx->count_components(beta);
    observed[b] = list(counts);
    try {
      std::vector<std::string> f;
      for (std::uint64_t a = 0; a < R.size(); ++a) f.push_back(to_string(formulas.component_count(beta, R.from_index(a))));
      predicted[b] = list(f);
    } catch (const Error& err) {
      predicted[b] = std::string("error: ") + err.what();
    }
  });
  for (std::uint64_t b = 0; b < E.size(); ++b)
    rep.add("beta=" + E.to_literal(E.from_index(b)), "component counts N_beta(a) from Gauss sums", predicted[b],
            observed[b]);

  auto bd = formulas.bounds(threads);
  rep.info["M1"] = to_string(bd.m1);
  rep.info["M2"] = to_string(bd.m2);
  rep.info["both_below_one"] = bd.both_below_one;
  rep.info["size_condition"] = bd.size_condition;
  rep.info["cyclic_condition"] = bd.cyclic_condition;
  if (bd.both_below_one) {
    auto w = enumerate_weights(*ctx, threads);
    const std::uint64_t q2 = ctx->big_q() * ctx->big_q();
    rep.add("bounds/size", "M1 < 1 and M2 < 1 give |C| = Q^2", str(q2),
            str(count_distinct_codewords(*ctx, false, threads)));
    rep.add("bounds/distance", "M1 < 1 and M2 < 1 give d_H(C) from M1, M2", to_string(bd.d_h),
            str(w.min_nonzero_hamming()));
  }
  if (bd.size_condition && bd.cyclic_condition)
    rep.add("bounds/sufficient", "the size conditions force M1 < 1 and M2 < 1", "true", flag(bd.both_below_one));
  return rep;
}

VerificationReport complete_weights(const std::shared_ptr<const CodeContext>& ctx, unsigned threads) {
  check_subfield_setting(*ctx, true, false);
  VerificationReport rep;
  auto w = enumerate_weights(*ctx, threads);
  add_table(rep, complete_weight_table(*ctx, w), "complete weight table for e = 1");

  const Rational q(ctx->q()), Q(ctx->big_q()), n(ctx->n()), pd(BigInt(nt::ipow(ctx->base().p(), ctx->d())));
  rep.add("size", "|C| = Q^2", str(ctx->big_q() * ctx->big_q()), str(count_distinct_codewords(*ctx, false, threads)));
  rep.add("min_distance", "d_H(C) = Q p^d (q-1)/q", to_string(Q * pd * (q - 1) / q), str(w.min_nonzero_hamming()));
  Rational a = pd * (Q / (q * q) - 1), b = a + (q - 1) * Q / q, c = (Q / q - 1) * pd;
  rep.add("chain", "p^d(Q/q^2-1) < that + (q-1)Q/q <= (Q/q-1)p^d < n", "true", flag(a < b && b <= c && c < n));
  std::uint64_t max_zero = 0;
  for (std::size_t i = 1; i < w.counts.size(); ++i) max_zero = std::max(max_zero, w.counts[i][0]);
  rep.add("max_zeros", "max over nonzero beta of N_beta(0) < n", "true", flag(max_zero < ctx->n()));
  rep.add("l", "G contains R*, so l = q(q-1)", to_string(q * (q - 1)), str(ctx->l()));
  rep.add("punctured_length", "n~ = n/(q(q-1))", to_string(n / (q * (q - 1))), str(ctx->coset_representatives().size()));
  rep.add("punctured_distance", "d_H(C~) = p^d Q/q^2", to_string(pd * Q / (q * q)), str(w.min_nonzero_hamming_tilde()));
  return rep;
}

VerificationReport code_parameters(const std::shared_ptr<const CodeContext>& ctx, unsigned threads) {
  auto par = predicted_parameters(*ctx);
  VerificationReport rep;
  auto w = enumerate_weights(*ctx, threads);
  const std::uint64_t q2 = ctx->big_q() * ctx->big_q();
  rep.add("n", "n = (Q-1)p^d/e", to_string(par.n), str(ctx->n()));
  rep.add("d", "d_H(C) = p^d Q (q-1)/(e q)", to_string(par.d), str(w.min_nonzero_hamming()));
  rep.add("n_tilde", "n~ = (Q-1)p^d/(q(q-1))", to_string(par.n_tilde), str(ctx->coset_representatives().size()));
  rep.add("d_tilde", "d_H(C~) = p^d Q/q^2", to_string(par.d_tilde), str(w.min_nonzero_hamming_tilde()));
  rep.add("size", "|C| = Q^2", str(q2), str(count_distinct_codewords(*ctx, false, threads)));
  rep.add("size_tilde", "|C~| = Q^2", str(q2), str(count_distinct_codewords(*ctx, true, threads)));
  return rep;
}

VerificationReport hom_weight_formula(const std::shared_ptr<const CodeContext>& ctx, unsigned threads) {
  VerificationReport rep;
  const GaloisRing& E = ctx->ext();
  GaussSumFormulas formulas(ctx);
  auto w = enumerate_weights(*ctx, threads);
  std::vector<std::string> pred(E.size()), pred_tilde(E.size());
  parallel_for(E.size(), threads, [&](std::size_t b) {
    auto beta = E.from_index(b);
    try {
      pred[b] = to_string(formulas.hom_weight(beta));
      pred_tilde[b] = to_string(formulas.hom_weight_tilde(beta));
    } catch (const Error& err) {
      pred[b] = pred_tilde[b] = std::string("error: ") + err.what();
    }
  });
  for (std::uint64_t b = 0; b < E.size(); ++b) {
    const std::string id = "beta=" + E.to_literal(E.from_index(b));
    rep.add(id + "/w_hom", "homogeneous weight from Gauss sums", pred[b], str(w.hom[b]));
    rep.add(id + "/w_hom_tilde", "punctured weight is w_hom(c_beta)/l", pred_tilde[b], str(w.hom_tilde[b]));
  }
  return rep;
}

VerificationReport hom_weight_distribution(const std::shared_ptr<const CodeContext>& ctx, unsigned threads) {
  check_subfield_setting(*ctx, false, true);
  VerificationReport rep;
  add_table(rep, hom_weight_table(*ctx, enumerate_weights(*ctx, threads)), "homogeneous weight table for e' = 1");
  return rep;
}

VerificationReport gray_image(const std::shared_ptr<const CodeContext>& ctx, unsigned threads) {
  VerificationReport rep;
  const GaloisRing& R = ctx->base();
  GrayMap psi(R);
  std::uint64_t iso = 0;
  for (std::uint64_t x = 0; x < R.size(); ++x)
    for (std::uint64_t y = 0; y < R.size(); ++y) {
      const std::uint32_t *a = psi.image(x), *b = psi.image(y);
      std::uint64_t d = 0;
      for (std::uint32_t j = 0; j < R.q(); ++j) d += a[j] != b[j];
      iso += d == hom_weight(R, R.sub(R.from_index(x), R.from_index(y)));
    }
  rep.add("ring/isometry", "w_H(psi(x) - psi(y)) = w_hom(x - y) on R x R", str(R.size() * R.size()), str(iso));
  std::set<std::vector<std::uint32_t>> image, affine;
  for (std::uint64_t x = 0; x < R.size(); ++x) image.insert(psi.map(R.from_index(x)));
  for (auto& v : affine_code(R.field())) affine.insert(std::move(v));
  rep.add("ring/affine_code", "psi(R) is the first-order generalized Reed-Muller code", "true", flag(image == affine));

  auto w = enumerate_weights(*ctx, threads);
  const Rational q(ctx->q()), Q(ctx->big_q()), e(ctx->e()), pd(BigInt(nt::ipow(R.p(), ctx->d())));
  bool eligible = true;
  try {
    check_subfield_setting(*ctx, false, true);
  } catch (const Error&) {
    eligible = false;
  }
  rep.info["two_distance_setting"] = eligible;
  for (bool tilde : {false, true}) {
    const std::string tag = tilde ? "punctured" : "full";
    auto img = analyze_gray_image(*ctx, tilde, threads);
    std::map<std::uint64_t, std::uint64_t> hom;
    for (auto x : tilde ? w.hom_tilde : w.hom) ++hom[x];
    const std::uint64_t code_size = count_distinct_codewords(*ctx, tilde, threads);
    rep.add(tag + "/injective", "|psi(C)| = |C|", str(code_size), str(img.distinct));
    rep.add(tag + "/weights", "Hamming weights of psi(C) are the homogeneous weights of C", multiset(hom),
            multiset(img.weights));
    rep.info[tag + "_distances"] = multiset(img.distances);
    rep.info[tag + "_length"] = img.length;
    if (!eligible) continue;
    Rational len = tilde ? Rational((Q - 1) * pd / (q - 1)) : Rational((Q - 1) * q * pd / e);
    Rational dmin = tilde ? Rational(Q * (pd - 1) / q) : Rational(Q * (q - 1) * (pd - 1) / e);
    rep.add(tag + "/length", "Gray image length", to_string(len), str(img.length));
    rep.add(tag + "/size", "|psi(C)| = Q^2", str(ctx->big_q() * ctx->big_q()), str(img.distinct));
    rep.add(tag + "/two_distance", "exactly two nonzero distances", "true", flag(img.two_distance));
    rep.add(tag + "/min_distance", "minimum distance of the Gray image", to_string(dmin), str(img.min_distance));
  }
  return rep;
}

}  // namespace

void VerificationReport::add(std::string id, std::string anchor, std::string predicted, std::string observed) {
  bool pass = predicted == observed;
  checks.push_back({std::move(id), std::move(anchor), std::move(predicted), std::move(observed), pass});
}

std::size_t VerificationReport::passed() const {
  return std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["instance"] = instance;
  if (!info.empty()) j["info"] = info;
  j["summary"] = {{"checks", checks.size()}, {"passed", passed()}, {"failed", failed()},
                  {"verdict", ok() ? "pass" : "fail"}};
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    arr.push_back({{"id", c.id},
                   {"anchor", c.anchor},
                   {"predicted", c.predicted},
                   {"observed", c.observed},
                   {"verdict", c.pass ? "pass" : "fail"}});
  j["checks"] = std::move(arr);
  if (wall_seconds) j["wall_seconds"] = *wall_seconds;
  return j;
}

std::string VerificationReport::to_csv() const {
  std::string out = "suite,id,anchor,predicted,observed,verdict\n";
  for (const auto& c : checks)
    out += csv_field(suite) + "," + csv_field(c.id) + "," + csv_field(c.anchor) + "," + csv_field(c.predicted) + "," +
           csv_field(c.observed) + "," + (c.pass ? "pass" : "fail") + "\n";
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << ": " << passed() << "/" << checks.size() << " checks pass\n";
  for (const auto& c : checks) {
    out << (c.pass ? "  ok   " : "  FAIL ") << c.id;
    if (!c.pass) out << "  predicted " << c.predicted << "  observed " << c.observed;
    out << '\n';
  }
  for (auto it = info.begin(); it != info.end(); ++it) out << "  " << it.key() << " = " << it.value().dump() << '\n';
  if (wall_seconds) out << "  wall " << *wall_seconds << " s\n";
  return out.str();
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::GaussClosedForm: return "gauss-closed-form";
    case Suite::GaussMagnitude: return "gauss-magnitude";
    case Suite::Structure: return "structure";
    case Suite::ComponentCounts: return "component-counts";
    case Suite::CompleteWeightTable: return "complete-weight-table";
    case Suite::CodeParameters: return "code-parameters";
    case Suite::HomWeightFormula: return "hom-weight-formula";
    case Suite::HomWeightTable: return "hom-weight-table";
    case Suite::GrayImage: return "gray-image";
  }
  return "?";
}

std::vector<Suite> all_suites() {
  return {Suite::GaussClosedForm, Suite::GaussMagnitude,   Suite::Structure,
          Suite::ComponentCounts, Suite::CompleteWeightTable, Suite::CodeParameters,
          Suite::HomWeightFormula, Suite::HomWeightTable,  Suite::GrayImage};
}

std::optional<Suite> parse_suite(std::string_view text) {
  static const std::map<std::string_view, Suite> aliases{
      {"2.1", Suite::GaussClosedForm}, {"3.1", Suite::ComponentCounts},  {"3.3", Suite::CompleteWeightTable},
      {"3.4", Suite::CodeParameters},  {"4.4", Suite::HomWeightFormula}, {"4.5", Suite::HomWeightTable},
      {"4.6", Suite::GrayImage}};
  if (auto it = aliases.find(text); it != aliases.end()) return it->second;
  for (auto s : all_suites())
    if (suite_name(s) == text) return s;
  return std::nullopt;
}

bool suite_needs_code(Suite s) {
  return s != Suite::GaussClosedForm && s != Suite::GaussMagnitude && s != Suite::Structure;
}

nlohmann::ordered_json describe_tower(const RingTower& tw) {
  nlohmann::ordered_json j;
  j["p"] = tw.base().p();
  j["r"] = tw.base().degree();
  j["s"] = tw.s();
  j["q"] = tw.q();
  j["Q"] = tw.big_q();
  j["modulus"] = tw.base().modulus().to_literal();
  j["ext_modulus"] = tw.ext().modulus().to_literal();
  return j;
}

nlohmann::ordered_json describe_code(const CodeContext& ctx) {
  auto j = describe_tower(ctx.tower());
  j["e"] = ctx.e();
  j["e_prime"] = ctx.e_prime();
  j["d"] = ctx.d();
  auto basis = nlohmann::ordered_json::array();
  for (auto v : ctx.vbar_basis()) basis.push_back(ctx.ext().field().to_literal(v));
  j["vbar_basis"] = std::move(basis);
  j["n"] = ctx.n();
  j["l"] = ctx.l();
  return j;
}

VerificationReport run_suite(Suite s, const SuiteInput& in) {
  if (!in.tower) throw Error(Errc::InvalidArgument, "suite needs a ring tower");
  if (suite_needs_code(s) && !in.code) throw Error(Errc::InvalidArgument, "suite " + suite_name(s) + " needs a code");
  VerificationReport rep;
  switch (s) {
    case Suite::GaussClosedForm: rep = gauss_closed_form(*in.tower, in.threads); break;
    case Suite::GaussMagnitude: rep = gauss_magnitude(*in.tower); break;
    case Suite::Structure: rep = structure(*in.tower); break;
    case Suite::ComponentCounts: rep = component_counts(in.code, in.threads); break;
    case Suite::CompleteWeightTable: rep = complete_weights(in.code, in.threads); break;
    case Suite::CodeParameters: rep = code_parameters(in.code, in.threads); break;
    case Suite::HomWeightFormula: rep = hom_weight_formula(in.code, in.threads); break;
    case Suite::HomWeightTable: rep = hom_weight_distribution(in.code, in.threads); break;
    case Suite::GrayImage: rep = gray_image(in.code, in.threads); break;
  }
  rep.suite = suite_name(s);
  rep.instance = suite_needs_code(s) ? describe_code(*in.code) : describe_tower(*in.tower);
  return rep;
}

}  // namespace grcodes
