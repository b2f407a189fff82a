// grcodes: Galois ring trace codes, Gauss sums and Gray images from the command line.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "grcodes/characters.hpp"
#include "grcodes/codes.hpp"
#include "grcodes/errors.hpp"
#include "grcodes/gray.hpp"
#include "grcodes/numtheory.hpp"
#include "grcodes/subspace.hpp"
#include "grcodes/verify.hpp"

using namespace grcodes;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::uint32_t p = 2;
  unsigned r = 1;
  unsigned s = 0;  // 0: derived from sprime, else 1
  unsigned sprime = 0;
  std::string modulus;
  std::string ext_modulus;
  std::uint64_t e = 1;
  int d = -1;
  std::string vbar = "auto";
  unsigned threads = 0;
  std::string format = "json";
  std::string output;
  bool allow_large = false;
  bool timing = false;
  bool full = false;
  // command-specific
  std::string suite;
  std::string chi_i = "0";
  std::string chi_b = "0";
  std::string lambda = "0";
  bool sweep = false;
  bool dump_sums = false;
  std::string element;
  std::string word;
  std::string beta;
  bool tilde = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

ModPoly parse_modulus(const std::string& text, std::uint32_t p) {
  std::vector<std::uint32_t> coeffs;
  for (const auto& tok : split(text, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v >= std::uint64_t{p} * p)
      throw Error(Errc::InvalidArgument, "bad modulus coefficient '" + tok + "'");
    coeffs.push_back(static_cast<std::uint32_t>(v));
  }
  return ModPoly(p * p, coeffs);
}

unsigned effective_s(const RunConfig& c) {
  if (c.sprime != 0) {
    const unsigned s = c.p * c.sprime;
    if (c.s != 0 && c.s != s)
      throw Error(Errc::InvalidArgument, "--s " + std::to_string(c.s) + " disagrees with p * --sprime = " +
                                             std::to_string(s));
    return s;
  }
  return c.s == 0 ? 1 : c.s;
}

std::shared_ptr<const RingTower> build_tower(const RunConfig& c) {
  if (!nt::is_prime(c.p)) throw Error(Errc::InvalidArgument, "p must be prime");
  const unsigned s = effective_s(c);
  std::optional<ModPoly> ext_mod;
  if (!c.ext_modulus.empty()) ext_mod = parse_modulus(c.ext_modulus, c.p);
  if (c.modulus.empty()) return RingTower::build(c.p, c.r, s, ext_mod);
  auto base = std::make_shared<const GaloisRing>(c.p, c.r, parse_modulus(c.modulus, c.p));
  if (s == 1) return std::make_shared<const RingTower>(base, base);
  auto ext = ext_mod ? std::make_shared<const GaloisRing>(c.p, c.r * s, *ext_mod)
                     : std::make_shared<const GaloisRing>(c.p, c.r * s);
  return std::make_shared<const RingTower>(base, ext);
}

std::vector<FieldElem> resolve_vbar(const RunConfig& c, const RingTower& tw) {
  const FiniteField& F = tw.ext().field();
  const unsigned rs = F.degree();
  std::string mode = c.vbar;
  if (mode == "auto") mode = c.sprime != 0 ? "dual-subfield" : "std";
  auto need_d = [&] {
    if (c.d < 0) throw Error(Errc::InvalidArgument, "--vbar " + mode + " needs --d");
    if (static_cast<unsigned>(c.d) > rs) throw Error(Errc::InvalidArgument, "--d exceeds rs = " + std::to_string(rs));
    return static_cast<unsigned>(c.d);
  };
  if (mode == "full") return standard_vbar(F, rs);
  if (mode == "zero") return {};
  if (mode == "std") return standard_vbar(F, need_d());
  if (mode == "dual-subfield") {
    if (c.sprime == 0) throw Error(Errc::InvalidArgument, "--vbar dual-subfield needs --sprime");
    return subfield_dual_vbar(F, tw.base().degree() * c.sprime, need_d());
  }
  std::vector<FieldElem> basis;
  for (const auto& lit : split(mode, ';')) basis.push_back(F.parse_literal(lit));
  if (c.d >= 0 && static_cast<std::size_t>(c.d) != basis.size())
    throw Error(Errc::InvalidArgument, "--d does not match the number of --vbar basis rows");
  return basis;
}

std::shared_ptr<const CodeContext> build_code(const RunConfig& c) {
  auto tw = build_tower(c);
  return std::make_shared<const CodeContext>(tw, SubgroupSpec{c.e, resolve_vbar(c, *tw)}, c.allow_large);
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + c.output);
  out << text;
}

void emit_json(const RunConfig& c, const ojson& j) { emit(c, j.dump(2) + "\n"); }

std::string field_list(const FiniteField& F, const std::vector<std::uint32_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + F.to_literal(v[i]);
  return out;
}

// ---- ring info ----

int cmd_ring_info(const RunConfig& c) {
  auto tw = build_tower(c);
  const GaloisRing& R = tw->base();
  ojson j;
  j["p"] = R.p();
  j["r"] = R.degree();
  j["q"] = R.q();
  j["modulus"] = R.modulus().to_literal();
  j["modulus_poly"] = R.modulus().to_string();
  std::uint64_t order = 1;
  for (RingElem x = R.xi(); x != R.one(); x = R.mul(x, R.xi())) ++order;
  j["xi_order"] = order;
  j["xi_order_ok"] = order == R.q() - 1;
  j["size"] = R.size();
  std::uint64_t units = 0;
  for (std::uint64_t i = 0; i < R.size(); ++i) units += R.is_unit(R.from_index(i));
  j["units"] = units;
  j["maximal_ideal"] = R.size() - units;
  if (R.q() <= 16) {
    auto t = ojson::array();
    t.push_back({{"k", nullptr}, {"element", R.to_literal(R.zero())}});
    for (std::uint64_t k = 0; k + 1 < R.q(); ++k) t.push_back({{"k", k}, {"element", R.to_literal(R.xi_pow(k))}});
    j["teichmuller"] = std::move(t);
  }
  if (tw->s() > 1) {
    const GaloisRing& E = tw->ext();
    ojson t = describe_tower(*tw);
    t["embedding_xi_log"] = tw->xi_image_log();
    std::set<std::uint64_t> hit;
    std::uint64_t trans = 0;
    for (std::uint64_t i = 0; i < E.size(); ++i) {
      auto x = tw->relative_trace(E.from_index(i));
      hit.insert(R.index(x));
      trans += R.trace(x) == E.trace(E.from_index(i));
    }
    t["relative_trace_onto"] = hit.size() == R.size();
    t["trace_transitive"] = trans == E.size();
    j["tower"] = std::move(t);
  }
  if (c.format == "text") {
    std::ostringstream out;
    out << "GR(" << R.p_squared() << "," << R.degree() << ")  h = " << R.modulus().to_string() << "\n"
        << "ord(xi) = " << order << (order == R.q() - 1 ? " (ok)" : " (WRONG)") << "\n"
        << "|R| = " << R.size() << "  |R*| = " << units << "  |M| = " << R.size() - units << "\n";
    emit(c, out.str());
  } else {
    emit_json(c, j);
  }
  return 0;
}

// ---- gauss ----

int cmd_gauss(const RunConfig& c) {
  auto tw = build_tower(c);
  const GaloisRing& R = tw->base();
  auto ring = CyclotomicRing::get(character_root_order(R));
  auto value = [&](const CyclotomicInteger& z) {
    return c.dump_sums ? ojson(z.to_json()) : ojson(z.to_string());
  };
  if (c.sweep) {
    std::uint64_t pairs = 0, equal = 0;
    auto rows = ojson::array();
    for (const auto& chi : all_mult_chars(R))
      for (std::uint64_t b = 0; b < R.size(); ++b) {
        auto beta = R.from_index(b);
        auto def = gauss_sum_ring_definition(R, chi, beta, ring);
        auto closed = gauss_sum_ring_closed_form(R, chi, beta, ring);
        ++pairs;
        equal += def == closed;
        if (c.dump_sums)
          rows.push_back({{"chi", {chi.i, R.field().to_literal(chi.b)}},
                          {"lambda", R.to_literal(beta)},
                          {"definition", value(def)},
                          {"closed_form", value(closed)}});
      }
    ojson j;
    j["ring"] = describe_tower(*tw);
    j["pairs"] = pairs;
    j["expected_pairs"] = std::uint64_t{R.q()} * (R.q() - 1) * R.size();
    j["equal"] = equal;
    j["verdict"] = equal == pairs ? "EQUAL" : "DIFFER";
    if (c.dump_sums) j["sums"] = std::move(rows);
    emit_json(c, j);
    return equal == pairs ? 0 : kExitMismatch;
  }
  MultChar chi;
  chi.i = std::stoull(c.chi_i);
  if (chi.i >= R.q() - 1 && !(R.q() == 2 && chi.i == 0))
    throw Error(Errc::InvalidArgument, "--chi-i must be below q-1");
  chi.b = R.field().parse_literal(c.chi_b);
  auto beta = R.parse_literal(c.lambda);
  auto def = gauss_sum_ring_definition(R, chi, beta, ring);
  auto closed = gauss_sum_ring_closed_form(R, chi, beta, ring);
  ojson j;
  j["ring"] = describe_tower(*tw);
  j["chi"] = {{"i", chi.i}, {"b", R.field().to_literal(chi.b)}};
  j["lambda"] = R.to_literal(beta);
  j["definition"] = value(def);
  j["closed_form"] = value(closed);
  j["verdict"] = def == closed ? "EQUAL" : "DIFFER";
  emit_json(c, j);
  return def == closed ? 0 : kExitMismatch;
}

// ---- code ----

int cmd_code_build(const RunConfig& c) {
  auto ctx = build_code(c);
  ojson j = describe_code(*ctx);
  const auto& E = ctx->ext();
  const auto& F = E.field();
  j["f"] = ctx->f();
  auto perp = ojson::array();
  for (auto v : ctx->vbar_perp_basis()) perp.push_back(F.to_literal(v));
  j["vbar_perp_basis"] = std::move(perp);
  if (ctx->s_prime()) j["s_prime"] = *ctx->s_prime();
  j["dual_in_subfield"] = ctx->dual_in_subfield();
  if (ctx->dual_in_subfield()) {
    auto sset = ojson::array();
    for (auto v : ctx->s_set()) sset.push_back(F.to_literal(v));
    j["S"] = std::move(sset);
  }
  j["coset_count"] = ctx->coset_representatives().size();
  if (c.full) {
    auto el = ojson::array();
    for (const auto& x : ctx->elements()) el.push_back(E.to_literal(x));
    j["elements"] = std::move(el);
    auto reps = ojson::array();
    for (const auto& x : ctx->coset_representatives()) reps.push_back(E.to_literal(x));
    j["coset_representatives"] = std::move(reps);
  }
  emit_json(c, j);
  return 0;
}

int cmd_code_weights(const RunConfig& c) {
  auto ctx = build_code(c);
  auto w = enumerate_weights(*ctx, c.threads);
  const auto& E = ctx->ext();
  const auto& R = ctx->base();
  if (c.format == "csv") {
    std::string out = "beta,beta_class,hamming,hom,hamming_tilde,hom_tilde";
    for (std::uint64_t a = 0; a < R.size(); ++a) out += ",N[" + R.to_literal(R.from_index(a)) + "]";
    out += "\n";
    for (std::uint64_t b = 0; b < E.size(); ++b) {
      out += "\"" + E.to_literal(E.from_index(b)) + "\"," + beta_class_name(w.classes[b]) + "," +
             std::to_string(w.hamming[b]) + "," + std::to_string(w.hom[b]) + "," + std::to_string(w.hamming_tilde[b]) +
             "," + std::to_string(w.hom_tilde[b]);
      for (auto n : w.counts[b]) out += "," + std::to_string(n);
      out += "\n";
    }
    emit(c, out);
    return 0;
  }
  auto distribution = [](const std::vector<std::uint64_t>& v) {
    std::map<std::uint64_t, std::uint64_t> m;
    for (auto x : v) ++m[x];
    ojson j = ojson::object();
    for (auto [k, n] : m) j[std::to_string(k)] = n;
    return j;
  };
  ojson j;
  j["instance"] = describe_code(*ctx);
  ojson a = ojson::object();
  auto dist = w.hamming_distribution();
  for (std::size_t i = 0; i < dist.size(); ++i)
    if (dist[i]) a[std::to_string(i)] = dist[i];
  j["hamming_distribution"] = std::move(a);
  j["min_hamming"] = w.min_nonzero_hamming();
  j["min_hamming_tilde"] = w.min_nonzero_hamming_tilde();
  j["hom_distribution"] = distribution(w.hom);
  j["hom_tilde_distribution"] = distribution(w.hom_tilde);
  auto complete = ojson::array();
  for (const auto& [counts, mult] : w.complete_distribution()) complete.push_back({{"counts", counts}, {"codewords", mult}});
  j["complete_distribution"] = std::move(complete);
  auto symbols = ojson::array();
  for (std::uint64_t a2 = 0; a2 < R.size(); ++a2) symbols.push_back(R.to_literal(R.from_index(a2)));
  j["symbols"] = std::move(symbols);
  if (c.full) {
    auto rows = ojson::array();
    for (std::uint64_t b = 0; b < E.size(); ++b)
      rows.push_back({{"beta", E.to_literal(E.from_index(b))},
                      {"class", beta_class_name(w.classes[b])},
                      {"counts", w.counts[b]},
                      {"hamming", w.hamming[b]},
                      {"hom", w.hom[b]},
                      {"hamming_tilde", w.hamming_tilde[b]},
                      {"hom_tilde", w.hom_tilde[b]}});
    j["rows"] = std::move(rows);
  }
  emit_json(c, j);
  return 0;
}

std::string table_csv(const VerificationReport& rep) {
  auto field = [](const std::string& s) {
    return s.find_first_of(",\"") == std::string::npos ? s : "\"" + s + "\"";
  };
  std::string out = "beta_class,a_class,predicted,enumerated,match\n";
  for (const auto& ch : rep.checks) {
    auto slash = ch.id.find('/');
    std::string cls = slash == std::string::npos ? "code" : ch.id.substr(0, slash);
    std::string col = slash == std::string::npos ? ch.id : ch.id.substr(slash + 1);
    out += cls + "," + col + "," + field(ch.predicted) + "," + field(ch.observed) + "," + (ch.pass ? "true" : "false") +
           "\n";
  }
  return out;
}

int cmd_code_verify(const RunConfig& c) {
  auto suite = parse_suite(c.suite);
  if (!suite) throw Error(Errc::InvalidArgument, "unknown suite '" + c.suite + "'");
  const auto start = std::chrono::steady_clock::now();
  SuiteInput in;
  in.tower = build_tower(c);
  if (suite_needs_code(*suite)) in.code = build_code(c);
  in.threads = c.threads;
  auto rep = run_suite(*suite, in);
  if (c.timing)
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.format == "csv") {
    const bool table = *suite == Suite::CompleteWeightTable || *suite == Suite::HomWeightTable;
    emit(c, table ? table_csv(rep) : rep.to_csv());
  } else if (c.format == "text") {
    emit(c, rep.to_text());
  } else {
    emit_json(c, rep.to_json());
  }
  return rep.ok() ? 0 : kExitMismatch;
}

// ---- gray ----

int cmd_gray_map(const RunConfig& c) {
  auto tw = build_tower(c);
  const GaloisRing& R = tw->base();
  GrayMap psi(R);
  ojson j;
  auto order = ojson::array();
  for (auto x : gray_field_order(R.field())) order.push_back(R.field().to_literal(x));
  j["field_order"] = std::move(order);
  std::vector<std::uint32_t> word;
  if (!c.beta.empty()) {
    auto ctx = build_code(c);
    auto beta = ctx->ext().parse_literal(c.beta);
    word = c.tilde ? ctx->encode_tilde(beta) : ctx->encode(beta);
    j["beta"] = c.beta;
  } else {
    const std::string src = !c.word.empty() ? c.word : c.element;
    if (src.empty()) throw Error(Errc::InvalidArgument, "give --element, --word or --beta");
    for (const auto& lit : split(src, ';')) word.push_back(static_cast<std::uint32_t>(R.index(R.parse_literal(lit))));
  }
  auto in = ojson::array();
  std::uint64_t hom = 0;
  for (auto sym : word) {
    in.push_back(R.to_literal(R.from_index(sym)));
    hom += hom_weight_index(R, sym);
  }
  j["word"] = std::move(in);
  auto img = psi.map_word(word);
  auto out = ojson::array();
  std::uint64_t wt = 0;
  for (auto x : img) {
    out.push_back(R.field().to_literal(x));
    wt += x != 0;
  }
  j["image"] = std::move(out);
  j["hom_weight"] = hom;
  j["image_weight"] = wt;
  if (c.format == "text")
    emit(c, field_list(R.field(), img) + "\n");
  else
    emit_json(c, j);
  return 0;
}

int cmd_gray_analyze(const RunConfig& c) {
  auto ctx = build_code(c);
  auto rep = analyze_gray_image(*ctx, c.tilde, c.threads);
  ojson j;
  j["instance"] = describe_code(*ctx);
  j["code"] = c.tilde ? "punctured" : "full";
  j["length"] = rep.length;
  j["size"] = rep.distinct;
  ojson w = ojson::object();
  for (auto [k, n] : rep.weights) w[std::to_string(k)] = n;
  j["weights"] = std::move(w);
  ojson d = ojson::object();
  for (auto [k, n] : rep.distances) d[std::to_string(k)] = n;
  j["distances"] = std::move(d);
  j["min_distance"] = rep.min_distance;
  j["two_distance"] = rep.two_distance;
  emit_json(c, j);
  return 0;
}

void add_ring_options(CLI::App* app, RunConfig& c) {
  app->add_option("--p", c.p, "prime p")->capture_default_str();
  app->add_option("--r", c.r, "degree of R = GR(p^2, r)")->capture_default_str();
  app->add_option("--s", c.s, "extension degree of R^(s) over R; 0 means p*s' if --sprime is set, else 1")
      ->capture_default_str();
  app->add_option("--sprime", c.sprime, "s' with s = p s'; 0 means unset")->capture_default_str();
  app->add_option("--modulus", c.modulus, "modulus of R as little-endian coefficients mod p^2, e.g. 1,1,1");
  app->add_option("--ext-modulus", c.ext_modulus, "modulus of R^(s), same format");
}

void add_code_options(CLI::App* app, RunConfig& c) {
  app->add_option("--e", c.e, "G = <eta^e> x (1 + pV); e must divide Q-1")->capture_default_str();
  app->add_option("--d", c.d, "dim V over F_p; -1 means unset")->capture_default_str();
  app->add_option("--vbar", c.vbar,
                  "auto | std | full | zero | dual-subfield | explicit basis 'c,c;c,c' of F_Q literals")
      ->capture_default_str();
  app->add_flag("--allow-large", c.allow_large, "lift the Q^2 <= 2^24 enumeration guard");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Galois ring trace codes, Gauss sums and Gray images"};
  app.set_config("--config", "", "flat key = value file; command-line flags override it");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", c.threads, "worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--format", c.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--output,-o", c.output, "write to this file instead of stdout");
  app.add_flag("--timing", c.timing, "include wall-clock time in verification reports");
  app.add_flag("--full", c.full, "per-element detail in build and weights output");
  bool dump_config = false;
  app.add_flag("--dump-config", dump_config, "print the effective configuration and exit")->configurable(false);
  add_ring_options(&app, c);
  add_code_options(&app, c);

  auto* ring = app.add_subcommand("ring", "Galois ring construction")->require_subcommand(1)->fallthrough();
  auto* ring_info = ring->add_subcommand("info", "modulus, xi order, sizes, Teichmueller set")->fallthrough();

  auto* gauss = app.add_subcommand("gauss", "Gauss sum G(chi, lambda) by definition and closed form")->fallthrough();
  gauss->add_option("--chi-i", c.chi_i, "exponent i of omega^i")->capture_default_str();
  gauss->add_option("--chi-b", c.chi_b, "b in F_q of phi_b (field literal)")->capture_default_str();
  gauss->add_option("--lambda", c.lambda, "beta in R of lambda_beta (ring literal)")->capture_default_str();
  gauss->add_flag("--sweep", c.sweep, "check every (chi, lambda) pair");
  gauss->add_flag("--dump-sums", c.dump_sums, "cyclotomic coefficient vectors in JSON");

  auto* code = app.add_subcommand("code", "trace codes C(G)")->require_subcommand(1)->fallthrough();
  auto* code_build = code->add_subcommand("build", "enumerate G and describe the code")->fallthrough();
  auto* code_weights = code->add_subcommand("weights", "Hamming, complete and homogeneous weights")->fallthrough();
  auto* code_verify = code->add_subcommand("verify", "run a verification suite")->fallthrough();
  auto* suite_opt = code_verify->add_option("--suite", c.suite, "suite name");
  code_verify->add_option("--theorem", c.suite, "numbered alias: 2.1 3.1 3.3 3.4 4.4 4.5 4.6")->excludes(suite_opt);

  auto* gray = app.add_subcommand("gray", "Gray map into F_q^q")->require_subcommand(1)->fallthrough();
  auto* gray_map = gray->add_subcommand("map", "image of an element, a word, or a codeword")->fallthrough();
  gray_map->add_option("--element", c.element, "ring literal");
  gray_map->add_option("--word", c.word, "ring literals separated by ';'");
  gray_map->add_option("--beta", c.beta, "beta in R^(s): map the codeword c_beta");
  auto* gray_analyze = gray->add_subcommand("analyze", "weights and pairwise distances of psi(C)")->fallthrough();
  for (auto* sub : {gray_map, gray_analyze}) sub->add_flag("--tilde", c.tilde, "use the punctured code");

  // the config file holds the shared run/ring/code settings only
  for (auto* sub : {gauss, code_verify, gray_map, gray_analyze})
    for (auto* opt : sub->get_options()) opt->configurable(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }
  if (dump_config) {
    std::cout << app.config_to_str(true, false);
    return 0;
  }
  if (code_verify->parsed() && c.suite.empty()) {
    std::cerr << "code verify: give --suite or --theorem\n";
    return kExitUsage;
  }

  try {
    if (ring_info->parsed()) return cmd_ring_info(c);
    if (gauss->parsed()) return cmd_gauss(c);
    if (code_build->parsed()) return cmd_code_build(c);
    if (code_weights->parsed()) return cmd_code_weights(c);
    if (code_verify->parsed()) return cmd_code_verify(c);
    if (gray_map->parsed()) return cmd_gray_map(c);
    if (gray_analyze->parsed()) return cmd_gray_analyze(c);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: bad number: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
