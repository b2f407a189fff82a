#include "grcodes/tables.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "grcodes/errors.hpp"
#include "grcodes/numtheory.hpp"

namespace grcodes {

namespace {

Rational pow_r(std::uint64_t base, unsigned k) { return Rational(BigInt(nt::ipow(base, k))); }

const std::vector<BetaClass> kRows{BetaClass::UnitInS, BetaClass::UnitNotInS, BetaClass::PrimeTeichmuller,
                                   BetaClass::Zero};

TableCell make_cell(BetaClass c, std::string column, Rational predicted, const std::set<std::uint64_t>& seen) {
  TableCell cell{c, std::move(column), std::move(predicted), {seen.begin(), seen.end()}, false};
  cell.match = cell.observed.empty() || (cell.observed.size() == 1 && Rational(cell.observed[0]) == cell.predicted);
  return cell;
}

TableCell count_cell(BetaClass c, Rational predicted, std::uint64_t count) {
  TableCell cell{c, "count", std::move(predicted), {count}, false};
  cell.match = Rational(count) == cell.predicted;
  return cell;
}

std::map<BetaClass, std::uint64_t> class_sizes(const WeightTable& w) {
  std::map<BetaClass, std::uint64_t> out;
  for (auto c : kRows) out[c] = 0;
  for (auto c : w.classes) ++out[c];
  return out;
}

Rational class_size_prediction(const CodeContext& ctx, BetaClass c) {
  const Rational Q(ctx.big_q()), pd = pow_r(ctx.base().p(), ctx.d());
  switch (c) {
    case BetaClass::UnitInS: return pd * (Q - 1);
    case BetaClass::UnitNotInS: return (Q - pd) * (Q - 1);
    case BetaClass::PrimeTeichmuller: return Q - 1;
    default: return Rational(1);
  }
}

}  // namespace

bool TableReport::all_match() const {
  return std::all_of(cells.begin(), cells.end(), [](const TableCell& c) { return c.match; });
}

void check_subfield_setting(const CodeContext& ctx, bool require_e_one, bool require_e_prime_one) {
  const unsigned p = ctx.base().p(), r = ctx.base().degree();
  if (!ctx.s_prime())
    throw Error(Errc::PreconditionViolated, "s = " + std::to_string(ctx.tower().s()) + " is not a multiple of p");
  if (require_e_one && ctx.e() != 1)
    throw Error(Errc::PreconditionViolated, "e = " + std::to_string(ctx.e()) + " but e = 1 is required");
  if (require_e_prime_one && ctx.e_prime() != 1)
    throw Error(Errc::PreconditionViolated, "e' = " + std::to_string(ctx.e_prime()) + " but e' = 1 is required");
  if (!ctx.dual_in_subfield())
    throw Error(Errc::PreconditionViolated, "the dual of V is not contained in F_{Q'}");
  if (ctx.d() < r * (p - 1) * *ctx.s_prime())
    throw Error(Errc::PreconditionViolated, "d = " + std::to_string(ctx.d()) + " < r(p-1)s'");
}

TableReport complete_weight_table(const CodeContext& ctx, const WeightTable& w) {
  check_subfield_setting(ctx, true, false);
  const GaloisRing& R = ctx.base();
  const Rational q(R.q()), Q(ctx.big_q()), pd = pow_r(R.p(), ctx.d());
  const Rational Qq2 = Q / (q * q), Qq1 = Q / q;

  std::vector<SymbolClass> sym(R.size());
  for (std::uint64_t a = 0; a < R.size(); ++a) sym[a] = ctx.classify_symbol(R.from_index(a));
  const std::vector<std::pair<SymbolClass, std::string>> cols{
      {SymbolClass::Unit, "a_unit"}, {SymbolClass::PrimeTeichmuller, "a_p_teichmuller"}, {SymbolClass::Zero, "a_zero"}};

  std::map<BetaClass, std::vector<Rational>> predicted{
      {BetaClass::UnitInS, {Qq2 * pd, Qq2 * (pd - q), pd * (Qq2 - 1) + Qq1 * (q - 1)}},
      {BetaClass::UnitNotInS, {Qq2 * pd, Qq2 * pd, pd * (Qq2 - 1)}},
      {BetaClass::PrimeTeichmuller, {Rational(0), Qq1 * pd, (Qq1 - 1) * pd}},
      {BetaClass::Zero, {Rational(0), Rational(0), (Q - 1) * pd}},
  };
  // the zero row counts n = (Q-1)p^d zeros; its nonzero columns are vacuous but reported
  std::map<std::pair<BetaClass, SymbolClass>, std::set<std::uint64_t>> seen;
  for (std::size_t b = 0; b < w.counts.size(); ++b)
    for (std::uint64_t a = 0; a < R.size(); ++a) seen[{w.classes[b], sym[a]}].insert(w.counts[b][a]);

  TableReport rep{"complete_weight", {}};
  auto sizes = class_sizes(w);
  for (auto c : kRows) {
    for (std::size_t j = 0; j < cols.size(); ++j)
      rep.cells.push_back(make_cell(c, cols[j].second, predicted[c][j], seen[{c, cols[j].first}]));
    rep.cells.push_back(count_cell(c, class_size_prediction(ctx, c), sizes[c]));
  }
  return rep;
}

TableReport hom_weight_table(const CodeContext& ctx, const WeightTable& w) {
  check_subfield_setting(ctx, false, true);
  const Rational q(ctx.q()), Q(ctx.big_q()), e(ctx.e()), pd = pow_r(ctx.base().p(), ctx.d());
  std::map<BetaClass, std::pair<Rational, Rational>> predicted{
      {BetaClass::UnitInS, {Q * (q - 1) * (pd - 1) / e, Q * (pd - 1) / q}},
      {BetaClass::UnitNotInS, {Q * (q - 1) * pd / e, Q * pd / q}},
      {BetaClass::PrimeTeichmuller, {Q * (q - 1) * pd / e, Q * pd / q}},
      {BetaClass::Zero, {Rational(0), Rational(0)}},
  };
  std::map<BetaClass, std::set<std::uint64_t>> hom, tilde;
  for (std::size_t b = 0; b < w.classes.size(); ++b) {
    hom[w.classes[b]].insert(w.hom[b]);
    tilde[w.classes[b]].insert(w.hom_tilde[b]);
  }
  TableReport rep{"hom_weight", {}};
  auto sizes = class_sizes(w);
  for (auto c : kRows) {
    rep.cells.push_back(make_cell(c, "w_hom", predicted[c].first, hom[c]));
    rep.cells.push_back(make_cell(c, "w_hom_tilde", predicted[c].second, tilde[c]));
    rep.cells.push_back(count_cell(c, class_size_prediction(ctx, c), sizes[c]));
  }
  return rep;
}

CodeParameters predicted_parameters(const CodeContext& ctx) {
  check_subfield_setting(ctx, false, true);
  const Rational q(ctx.q()), Q(ctx.big_q()), e(ctx.e()), pd = pow_r(ctx.base().p(), ctx.d());
  return {(Q - 1) * pd / e, pd * Q * (q - 1) / (e * q), (Q - 1) * pd / (q * (q - 1)), pd * Q / (q * q)};
}

}  // namespace grcodes
