#pragma once

#include <string>
#include <vector>

#include "grcodes/codes.hpp"

namespace grcodes {

/// One predicted cell of a closed-form weight table, with every value the
/// enumeration produced for it. An empty beta class matches any value cell.
struct TableCell {
  BetaClass beta_class;
  std::string column;
  Rational predicted;
  std::vector<std::uint64_t> observed;  // distinct values, ascending
  bool match = false;
};

struct TableReport {
  std::string name;
  std::vector<TableCell> cells;

  bool all_match() const;
};

/// Throws PreconditionViolated unless s = p s', V-bar^perp lies in F_{Q'} and
/// (when require_e_one) e = 1; with require_e_prime_one, e' = 1.
void check_subfield_setting(const CodeContext& ctx, bool require_e_one, bool require_e_prime_one);

/// N_beta(a) by beta class and a class, plus class sizes, for e = 1.
TableReport complete_weight_table(const CodeContext& ctx, const WeightTable& w);

/// w_hom(c_beta), w_hom(c~_beta) and class sizes for e' = 1.
TableReport hom_weight_table(const CodeContext& ctx, const WeightTable& w);

/// Closed-form (n, d_H(C), n~, d_H(C~)) when e' = 1 and V-bar^perp lies in F_{Q'}.
struct CodeParameters {
  Rational n, d, n_tilde, d_tilde;
};
CodeParameters predicted_parameters(const CodeContext& ctx);

}  // namespace grcodes
