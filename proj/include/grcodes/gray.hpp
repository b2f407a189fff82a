#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "grcodes/codes.hpp"

namespace grcodes {

/// F_q listed as 0, then xi-bar^0, xi-bar^1, ..., xi-bar^{q-2}.
std::vector<FieldElem> gray_field_order(const FiniteField& F);

/// psi: R -> F_q^q, beta = beta_0 + p beta_1 maps to the values of
/// beta_0-bar x + beta_1-bar on gray_field_order. Tabulated per ring index.
class GrayMap {
 public:
  explicit GrayMap(const GaloisRing& R);

  std::uint32_t q() const noexcept { return q_; }
  const std::uint32_t* image(std::uint64_t ring_index) const noexcept { return table_.data() + ring_index * q_; }
  std::vector<std::uint32_t> map(const RingElem& beta) const;
  /// Coordinatewise extension to a word given as canonical ring indices.
  std::vector<std::uint32_t> map_word(const std::vector<std::uint32_t>& word) const;

 private:
  const GaloisRing* ring_;
  std::uint32_t q_;
  std::vector<std::uint32_t> table_;
};

/// Evaluation vectors of all q^2 polynomials a x + b over gray_field_order.
std::vector<std::vector<std::uint32_t>> affine_code(const FiniteField& F);

struct GrayImageReport {
  std::uint64_t length = 0;
  std::uint64_t words = 0;     // images computed, one per beta
  std::uint64_t distinct = 0;  // distinct images
  std::map<std::uint64_t, std::uint64_t> weights;    // Hamming weight -> multiplicity
  std::map<std::uint64_t, std::uint64_t> distances;  // distance over unordered pairs -> multiplicity
  std::uint64_t min_distance = 0;                    // smallest nonzero distance
  bool two_distance = false;                         // exactly two nonzero distances
};

/// Maps every codeword of C (or of the punctured code) and compares all pairs.
GrayImageReport analyze_gray_image(const CodeContext& ctx, bool tilde, unsigned threads);

}  // namespace grcodes
