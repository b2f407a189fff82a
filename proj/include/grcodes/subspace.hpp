#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grcodes/finite_field.hpp"

namespace grcodes {

namespace linalg {

using Matrix = std::vector<std::vector<std::uint32_t>>;

/// Reduced row echelon form over F_p, in place; returns the rank.
std::size_t row_reduce(Matrix& rows, std::uint32_t p);

/// Basis of {y : rows * y = 0} over F_p, y of length `cols`.
Matrix null_space(Matrix rows, std::size_t cols, std::uint32_t p);

}  // namespace linalg

/// F_p-rank of a list of field elements.
std::size_t fp_rank(const FiniteField& F, std::span<const FieldElem> elems);
bool fp_independent(const FiniteField& F, std::span<const FieldElem> elems);

/// Independent basis of the F_p-span, in reduced echelon form (deterministic).
std::vector<FieldElem> echelon_basis(const FiniteField& F, std::span<const FieldElem> elems);

/// All elements of the F_p-span, sorted.
std::vector<FieldElem> span_elements(const FiniteField& F, std::span<const FieldElem> basis);

/// The first k powers 1, g, ..., g^{k-1} of a generator g of the subfield of order p^k.
std::vector<FieldElem> subfield_basis(const FiniteField& F, unsigned k);

/// Annihilator of span(basis) under (a, x) -> Tr(a x). With k = 0 the ambient space
/// is F itself; otherwise it is the subfield of order p^k (which must contain the
/// basis) and the trace is the absolute trace of that subfield.
std::vector<FieldElem> dual_subspace(const FiniteField& F, std::span<const FieldElem> basis, unsigned k = 0);

}  // namespace grcodes
