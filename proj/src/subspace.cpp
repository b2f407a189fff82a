#include "grcodes/subspace.hpp"

#include <algorithm>

#include "grcodes/errors.hpp"
#include "grcodes/numtheory.hpp"

namespace grcodes {

namespace linalg {

std::size_t row_reduce(Matrix& rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto inv = static_cast<std::uint32_t>(nt::mod_inverse(rows[rank][c], p));
    for (auto& v : rows[rank]) v = static_cast<std::uint32_t>(std::uint64_t{v} * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint32_t f = rows[r][c];
      for (std::size_t j = 0; j < cols; ++j)
        rows[r][j] = static_cast<std::uint32_t>((rows[r][j] + std::uint64_t{p - f} * rows[rank][j]) % p);
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

Matrix null_space(Matrix rows, std::size_t cols, std::uint32_t p) {
  for (auto& r : rows) r.resize(cols, 0);
  row_reduce(rows, p);
  std::vector<std::size_t> pivot_col;
  for (const auto& r : rows) {
    std::size_t c = 0;
    while (r[c] == 0) ++c;
    pivot_col.push_back(c);
  }
  Matrix out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<std::uint32_t> y(cols, 0);
    y[free] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) y[pivot_col[r]] = (p - rows[r][free]) % p;
    out.push_back(std::move(y));
  }
  return out;
}

}  // namespace linalg

namespace {

linalg::Matrix coord_rows(const FiniteField& F, std::span<const FieldElem> elems) {
  linalg::Matrix rows;
  for (auto a : elems) rows.push_back(F.coords(a));
  return rows;
}

}  // namespace

std::size_t fp_rank(const FiniteField& F, std::span<const FieldElem> elems) {
  auto rows = coord_rows(F, elems);
  return linalg::row_reduce(rows, F.characteristic());
}

bool fp_independent(const FiniteField& F, std::span<const FieldElem> elems) {
  return fp_rank(F, elems) == elems.size();
}

std::vector<FieldElem> echelon_basis(const FiniteField& F, std::span<const FieldElem> elems) {
  auto rows = coord_rows(F, elems);
  linalg::row_reduce(rows, F.characteristic());
  std::vector<FieldElem> out;
  for (const auto& r : rows) out.push_back(F.from_coords(r));
  return out;
}

std::vector<FieldElem> span_elements(const FiniteField& F, std::span<const FieldElem> basis) {
  std::vector<FieldElem> out{0};
  for (auto b : basis) {
    const std::size_t size = out.size();
    for (std::uint32_t c = 1; c < F.characteristic(); ++c)
      for (std::size_t i = 0; i < size; ++i) out.push_back(F.add(out[i], F.scale(b, c)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FieldElem> subfield_basis(const FiniteField& F, unsigned k) {
  if (k == 0 || F.degree() % k != 0)
    throw Error(Errc::InvalidArgument, "subfield degree " + std::to_string(k) + " does not divide " +
                                           std::to_string(F.degree()));
  const std::uint64_t sub_order = nt::ipow(F.characteristic(), k) - 1;
  const FieldElem g = F.exp((F.size() - 1) / sub_order);
  std::vector<FieldElem> out;
  FieldElem cur = F.one();
  for (unsigned j = 0; j < k; ++j) {
    out.push_back(cur);
    cur = F.mul(cur, g);
  }
  return out;
}

std::vector<FieldElem> dual_subspace(const FiniteField& F, std::span<const FieldElem> basis, unsigned k) {
  if (k == 0) k = F.degree();
  const auto ambient = subfield_basis(F, k);
  for (auto a : basis)
    if (!F.in_subfield(a, k))
      throw Error(Errc::InvalidArgument, "element " + F.to_literal(a) + " is outside the ambient subfield");
  linalg::Matrix rows;
  for (auto a : basis) {
    std::vector<std::uint32_t> row;
    for (auto e : ambient) row.push_back(F.subfield_trace(F.mul(a, e), k));
    rows.push_back(std::move(row));
  }
  std::vector<FieldElem> out;
  for (const auto& y : linalg::null_space(rows, k, F.characteristic())) {
    FieldElem v = 0;
    for (unsigned j = 0; j < k; ++j) v = F.add(v, F.scale(ambient[j], y[j]));
    out.push_back(v);
  }
  return echelon_basis(F, out);
}

}  // namespace grcodes
