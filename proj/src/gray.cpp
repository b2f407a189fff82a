#include "grcodes/gray.hpp"

#include <algorithm>

#include "grcodes/kernels.hpp"
#include "grcodes/parallel.hpp"

namespace grcodes {

std::vector<FieldElem> gray_field_order(const FiniteField& F) {
  std::vector<FieldElem> out{F.zero()};
  for (std::uint32_t k = 0; k + 1 < F.size(); ++k) out.push_back(F.exp(k));
  return out;
}

GrayMap::GrayMap(const GaloisRing& R) : ring_(&R), q_(R.q()) {
  const FiniteField& F = R.field();
  auto order = gray_field_order(F);
  table_.resize(R.size() * q_);
  for (std::uint64_t i = 0; i < R.size(); ++i) {
    auto parts = R.teichmuller_decompose(R.from_index(i));
    FieldElem b0 = R.reduce(parts.first), b1 = R.reduce(parts.second);
    for (std::uint32_t j = 0; j < q_; ++j) table_[i * q_ + j] = F.add(F.mul(b0, order[j]), b1);
  }
}

std::vector<std::uint32_t> GrayMap::map(const RingElem& beta) const {
  const std::uint32_t* img = image(ring_->index(beta));
  return {img, img + q_};
}

std::vector<std::uint32_t> GrayMap::map_word(const std::vector<std::uint32_t>& word) const {
  std::vector<std::uint32_t> out;
  out.reserve(word.size() * q_);
  for (auto sym : word) out.insert(out.end(), image(sym), image(sym) + q_);
  return out;
}

std::vector<std::vector<std::uint32_t>> affine_code(const FiniteField& F) {
  auto order = gray_field_order(F);
  std::vector<std::vector<std::uint32_t>> out;
  for (FieldElem a = 0; a < F.size(); ++a)
    for (FieldElem b = 0; b < F.size(); ++b) {
      std::vector<std::uint32_t> w;
      for (auto x : order) w.push_back(F.add(F.mul(a, x), b));
      out.push_back(std::move(w));
    }
  return out;
}

GrayImageReport analyze_gray_image(const CodeContext& ctx, bool tilde, unsigned threads) {
  const GaloisRing& E = ctx.ext();
  GrayMap psi(ctx.base());
  const std::size_t words = E.size();
  std::vector<std::vector<std::uint32_t>> img(words);
  parallel_for(words, threads, [&](std::size_t b) {
    auto beta = E.from_index(b);
    img[b] = psi.map_word(tilde ? ctx.encode_tilde(beta) : ctx.encode(beta));
  });

  GrayImageReport rep;
  rep.words = words;
  rep.length = img.empty() ? 0 : img[0].size();
  for (const auto& w : img) ++rep.weights[rep.length - kernels::count_equal(w.data(), w.size(), 0)];

  std::vector<std::map<std::uint64_t, std::uint64_t>> rows(words);
  parallel_for(words, threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < words; ++j)
      ++rows[i][kernels::hamming_distance(img[i].data(), img[j].data(), rep.length)];
  });
  for (const auto& row : rows)
    for (auto [d, c] : row) rep.distances[d] += c;

  std::sort(img.begin(), img.end());
  rep.distinct = std::unique(img.begin(), img.end()) - img.begin();
  std::uint64_t nonzero = 0;
  for (auto [d, c] : rep.distances)
    if (d != 0) {
      if (nonzero++ == 0) rep.min_distance = d;
    }
  rep.two_distance = nonzero == 2;
  return rep;
}

}  // namespace grcodes
