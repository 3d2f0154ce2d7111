#include "mpr/similarity.hpp"

#include <algorithm>
#include <numeric>

namespace mpr {

SimilarityInvariant similarity_invariant(const MatrixRing& ring, const Matrix& a) {
  SimilarityInvariant inv;
  inv.charpoly = ring.charpoly(a);
  auto factors = fq_factor(ring.field(), inv.charpoly);
  factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
  for (auto& f : factors) {
    const Matrix fa = ring.evaluate(f, a);
    std::vector<unsigned> ranks;
    Matrix power = fa;
    for (unsigned j = 1; j <= ring.dim(); ++j) {
      ranks.push_back(ring.rank(power));
      power = ring.mul(power, fa);
    }
    inv.rank_profile.emplace_back(std::move(f), std::move(ranks));
  }
  return inv;
}

bool gl_similar(const MatrixRing& ring, const Matrix& a, const Matrix& b) {
  return similarity_invariant(ring, a) == similarity_invariant(ring, b);
}

bool pgl_similar(const MatrixRing& ring, const Matrix& a, const Matrix& b) {
  const SimilarityInvariant target = similarity_invariant(ring, b);
  for (unsigned lambda = 1; lambda < ring.field().size(); ++lambda) {
    if (similarity_invariant(ring, ring.scale(static_cast<FieldElement>(lambda), a)) == target) return true;
  }
  return false;
}

namespace {

void chains(const MatrixRing& ring, const FqPoly& prev, unsigned remaining, std::vector<FqPoly>& current,
            std::vector<Matrix>& out) {
  const unsigned q = ring.field().size();
  if (remaining == 0) {
    if (current.back()[0] != 0) out.push_back(ring.block_companion(current));
    return;
  }
  const unsigned prev_degree = prev.empty() ? 0 : static_cast<unsigned>(prev.size()) - 1;
  // The next invariant factor is prev * g; the first one is any monic of degree >= 1.
  for (unsigned next_degree = std::max(prev_degree, 1u); next_degree <= remaining; ++next_degree) {
    const unsigned g_degree = prev.empty() ? next_degree : next_degree - prev_degree;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < g_degree; ++i) count *= q;
    for (std::uint64_t c = 0; c < count; ++c) {
      const FqPoly g = fq_monic_from_code(g_degree, c, q);
      const FqPoly next = prev.empty() ? g : fq_mul(ring.field(), prev, g);
      current.push_back(next);
      chains(ring, next, remaining - next_degree, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<Matrix> rational_canonical_forms(const MatrixRing& ring) {
  std::vector<Matrix> out;
  std::vector<FqPoly> current;
  chains(ring, {}, ring.dim(), current, out);
  return out;
}

unsigned pgl_index_by_similarity(const MatrixRing& ring, const Matrix& x) {
  const std::uint64_t s = ring.projective_order(x);
  unsigned count = 0;
  for (std::uint64_t k = 1; k < s || (s == 1 && k == 1); ++k) {
    if (std::gcd(k, s) != 1) continue;
    if (pgl_similar(ring, ring.pow(x, k), x)) ++count;
  }
  return count;
}

}  // namespace mpr
