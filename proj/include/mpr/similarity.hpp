#pragma once

#include <utility>
#include <vector>

#include "mpr/matrix.hpp"

namespace mpr {

/// Complete GL_d(q)-similarity invariant: the characteristic polynomial and,
/// for each irreducible factor f of it, the ranks of f(A)^j for j = 1..d.
struct SimilarityInvariant {
  FqPoly charpoly;
  std::vector<std::pair<FqPoly, std::vector<unsigned>>> rank_profile;

  friend bool operator==(const SimilarityInvariant&, const SimilarityInvariant&) = default;
};

SimilarityInvariant similarity_invariant(const MatrixRing& ring, const Matrix& a);
bool gl_similar(const MatrixRing& ring, const Matrix& a, const Matrix& b);
/// Conjugate in PGL_d(q): lambda * a similar to b for some nonzero lambda.
bool pgl_similar(const MatrixRing& ring, const Matrix& a, const Matrix& b);

/// One block-companion representative per conjugacy class of GL_d(q), from
/// the invariant-factor chains f1 | f2 | ... | fr with deg sum d.
std::vector<Matrix> rational_canonical_forms(const MatrixRing& ring);

/// #{k in [1, o(x)) coprime to o(x) : x^k is PGL-conjugate to x}, i.e. |N:C| in PGL_d(q).
unsigned pgl_index_by_similarity(const MatrixRing& ring, const Matrix& x);

}  // namespace mpr
