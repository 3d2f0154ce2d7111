#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mpr/field.hpp"

namespace mpr {

inline constexpr unsigned kMaxMatrixDim = 4;

/// Square matrix over a FiniteField, row-major, dimension <= 4.
struct Matrix {
  unsigned d = 0;
  std::array<FieldElement, kMaxMatrixDim * kMaxMatrixDim> e{};

  FieldElement at(unsigned i, unsigned j) const { return e[i * d + j]; }
  FieldElement& at(unsigned i, unsigned j) { return e[i * d + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix&, const Matrix&) = default;
};

/// A Matrix in canonical projective form: invertible, first nonzero entry in
/// row-major order equal to 1. Produced by MatrixRing::canonical.
using ProjectiveMatrix = Matrix;

/// Polynomial over F_q, constant term first, no trailing zeros (zero = empty).
using FqPoly = std::vector<FieldElement>;

/// M_d(F_q) arithmetic bound to one field and dimension.
class MatrixRing {
 public:
  MatrixRing(std::shared_ptr<const FiniteField> field, unsigned d);

  const FiniteField& field() const { return *field_; }
  const std::shared_ptr<const FiniteField>& field_ptr() const { return field_; }
  unsigned dim() const { return d_; }

  Matrix zero() const;
  Matrix identity() const;
  Matrix scalar(FieldElement lambda) const;
  /// From field-element codes, row by row.
  Matrix from_rows(const std::vector<std::vector<unsigned>>& rows) const;

  Matrix mul(const Matrix& a, const Matrix& b) const;
  Matrix add(const Matrix& a, const Matrix& b) const;
  Matrix scale(FieldElement lambda, const Matrix& a) const;
  Matrix pow(Matrix a, std::uint64_t k) const;
  FieldElement det(const Matrix& a) const;
  unsigned rank(const Matrix& a) const;
  /// Inverse of an invertible matrix (DomainError otherwise).
  Matrix inverse(const Matrix& a) const;
  Matrix transpose(const Matrix& a) const;
  /// Entrywise Frobenius x -> x^p.
  Matrix frobenius(const Matrix& a) const;
  /// Inverse-transpose, the graph automorphism.
  Matrix graph(const Matrix& a) const;

  bool is_scalar(const Matrix& a) const;
  /// Scale so the first nonzero entry in row-major order is 1.
  ProjectiveMatrix canonical(const Matrix& a) const;
  /// Least k >= 1 with a^k scalar.
  std::uint64_t projective_order(const Matrix& a) const;

  /// Coefficients of det(xI - a), constant term first, monic of degree d.
  FqPoly charpoly(const Matrix& a) const;
  /// f(a) for a polynomial f.
  Matrix evaluate(const FqPoly& f, const Matrix& a) const;
  /// Companion matrix of a monic polynomial of degree d.
  Matrix companion(const FqPoly& monic) const;
  /// Block-diagonal matrix with the companion matrices of the given monic polynomials.
  Matrix block_companion(const std::vector<FqPoly>& blocks) const;

  /// Position of the matrix in the base-q row-major code space (entry (0,0) most significant).
  std::uint64_t code(const Matrix& a) const;
  Matrix from_code(std::uint64_t code) const;
  std::uint64_t code_space() const { return code_space_; }

  std::string str(const Matrix& a) const;

 private:
  std::shared_ptr<const FiniteField> field_;
  unsigned d_;
  std::uint64_t code_space_;
};

// Polynomial helpers over F_q.
void fq_trim(FqPoly& f);
FqPoly fq_mul(const FiniteField& F, const FqPoly& a, const FqPoly& b);
/// Remainder and quotient of division by a monic polynomial.
std::pair<FqPoly, FqPoly> fq_divmod(const FiniteField& F, const FqPoly& a, const FqPoly& monic);
/// Monic polynomial of the given degree with lower coefficients from the base-q digits of code.
FqPoly fq_monic_from_code(unsigned degree, std::uint64_t code, unsigned q);
/// Factorization into monic irreducibles (with repetition, ascending by degree then code).
std::vector<FqPoly> fq_factor(const FiniteField& F, FqPoly monic);
std::string fq_str(const FqPoly& f);

}  // namespace mpr
