#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mpr {

using FieldElement = std::uint8_t;

inline constexpr unsigned kMaxFieldSize = 128;

/// F_q with q = p^a <= 128, elements encoded as integers 0..q-1 whose base-p
/// digits are the coefficients of a polynomial in the generator (constant
/// term least significant). The modulus is the first monic irreducible of
/// degree a when the non-leading coefficients are read as a base-p integer.
class FiniteField {
 public:
  static std::shared_ptr<const FiniteField> build(unsigned p, unsigned a);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return a_; }
  unsigned size() const { return q_; }
  /// Monic modulus, constant term first (length a + 1).
  const std::vector<unsigned>& modulus() const { return modulus_; }
  std::string modulus_str() const;

  FieldElement add(FieldElement x, FieldElement y) const { return add_[x * q_ + y]; }
  FieldElement sub(FieldElement x, FieldElement y) const { return add_[x * q_ + neg_[y]]; }
  FieldElement neg(FieldElement x) const { return neg_[x]; }
  FieldElement mul(FieldElement x, FieldElement y) const { return mul_[x * q_ + y]; }
  /// Multiplicative inverse; x must be nonzero.
  FieldElement inv(FieldElement x) const { return inv_[x]; }
  FieldElement pow(FieldElement x, std::uint64_t k) const;
  /// x -> x^p
  FieldElement frobenius(FieldElement x) const { return frob_[x]; }
  /// Multiplicative order of a nonzero element.
  unsigned order(FieldElement x) const;
  /// The prime-field element with integer value v mod p.
  FieldElement from_int(long v) const;

 private:
  FiniteField(unsigned p, unsigned a, std::vector<unsigned> modulus);

  unsigned p_;
  unsigned a_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<FieldElement> add_, mul_, neg_, inv_, frob_;
};

/// Irreducibility over F_p of a monic polynomial (constant term first), by
/// trial division with every monic polynomial of degree <= deg/2.
bool is_irreducible_mod_p(const std::vector<unsigned>& monic, unsigned p);

}  // namespace mpr
