#include "mpr/rational.hpp"

#include "mpr/errors.hpp"

namespace mpr {

Rational::Rational(i128 num, i128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = checked_sub(0, num, "rational sign normalization");
    den = checked_sub(0, den, "rational sign normalization");
  }
  const i128 g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const {
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const i128 lhs = checked_mul(a.num_, b.den_, "rational comparison");
  const i128 rhs = checked_mul(b.num_, a.den_, "rational comparison");
  return lhs <=> rhs;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_i128(text));
  return Rational(parse_i128(std::string_view(text).substr(0, slash)),
                  parse_i128(std::string_view(text).substr(slash + 1)));
}

}  // namespace mpr
