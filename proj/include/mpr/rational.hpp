#pragma once

#include <compare>
#include <string>

#include "mpr/int128.hpp"

namespace mpr {

/// Exact rational with a positive denominator, always stored reduced.
class Rational {
 public:
  Rational() = default;
  Rational(i128 value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(i128 num, i128 den);

  i128 num() const { return num_; }
  i128 den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  i128 num_ = 0;
  i128 den_ = 1;
};

/// Parses "n" or "n/d".
Rational parse_rational(const std::string& text);

}  // namespace mpr
