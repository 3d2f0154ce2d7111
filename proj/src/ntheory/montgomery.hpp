#pragma once

// Montgomery arithmetic modulo an odd n < 2^127 with R = 2^128.

#include <cstdint>

#include "mpr/int128.hpp"

namespace mpr::detail {

struct Wide {
  u128 hi;
  u128 lo;
};

inline Wide mul_wide(u128 a, u128 b) {
  const auto a0 = static_cast<std::uint64_t>(a), a1 = static_cast<std::uint64_t>(a >> 64);
  const auto b0 = static_cast<std::uint64_t>(b), b1 = static_cast<std::uint64_t>(b >> 64);
  const u128 p00 = static_cast<u128>(a0) * b0;
  const u128 p01 = static_cast<u128>(a0) * b1;
  const u128 p10 = static_cast<u128>(a1) * b0;
  const u128 p11 = static_cast<u128>(a1) * b1;
  const u128 mid = (p00 >> 64) + static_cast<std::uint64_t>(p01) + static_cast<std::uint64_t>(p10);
  return {p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64), (mid << 64) | static_cast<std::uint64_t>(p00)};
}

class Montgomery {
 public:
  explicit Montgomery(u128 n) : n_(n) {
    u128 inv = n;  // correct to 3 bits for odd n
    for (int i = 0; i < 6; ++i) inv *= 2 - n * inv;
    neg_inv_ = ~inv + 1;
    r_mod_ = (~n + 1) % n;  // 2^128 mod n
    u128 r2 = r_mod_;
    for (int i = 0; i < 128; ++i) r2 = add(r2, r2);
    r2_mod_ = r2;
  }

  u128 modulus() const { return n_; }
  u128 one() const { return r_mod_; }

  u128 to_mont(u128 x) const { return mul(x % n_, r2_mod_); }
  u128 from_mont(u128 x) const { return reduce({0, x}); }

  u128 mul(u128 a, u128 b) const { return reduce(mul_wide(a, b)); }

  u128 add(u128 a, u128 b) const {
    const u128 s = a + b;  // < 2n < 2^128
    return s >= n_ ? s - n_ : s;
  }
  u128 sub(u128 a, u128 b) const { return a >= b ? a - b : a + (n_ - b); }

  u128 pow(u128 base_mont, u128 exp) const {
    u128 result = r_mod_;
    while (exp != 0) {
      if (exp & 1) result = mul(result, base_mont);
      base_mont = mul(base_mont, base_mont);
      exp >>= 1;
    }
    return result;
  }

 private:
  u128 reduce(Wide t) const {
    const u128 m = t.lo * neg_inv_;
    const Wide mn = mul_wide(m, n_);
    const u128 lo = t.lo + mn.lo;
    const u128 carry = lo < t.lo ? 1 : 0;
    u128 r = t.hi + mn.hi + carry;
    return r >= n_ ? r - n_ : r;
  }

  u128 n_;
  u128 neg_inv_;
  u128 r_mod_;
  u128 r2_mod_;
};

}  // namespace mpr::detail
