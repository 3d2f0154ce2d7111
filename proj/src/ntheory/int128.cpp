#include "mpr/int128.hpp"

#include <algorithm>
#include <string>

#include "mpr/errors.hpp"

namespace mpr {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(i128 v) {
  if (v >= 0) return to_string(static_cast<u128>(v));
  // Negate in unsigned space so the minimum value is handled too.
  return "-" + to_string(~static_cast<u128>(v) + 1);
}

i128 parse_i128(std::string_view text) {
  if (text.empty()) throw DomainError("empty integer literal");
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw DomainError("malformed integer literal '" + std::string(text) + "'");
  u128 acc = 0;
  const u128 limit = static_cast<u128>(kI128Max) + (negative ? 1 : 0);
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw DomainError("malformed integer literal '" + std::string(text) + "'");
    const auto digit = static_cast<unsigned>(c - '0');
    if (acc > (limit - digit) / 10) throw RangeError("integer literal exceeds 128-bit range: " + std::string(text));
    acc = acc * 10 + digit;
  }
  if (negative) return static_cast<i128>(~acc + 1);
  return static_cast<i128>(acc);
}

i128 checked_add(i128 a, i128 b, const char* what) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw RangeError(std::string(what) + " overflows signed 128-bit range");
  return r;
}

i128 checked_sub(i128 a, i128 b, const char* what) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw RangeError(std::string(what) + " overflows signed 128-bit range");
  return r;
}

i128 checked_mul(i128 a, i128 b, const char* what) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw RangeError(std::string(what) + " overflows signed 128-bit range");
  return r;
}

i128 checked_pow(i128 base, unsigned exp, const char* what) {
  i128 result = 1;
  for (unsigned i = 0; i < exp; ++i) result = checked_mul(result, base, what);
  return result;
}

u128 gcd(u128 a, u128 b) {
  if (a == 0) return b;
  if (b == 0) return a;
  // Binary gcd; u128 division is slow compared to shifts.
  int shift = 0;
  for (u128 t = a | b; (t & 1) == 0; t >>= 1) ++shift;
  auto strip = [](u128 x) {
    while ((x & 1) == 0) x >>= 1;
    return x;
  };
  a = strip(a);
  do {
    b = strip(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

i128 gcd(i128 a, i128 b) {
  return static_cast<i128>(gcd(static_cast<u128>(abs128(a)), static_cast<u128>(abs128(b))));
}

u128 isqrt(u128 n) {
  if (n < 2) return n;
  // Newton iteration from an over-estimate.
  int bits = 0;
  for (u128 t = n; t != 0; t >>= 1) ++bits;
  u128 x = u128{1} << ((bits + 1) / 2);
  while (true) {
    const u128 y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

}  // namespace mpr
