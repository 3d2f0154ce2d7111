#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mpr {

using i128 = __int128;
using u128 = unsigned __int128;

inline constexpr i128 kI128Max = static_cast<i128>(~u128{0} >> 1);

std::string to_string(i128 v);
std::string to_string(u128 v);

/// Parses an optionally signed decimal integer. Throws RangeError on overflow
/// and DomainError on malformed text.
i128 parse_i128(std::string_view text);

// Checked arithmetic; each throws RangeError naming `what` on overflow.
i128 checked_add(i128 a, i128 b, const char* what = "addition");
i128 checked_sub(i128 a, i128 b, const char* what = "subtraction");
i128 checked_mul(i128 a, i128 b, const char* what = "multiplication");
i128 checked_pow(i128 base, unsigned exp, const char* what = "power");

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd(i128 a, i128 b);
u128 gcd(u128 a, u128 b);

/// floor(sqrt(n)) for n >= 0.
u128 isqrt(u128 n);

}  // namespace mpr
