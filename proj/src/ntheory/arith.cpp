#include "mpr/errors.hpp"
#include "mpr/ntheory.hpp"

namespace mpr {

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_phi: argument must be positive");
  std::uint64_t result = n;
  for (const auto& pp : factorize(static_cast<i128>(n)).factors) {
    const auto p = static_cast<std::uint64_t>(pp.prime);
    result = result / p * (p - 1);
  }
  return result;
}

int moebius(std::uint64_t n) {
  if (n == 0) throw DomainError("moebius: argument must be positive");
  const auto f = factorize(static_cast<i128>(n));
  for (const auto& pp : f.factors) {
    if (pp.exponent > 1) return 0;
  }
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t multiplicative_order(i128 a, i128 r) {
  if (r < 2 || !is_prime(r)) throw DomainError("multiplicative_order: modulus must be prime");
  const auto ur = static_cast<u128>(r);
  const u128 ua = a >= 0 ? static_cast<u128>(a) % ur : (ur - static_cast<u128>(-a) % ur) % ur;
  if (ua == 0) throw DomainError("multiplicative_order: base divisible by modulus");
  if (r - 1 > static_cast<i128>(UINT64_MAX)) throw RangeError("multiplicative_order: group order exceeds 64 bits");
  auto order = static_cast<std::uint64_t>(r - 1);
  for (const auto& pp : factorize(r - 1).factors) {
    const auto p = static_cast<std::uint64_t>(pp.prime);
    for (unsigned e = 0; e < pp.exponent; ++e) {
      if (powmod(ua, order / p, ur) != 1) break;
      order /= p;
    }
  }
  return order;
}

}  // namespace mpr
