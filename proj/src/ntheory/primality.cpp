#include <array>
#include <cstdint>

#include "montgomery.hpp"
#include "mpr/errors.hpp"
#include "mpr/ntheory.hpp"

namespace mpr {
namespace {

using detail::Montgomery;

constexpr std::array<std::uint32_t, 13> kFirstPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Sinclair's 7-base set, deterministic below 2^64.
constexpr std::array<std::uint64_t, 7> kBases64 = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};

// The first 13 primes as bases are deterministic below this bound
// (Sorenson and Webster, psi_13).
const u128 kPsi13 = static_cast<u128>(3317044064679887ULL) * 1000000000ULL + 385961981ULL;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

bool strong_probable_prime64(std::uint64_t n, std::uint64_t base) {
  base %= n;
  if (base == 0) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  std::uint64_t x = powmod64(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const Montgomery& mg, u128 base) {
  const u128 n = mg.modulus();
  base %= n;
  if (base == 0) return true;
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  const u128 one = mg.one();
  const u128 minus_one = mg.sub(0, one);
  u128 x = mg.pow(mg.to_mont(base), d);
  if (x == one || x == minus_one) return true;
  for (int r = 1; r < s; ++r) {
    x = mg.mul(x, x);
    if (x == minus_one) return true;
  }
  return false;
}

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(i128 a, u128 n) {
  u128 aa = a >= 0 ? static_cast<u128>(a) % n : (n - static_cast<u128>(-a) % n) % n;
  int result = 1;
  while (aa != 0) {
    while ((aa & 1) == 0) {
      aa >>= 1;
      const auto r = static_cast<unsigned>(n & 7);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(aa, n);
    if ((aa & 3) == 3 && (n & 3) == 3) result = -result;
    aa %= n;
  }
  return n == 1 ? result : 0;
}

u128 to_residue(i128 v, u128 n) {
  return v >= 0 ? static_cast<u128>(v) % n : (n - static_cast<u128>(-v) % n) % n;
}

// Strong Lucas probable-prime test with Selfridge parameters.
bool strong_lucas_probable_prime(const Montgomery& mg) {
  const u128 n = mg.modulus();
  const u128 root = isqrt(n);
  if (root * root == n) return false;

  i128 D = 5;
  while (true) {
    const int j = jacobi(D, n);
    if (j == -1) break;
    if (j == 0 && static_cast<u128>(abs128(D)) != n) return false;
    D = D > 0 ? -(D + 2) : -D + 2;
  }
  const i128 Q = (1 - D) / 4;

  const u128 d_m = mg.to_mont(to_residue(D, n));
  const u128 q_m = mg.to_mont(to_residue(Q, n));
  auto half = [&](u128 x) {
    // x/2 mod n; Montgomery form is linear so halving commutes with it.
    if (x & 1) {
      return (x >> 1) + (n >> 1) + 1;  // (x + n) / 2 without overflow
    }
    return x >> 1;
  };

  u128 k = n + 1;
  int s = 0;
  while ((k & 1) == 0) { k >>= 1; ++s; }

  int top = 127;
  while (((k >> top) & 1) == 0) --top;

  u128 U = mg.one();  // U_1
  u128 V = mg.one();  // V_1 with P = 1
  u128 Qk = q_m;
  for (int bit = top - 1; bit >= 0; --bit) {
    U = mg.mul(U, V);
    V = mg.sub(mg.mul(V, V), mg.add(Qk, Qk));
    Qk = mg.mul(Qk, Qk);
    if ((k >> bit) & 1) {
      const u128 nu = half(mg.add(U, V));
      const u128 nv = half(mg.add(mg.mul(d_m, U), V));
      U = nu;
      V = nv;
      Qk = mg.mul(Qk, q_m);
    }
  }
  if (U == 0 || V == 0) return true;
  for (int r = 1; r < s; ++r) {
    V = mg.sub(mg.mul(V, V), mg.add(Qk, Qk));
    if (V == 0) return true;
    Qk = mg.mul(Qk, Qk);
  }
  return false;
}

}  // namespace

bool is_prime(i128 n) {
  if (n < 2) throw RangeError("is_prime: argument must satisfy 2 <= n < 2^127");
  const auto un = static_cast<u128>(n);
  for (const auto p : kFirstPrimes) {
    if (un == p) return true;
    if (un % p == 0) return false;
  }
  if (un < 43 * 43) return true;

  if (un <= UINT64_MAX) {
    const auto n64 = static_cast<std::uint64_t>(un);
    for (const auto b : kBases64) {
      if (!strong_probable_prime64(n64, b)) return false;
    }
    return true;
  }

  const Montgomery mg(un);
  for (const auto p : kFirstPrimes) {
    if (!strong_probable_prime(mg, p)) return false;
  }
  if (un < kPsi13) return true;
  // Beyond the proven witness bound: add a strong Lucas test (BPSW).
  return strong_lucas_probable_prime(mg);
}

u128 powmod(u128 base, u128 exp, u128 mod) {
  if (mod == 0) throw DomainError("powmod: zero modulus");
  if (mod == 1) return 0;
  if (mod <= UINT64_MAX) {
    u128 r = 1, b = base % mod;
    while (exp != 0) {
      if (exp & 1) r = r * b % mod;
      b = b * b % mod;
      exp >>= 1;
    }
    return r;
  }
  if (mod & 1) {
    const Montgomery mg(mod);
    return mg.from_mont(mg.pow(mg.to_mont(base), exp));
  }
  // Even modulus above 2^64: shift-and-add multiplication.
  auto mulmod = [mod](u128 a, u128 b) {
    u128 r = 0;
    a %= mod;
    while (b != 0) {
      if (b & 1) r = (r >= mod - a) ? r - (mod - a) : r + a;
      a = (a >= mod - a) ? a - (mod - a) : a + a;
      b >>= 1;
    }
    return r;
  };
  u128 r = 1, b = base % mod;
  while (exp != 0) {
    if (exp & 1) r = mulmod(r, b);
    b = mulmod(b, b);
    exp >>= 1;
  }
  return r;
}

}  // namespace mpr
