#include <algorithm>
#include <cstdint>
#include <mutex>
#include <random>
#include <vector>

#include "montgomery.hpp"
#include "mpr/errors.hpp"
#include "mpr/factor_cache.hpp"
#include "mpr/ntheory.hpp"

namespace mpr {
namespace {

using detail::Montgomery;

constexpr std::uint32_t kTrialLimit = 1'000'000;
constexpr u128 kTrialLimitSquared = static_cast<u128>(kTrialLimit) * kTrialLimit;
constexpr std::uint64_t kMaxRhoIterations = std::uint64_t{1} << 34;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's cycle finding with batched gcd. Parameters come from a generator
// seeded by n, so the same input always takes the same path.
u128 rho_split(u128 n) {
  const Montgomery mg(n);
  std::mt19937_64 gen(static_cast<std::uint64_t>(n) ^ static_cast<std::uint64_t>(n >> 64));
  const u128 x0 = (static_cast<u128>(gen()) << 64 | gen()) % n;
  u128 c = (static_cast<u128>(gen()) << 64 | gen()) % (n - 1) + 1;
  constexpr std::uint64_t kBatch = 128;

  for (int attempt = 0; attempt < 64; ++attempt, c = c % (n - 1) + 1) {
    const u128 cm = mg.to_mont(c);
    auto f = [&](u128 v) { return mg.add(mg.mul(v, v), cm); };
    u128 y = mg.to_mont(x0), x = y, ys = y, q = mg.one(), g = 1;
    std::uint64_t r = 1, total = 0;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t steps = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = f(y);
          q = mg.mul(q, mg.sub(x, y));
        }
        g = gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      total += 2 * r;
      r *= 2;
      if (total > kMaxRhoIterations) {
        throw RangeError("factorize: cycle finding exceeded its iteration budget for " +
                         to_string(n));
      }
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(mg.sub(x, ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
  throw RangeError("factorize: cycle finding failed for " + to_string(n));
}

void split_into_primes(u128 n, std::vector<u128>& out) {
  if (n == 1) return;
  if (n < kTrialLimitSquared || is_prime(static_cast<i128>(n))) {
    out.push_back(n);
    return;
  }
  const u128 d = rho_split(n);
  split_into_primes(d, out);
  split_into_primes(n / d, out);
}

}  // namespace

i128 Factorization::product() const {
  i128 acc = 1;
  for (const auto& pp : factors) acc = checked_mul(acc, checked_pow(pp.prime, pp.exponent, "factor power"), "factor product");
  return acc;
}

std::string Factorization::str() const {
  std::string out;
  for (const auto& pp : factors) {
    if (!out.empty()) out += ' ';
    out += to_string(pp.prime) + "^" + std::to_string(pp.exponent);
  }
  return out;
}

Factorization factorize(i128 n) {
  if (n == 0) throw DomainError("factorize: zero has no factorization");
  Factorization result;
  result.value = n;
  u128 m = static_cast<u128>(abs128(n));
  if (m == 1) return result;

  const auto cache = factor_cache();
  if (cache) {
    if (auto hit = cache->lookup(static_cast<i128>(m))) {
      hit->value = n;
      return *hit;
    }
  }

  std::vector<u128> primes;
  for (const std::uint32_t p : small_primes()) {
    if (static_cast<u128>(p) * p > m) break;
    if (m <= UINT64_MAX) {
      auto m64 = static_cast<std::uint64_t>(m);
      while (m64 % p == 0) {
        m64 /= p;
        primes.push_back(p);
      }
      m = m64;
    } else {
      while (m % p == 0) {
        m /= p;
        primes.push_back(p);
      }
    }
  }
  split_into_primes(m, primes);
  std::sort(primes.begin(), primes.end());

  for (const u128 p : primes) {
    if (!result.factors.empty() && static_cast<u128>(result.factors.back().prime) == p) {
      ++result.factors.back().exponent;
    } else {
      result.factors.push_back({static_cast<i128>(p), 1});
    }
  }
  if (cache) cache->store(result);
  return result;
}

i128 largest_prime_factor(i128 n) {
  if (n == 0) throw DomainError("largest_prime_factor: zero has no prime factors");
  const auto f = factorize(n);
  return f.factors.empty() ? i128{1} : f.factors.back().prime;
}

}  // namespace mpr
