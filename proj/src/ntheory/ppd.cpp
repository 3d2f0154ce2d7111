#include <cmath>
#include <set>

#include "mpr/errors.hpp"
#include "mpr/parallel.hpp"
#include "mpr/ntheory.hpp"

namespace mpr {

PpdResult primitive_prime_divisors(i128 base, unsigned exponent) {
  if (base < 2) throw DomainError("primitive_prime_divisors: base must be >= 2");
  if (exponent < 2) throw DomainError("primitive_prime_divisors: exponent must be >= 2");
  try {
    checked_sub(checked_pow(base, exponent), 1);
  } catch (const RangeError&) {
    throw RangeError("primitive_prime_divisors: " + to_string(base) + "^" + std::to_string(exponent) +
                     " - 1 exceeds the signed 128-bit range");
  }

  // Prime divisors of a^d - 1, gathered through a^d - 1 = prod_{k | d} Phi_k(a).
  std::set<i128> candidates;
  for (unsigned k = 1; k <= exponent; ++k) {
    if (exponent % k != 0) continue;
    for (const auto& pp : factorize(cyclotomic_eval(k, base)).factors) candidates.insert(pp.prime);
  }

  PpdResult result;
  result.base = base;
  result.exponent = exponent;
  for (const i128 r : candidates) {
    const auto ur = static_cast<u128>(r);
    const auto ua = static_cast<u128>(base) % ur;
    bool primitive = true;
    for (unsigned k = 1; k < exponent && primitive; ++k) {
      if (powmod(ua, k, ur) == 1 % ur) primitive = false;  // r | a^k - 1
    }
    if (primitive) result.primitive_primes.push_back(r);
  }
  if (!result.primitive_primes.empty()) result.largest = result.primitive_primes.back();
  result.is_zsigmondy_exception = result.primitive_primes.empty();
  return result;
}

const char* to_string(StewartStatus s) {
  switch (s) {
    case StewartStatus::Holds: return "holds";
    case StewartStatus::Fails: return "fails";
    case StewartStatus::Marginal: return "marginal";
    case StewartStatus::OutOfRange: return "out_of_range";
  }
  return "?";
}

double stewart_rhs(unsigned n) {
  if (n < 4) throw DomainError("stewart_rhs: n must be >= 4 so that log log n > 0");
  const double ln = std::log(static_cast<double>(n));
  return static_cast<double>(n) * std::exp(ln / (104.0 * std::log(ln)));
}

StewartRow stewart_row(i128 base, unsigned n) {
  if (base < 2 || !is_prime(base)) throw DomainError("stewart_row: base must be prime");
  StewartRow row;
  row.base = base;
  row.index = n;
  row.rhs = stewart_rhs(n);
  row.phi_value = cyclotomic_eval(n, base);
  row.lhs = largest_prime_factor(row.phi_value);

  const auto lhs = static_cast<double>(row.lhs);
  if (std::fabs(lhs - row.rhs) <= kStewartGuardBand * row.rhs) {
    row.status = StewartStatus::Marginal;
  } else {
    row.status = lhs > row.rhs ? StewartStatus::Holds : StewartStatus::Fails;
  }
  return row;
}

std::vector<StewartRow> stewart_table(i128 base, unsigned n_min, unsigned n_max, unsigned workers) {
  if (n_min < 4 || n_max < n_min) throw DomainError("stewart_table: need 4 <= n_min <= n_max");
  if (n_max > kMaxCyclotomicIndex) throw RangeError("stewart_table: n_max above " + std::to_string(kMaxCyclotomicIndex));
  if (base < 2 || !is_prime(base)) throw DomainError("stewart_table: base must be prime");
  return parallel_map(n_max - n_min + 1, workers, [&](std::size_t i) {
    const auto n = static_cast<unsigned>(n_min + i);
    try {
      return stewart_row(base, n);
    } catch (const RangeError&) {
      StewartRow row;
      row.base = base;
      row.index = n;
      row.rhs = stewart_rhs(n);
      row.status = StewartStatus::OutOfRange;
      return row;
    }
  });
}

}  // namespace mpr
