#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include "mpr/errors.hpp"
#include "mpr/factor_cache.hpp"
#include "mpr/ntheory.hpp"
#include "mpr/rational.hpp"

using namespace mpr;

namespace {

// Oracles: plain trial division and coprimality counting.
bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) { n /= d; ++e; }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t coprime_count(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

}  // namespace

TEST_CASE("is_prime examples") {
  CHECK(is_prime(2));
  CHECK(is_prime(8191));
  CHECK_FALSE(is_prime(2047));
  CHECK_THROWS_AS(is_prime(1), RangeError);
  CHECK_THROWS_AS(is_prime(-7), RangeError);
}

TEST_CASE("is_prime agrees with trial division below 200000") {
  for (std::uint64_t n = 2; n < 200000; ++n) {
    REQUIRE_MESSAGE(is_prime(static_cast<i128>(n)) == trial_prime(n), n);
  }
}

TEST_CASE("is_prime on large known values") {
  const i128 m61 = (i128{1} << 61) - 1;
  const i128 m89 = (i128{1} << 89) - 1;
  const i128 m107 = (i128{1} << 107) - 1;
  const i128 m127 = kI128Max;  // 2^127 - 1
  CHECK(is_prime(m61));
  CHECK(is_prime(m89));
  CHECK(is_prime(m107));
  CHECK(is_prime(m127));
  // 2^67 - 1 = 193707721 * 761838257287 (Cole).
  CHECK_FALSE(is_prime((i128{1} << 67) - 1));
  // Strong pseudoprimes to several small bases.
  CHECK_FALSE(is_prime(3215031751LL));
  CHECK_FALSE(is_prime(static_cast<i128>(3825123056546413051ULL)));
  CHECK_FALSE(is_prime(m61 * m61));
  CHECK_FALSE(is_prime(m61 * 1000003));
  CHECK_FALSE(is_prime(static_cast<i128>(4294967291ULL) * 4294967279ULL));
}

TEST_CASE("factorize examples") {
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(-1).factors.empty());
  CHECK(factorize(63).factors == std::vector<PrimePower>{{3, 2}, {7, 1}});
  CHECK(factorize(2047).factors == std::vector<PrimePower>{{23, 1}, {89, 1}});
  CHECK(factorize(-12).factors == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("factorize agrees with trial division") {
  for (std::uint64_t n = 1; n < 20000; ++n) {
    const auto f = factorize(static_cast<i128>(n));
    const auto oracle = trial_factor(n);
    REQUIRE(f.factors.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      CHECK(f.factors[i].prime == static_cast<i128>(oracle[i].first));
      CHECK(f.factors[i].exponent == oracle[i].second);
    }
  }
}

TEST_CASE("factorization rebuilds its value") {
  std::mt19937_64 gen(12345);
  const std::vector<i128> pool = {2, 3, 5, 1000003, 4294967291LL, 1000000007, 999999000001LL, 1000000000039LL};
  for (int trial = 0; trial < 200; ++trial) {
    i128 n = 1;
    for (int k = 0; k < 6; ++k) {
      const i128 p = pool[gen() % pool.size()];
      i128 next;
      if (__builtin_mul_overflow(n, p, &next)) break;
      n = next;
    }
    const auto f = factorize(n);
    CHECK(f.product() == n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      CHECK(is_prime(f.factors[i].prime));
      CHECK(f.factors[i].exponent >= 1);
      if (i > 0) CHECK(f.factors[i - 1].prime < f.factors[i].prime);
    }
  }
}

TEST_CASE("factorize splits a product of two 13-digit primes") {
  const i128 p = 999999999989LL, q = 1000000000039LL;
  REQUIRE(is_prime(p));
  REQUIRE(is_prime(q));
  const i128 n = p * q * 7 * 1000003;
  const auto f = factorize(n);
  CHECK(f.factors == std::vector<PrimePower>{{7, 1}, {1000003, 1}, {p, 1}, {q, 1}});
}

TEST_CASE("largest_prime_factor") {
  CHECK(largest_prime_factor(1) == 1);
  CHECK(largest_prime_factor(-1) == 1);
  CHECK(largest_prime_factor(2047) == 89);
  CHECK_THROWS_AS(largest_prime_factor(0), DomainError);
}

TEST_CASE("euler_phi and moebius") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(7) == 6);
  CHECK(euler_phi(12) == coprime_count(12));
  CHECK(euler_phi(12) == 4);
  CHECK_THROWS_AS(euler_phi(0), DomainError);
  for (std::uint64_t n = 1; n <= 500; ++n) CHECK(euler_phi(n) == coprime_count(n));

  CHECK(moebius(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(30) == -1);
  CHECK_THROWS_AS(moebius(0), DomainError);
}

TEST_CASE("euler_phi is multiplicative on coprime arguments") {
  for (std::uint64_t m = 1; m <= 100; ++m) {
    for (std::uint64_t n = 1; n <= 100; ++n) {
      if (std::gcd(m, n) != 1) continue;
      REQUIRE(euler_phi(m * n) == euler_phi(m) * euler_phi(n));
    }
  }
}

TEST_CASE("cyclotomic examples") {
  CHECK(cyclotomic(1).coefficients() == std::vector<i128>{-1, 1});
  CHECK(cyclotomic(2).coefficients() == std::vector<i128>{1, 1});
  CHECK(cyclotomic(6).coefficients() == std::vector<i128>{1, -1, 1});
  CHECK(cyclotomic(6).str() == "x^2 - x + 1");
  CHECK_THROWS_AS(cyclotomic(0), RangeError);
  CHECK_THROWS_AS(cyclotomic(301), RangeError);
  // Phi_105 is the first with a coefficient of magnitude 2.
  i128 biggest = 0;
  for (const auto c : cyclotomic(105).coefficients()) biggest = std::max(biggest, abs128(c));
  CHECK(biggest == 2);
}

TEST_CASE("cyclotomic degree and divisor-sum identities") {
  for (unsigned n = 1; n <= 200; ++n) {
    const auto& phi = cyclotomic(n);
    CHECK(phi.is_monic());
    CHECK(static_cast<std::uint64_t>(phi.degree()) == euler_phi(n));
    std::uint64_t sum = 0;
    IntPolynomial product = IntPolynomial::monomial(0);
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d) continue;
      sum += euler_phi(d);
      product = product * cyclotomic(d);
    }
    CHECK(sum == n);
    CHECK(product == IntPolynomial::monomial(n) - IntPolynomial::monomial(0));
  }
}

TEST_CASE("cyclotomic_eval") {
  CHECK(cyclotomic_eval(1, 2) == 1);
  CHECK(cyclotomic_eval(6, 2) == 3);
  CHECK(cyclotomic_eval(12, 2) == 13);
  CHECK(cyclotomic_eval(13, 2) == 8191);
  CHECK(cyclotomic_eval(30, 2) == 331);
  CHECK(cyclotomic_eval(30, 3) == 8401);
  CHECK_THROWS_AS(cyclotomic_eval(113, 3), RangeError);
}

TEST_CASE("primitive prime divisor examples") {
  const auto e = primitive_prime_divisors(2, 6);
  CHECK(e.primitive_primes.empty());
  CHECK(e.is_zsigmondy_exception);
  CHECK_FALSE(e.largest.has_value());

  const auto four = primitive_prime_divisors(2, 4);
  CHECK(four.primitive_primes == std::vector<i128>{5});
  CHECK(four.largest == i128{5});

  const auto eleven = primitive_prime_divisors(2, 11);
  CHECK(eleven.primitive_primes == std::vector<i128>{23, 89});
  CHECK(eleven.largest == i128{89});

  CHECK_THROWS_AS(primitive_prime_divisors(2, 127), RangeError);
  CHECK_THROWS_AS(primitive_prime_divisors(1, 3), DomainError);
}

TEST_CASE("primitive prime divisors over the sweep") {
  for (i128 a = 2; a <= 20; ++a) {
    for (unsigned d = 2; d <= 30; ++d) {
      PpdResult r;
      try {
        r = primitive_prime_divisors(a, d);
      } catch (const RangeError&) {
        continue;
      }
      // Definition, checked with plain modular exponentiation.
      for (const i128 s : r.primitive_primes) {
        CHECK(s % d == 1);
        CHECK(powmod(static_cast<u128>(a), d, static_cast<u128>(s)) == 1);
        for (unsigned k = 1; k < d; ++k) CHECK(powmod(static_cast<u128>(a), k, static_cast<u128>(s)) != 1);
      }
      // Cross-check against Phi_d(a): the prime factors minus at most one,
      // which is then the largest prime factor of d.
      std::vector<i128> phi_primes;
      for (const auto& pp : factorize(cyclotomic_eval(d, a)).factors) phi_primes.push_back(pp.prime);
      std::vector<i128> removed;
      for (const i128 s : phi_primes) {
        if (std::find(r.primitive_primes.begin(), r.primitive_primes.end(), s) == r.primitive_primes.end()) {
          removed.push_back(s);
        }
      }
      CHECK(removed.size() <= 1);
      if (!removed.empty()) CHECK(removed[0] == largest_prime_factor(d));
      CHECK(r.primitive_primes.size() + removed.size() == phi_primes.size());

      const bool a_plus_one_power_of_two = ((a + 1) & a) == 0;
      const bool expected_exception = (a == 2 && d == 6) || (d == 2 && a_plus_one_power_of_two);
      CHECK_MESSAGE(r.is_zsigmondy_exception == expected_exception, "a=" << static_cast<long>(a) << " d=" << d);
    }
  }
}

TEST_CASE("stewart rows") {
  const auto r13 = stewart_row(2, 13);
  CHECK(r13.lhs == 8191);
  CHECK(r13.phi_value == 8191);
  CHECK(r13.rhs == doctest::Approx(13.0 * std::exp(std::log(13.0) / (104.0 * std::log(std::log(13.0))))));
  CHECK(r13.rhs == doctest::Approx(13.34).epsilon(0.001));
  CHECK(r13.status == StewartStatus::Holds);

  const auto r6 = stewart_row(2, 6);
  CHECK(r6.lhs == 3);
  CHECK(r6.rhs == doctest::Approx(6.18).epsilon(0.001));
  CHECK(r6.status == StewartStatus::Fails);

  const auto r12 = stewart_row(2, 12);
  CHECK(r12.lhs == 13);
  CHECK(r12.rhs == doctest::Approx(12.0 * std::exp(std::log(12.0) / (104.0 * std::log(std::log(12.0))))));
  CHECK(r12.holds());

  CHECK_THROWS_AS(stewart_row(4, 13), DomainError);
  CHECK_THROWS_AS(stewart_row(2, 3), DomainError);
  CHECK_THROWS_AS(stewart_row(3, 113), RangeError);
}

TEST_CASE("rationals") {
  CHECK(Rational(6, 12).str() == "1/2");
  CHECK(Rational(-4, -2).str() == "2");
  CHECK(Rational(3, -9).str() == "-1/3");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2) >= Rational(4, 2));
  CHECK(parse_rational("330/496") == Rational(165, 248));
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("int128 text round trip") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 1000; ++i) {
    const i128 v = static_cast<i128>((static_cast<u128>(gen()) << 64 | gen()) >> 1) * ((i % 2) ? -1 : 1);
    CHECK(parse_i128(to_string(v)) == v);
  }
  CHECK(parse_i128(to_string(kI128Max)) == kI128Max);
  CHECK_THROWS_AS(parse_i128("170141183460469231731687303715884105728"), RangeError);
  CHECK_THROWS_AS(parse_i128("12x"), DomainError);
}

TEST_CASE("factor cache file") {
  const auto path = std::filesystem::temp_directory_path() / "mpr_factor_cache_test.tsv";
  std::filesystem::remove(path);
  {
    std::ofstream out(path);
    out << "63\t3^2 7^1\n";
    out << "garbage line\n";
    out << "64\t2^5\n";        // wrong product
    out << "15\t15^1\n";       // not prime
    out << "2047\t23^1 89^1\n";
  }
  std::vector<std::string> warnings;
  auto cache = std::make_shared<FactorCache>(path, [&](const std::string& w) { warnings.push_back(w); });
  CHECK(cache->size() == 2);
  CHECK(cache->rejected_lines() == 3);
  CHECK(warnings.size() == 3);
  CHECK(cache->lookup(63)->str() == "3^2 7^1");

  set_factor_cache(cache);
  const auto f = factorize(-8191 * 3);
  CHECK(f.value == -8191 * 3);
  CHECK(f.str() == "3^1 8191^1");
  set_factor_cache(nullptr);

  const FactorCache reloaded(path);
  CHECK(reloaded.lookup(8191 * 3).has_value());
  std::filesystem::remove(path);
}

TEST_CASE("stewart table") {
  const auto rows = stewart_table(2, 4, 20, 2);
  REQUIRE(rows.size() == 17);
  CHECK(rows.front().index == 4);
  CHECK(rows[9].index == 13);
  CHECK(rows[9].lhs == 8191);
  for (const auto& r : rows) CHECK(r.status != StewartStatus::OutOfRange);

  const auto big = stewart_table(5, 118, 120);
  unsigned out_of_range = 0;
  for (const auto& r : big) {
    if (r.status == StewartStatus::OutOfRange) {
      ++out_of_range;
      CHECK(r.rhs > 0.0);
    }
  }
  CHECK(out_of_range > 0);
  CHECK(std::string(to_string(StewartStatus::OutOfRange)) == "out_of_range");
}
