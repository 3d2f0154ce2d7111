#pragma once

// Exact integer services: primality, factorization, totient, Moebius,
// cyclotomic polynomials, primitive prime divisors and the Stewart comparator.
// All arithmetic is signed 128-bit; anything wider is rejected with RangeError.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpr/int128.hpp"

namespace mpr {

struct PrimePower {
  i128 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a nonzero integer. Primes strictly increasing.
struct Factorization {
  i128 value = 1;
  std::vector<PrimePower> factors;

  /// Product of prime^exponent, i.e. |value|.
  i128 product() const;
  /// "p1^e1 p2^e2 ..." (empty for +-1).
  std::string str() const;
};

/// Integer polynomial, constant term first. The zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<i128> coefficients);

  static IntPolynomial monomial(unsigned degree, i128 coefficient = 1);

  const std::vector<i128>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  i128 coefficient(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Horner evaluation with overflow checks.
  i128 evaluate(i128 x) const;

  /// Human-readable form, highest degree first, e.g. "x^2 - x + 1".
  std::string str() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Exact division by a monic divisor; throws ConsistencyError if a remainder is left.
  IntPolynomial divide_exact(const IntPolynomial& monic_divisor) const;

 private:
  void trim();
  std::vector<i128> coeffs_;
};

struct PpdResult {
  i128 base = 0;
  unsigned exponent = 0;
  std::vector<i128> primitive_primes;
  std::optional<i128> largest;  // nullopt is the "none" sentinel
  bool is_zsigmondy_exception = false;
};

/// OutOfRange: Phi_n(a) does not fit in 128 bits, so lhs is unknown.
enum class StewartStatus { Holds, Fails, Marginal, OutOfRange };

const char* to_string(StewartStatus s);

struct StewartRow {
  i128 base = 0;
  unsigned index = 0;
  i128 phi_value = 0;
  i128 lhs = 0;
  double rhs = 0.0;
  StewartStatus status = StewartStatus::Fails;

  bool holds() const { return status == StewartStatus::Holds; }
};

inline constexpr double kStewartGuardBand = 1e-9;

/// Deterministic primality for 2 <= n < 2^127.
bool is_prime(i128 n);

/// Full factorization for 1 <= |n| < 2^127.
Factorization factorize(i128 n);

/// Largest prime factor, 1 for n = +-1.
i128 largest_prime_factor(i128 n);

std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);

inline constexpr unsigned kMaxCyclotomicIndex = 300;

/// The n-th cyclotomic polynomial, 1 <= n <= 300. Memoized per process.
const IntPolynomial& cyclotomic(unsigned n);
i128 cyclotomic_eval(unsigned n, i128 a);

PpdResult primitive_prime_divisors(i128 base, unsigned exponent);

/// n * exp(log n / (104 log log n)) in double precision.
double stewart_rhs(unsigned n);
StewartRow stewart_row(i128 base, unsigned n);
/// Rows n_min..n_max; rows whose value exceeds 128 bits get status OutOfRange.
std::vector<StewartRow> stewart_table(i128 base, unsigned n_min, unsigned n_max, unsigned workers = 1);

/// Multiplicative order of a modulo the prime r (requires r not dividing a).
std::uint64_t multiplicative_order(i128 a, i128 r);

/// Modular exponentiation for any modulus below 2^127.
u128 powmod(u128 base, u128 exp, u128 mod);

}  // namespace mpr
