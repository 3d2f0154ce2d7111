#include <array>
#include <mutex>

#include "mpr/errors.hpp"
#include "mpr/ntheory.hpp"

namespace mpr {

IntPolynomial::IntPolynomial(std::vector<i128> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::monomial(unsigned degree, i128 coefficient) {
  std::vector<i128> c(degree + 1, 0);
  c[degree] = coefficient;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

i128 IntPolynomial::evaluate(i128 x) const {
  i128 acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = checked_add(checked_mul(acc, x, "polynomial evaluation"), *it, "polynomial evaluation");
  }
  return acc;
}

std::string IntPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const i128 c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const i128 mag = abs128(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += to_string(mag);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<i128> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j], "polynomial product"),
                             "polynomial product");
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<i128> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = checked_sub(a.coefficient(static_cast<unsigned>(i)), b.coefficient(static_cast<unsigned>(i)),
                       "polynomial difference");
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (!divisor.is_monic()) throw DomainError("divide_exact: divisor must be monic");
  if (is_zero()) return {};
  const int dd = divisor.degree();
  if (degree() < dd) throw ConsistencyError("divide_exact: dividend degree below divisor degree");
  std::vector<i128> rem = coeffs_;
  std::vector<i128> quot(static_cast<std::size_t>(degree() - dd + 1), 0);
  for (int k = degree() - dd; k >= 0; --k) {
    const i128 lead = rem[static_cast<std::size_t>(k + dd)];
    quot[static_cast<std::size_t>(k)] = lead;
    if (lead == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k + j)];
      slot = checked_sub(slot, checked_mul(lead, divisor.coeffs_[static_cast<std::size_t>(j)], "polynomial division"),
                         "polynomial division");
    }
  }
  for (int j = 0; j < dd; ++j) {
    if (rem[static_cast<std::size_t>(j)] != 0) throw ConsistencyError("divide_exact: nonzero remainder");
  }
  return IntPolynomial(std::move(quot));
}

namespace {

struct CyclotomicTable {
  std::array<IntPolynomial, kMaxCyclotomicIndex + 1> polys;

  CyclotomicTable() {
    for (unsigned n = 1; n <= kMaxCyclotomicIndex; ++n) {
      // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
      IntPolynomial acc = IntPolynomial::monomial(n) - IntPolynomial::monomial(0);
      for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) acc = acc.divide_exact(polys[d]);
      }
      polys[n] = std::move(acc);
    }
  }
};

const CyclotomicTable& table() {
  // Function-local static: initialized exactly once, visible to all threads.
  static const CyclotomicTable t;
  return t;
}

}  // namespace

const IntPolynomial& cyclotomic(unsigned n) {
  if (n < 1 || n > kMaxCyclotomicIndex) {
    throw RangeError("cyclotomic: index " + std::to_string(n) + " outside 1.." + std::to_string(kMaxCyclotomicIndex));
  }
  return table().polys[n];
}

i128 cyclotomic_eval(unsigned n, i128 a) {
  const auto& poly = cyclotomic(n);
  try {
    return poly.evaluate(a);
  } catch (const RangeError&) {
    throw RangeError("cyclotomic_eval: Phi_" + std::to_string(n) + "(" + to_string(a) +
                     ") exceeds the signed 128-bit bound |value| < 2^127");
  }
}

}  // namespace mpr
