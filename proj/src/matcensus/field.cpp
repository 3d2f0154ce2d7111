#include "mpr/field.hpp"

#include "mpr/errors.hpp"
#include "mpr/ntheory.hpp"

namespace mpr {
namespace {

using Poly = std::vector<unsigned>;  // coefficients mod p, constant term first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic g over F_p.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const unsigned lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t j = 0; j <= dg; ++j) f[shift + j] = (f[shift + j] + p - lead * g[j] % p) % p;
    trim(f);
  }
  return f;
}

// Monic polynomial of the given degree whose lower coefficients are the base-p digits of `code`.
Poly monic_from_code(unsigned degree, unsigned code, unsigned p) {
  Poly f(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i, code /= p) f[i] = code % p;
  f[degree] = 1;
  return f;
}

unsigned ipow(unsigned b, unsigned e) {
  unsigned r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<unsigned>& monic, unsigned p) {
  const unsigned deg = static_cast<unsigned>(monic.size()) - 1;
  if (deg == 0) return false;
  for (unsigned k = 1; 2 * k <= deg; ++k) {
    for (unsigned code = 0; code < ipow(p, k); ++code) {
      if (poly_mod(monic, monic_from_code(k, code, p), p).empty()) return false;
    }
  }
  return true;
}

std::shared_ptr<const FiniteField> FiniteField::build(unsigned p, unsigned a) {
  if (p < 2 || !is_prime(p)) throw DomainError("build_field: characteristic " + std::to_string(p) + " is not prime");
  if (a < 1) throw DomainError("build_field: degree must be >= 1");
  unsigned q = 1;
  for (unsigned i = 0; i < a; ++i) {
    q *= p;
    if (q > kMaxFieldSize) {
      throw RangeError("build_field: field size " + std::to_string(p) + "^" + std::to_string(a) +
                       " exceeds the ceiling " + std::to_string(kMaxFieldSize));
    }
  }
  for (unsigned code = 0; code < q; ++code) {
    Poly candidate = monic_from_code(a, code, p);
    if (is_irreducible_mod_p(candidate, p)) {
      return std::shared_ptr<const FiniteField>(new FiniteField(p, a, std::move(candidate)));
    }
  }
  throw ConsistencyError("build_field: no irreducible polynomial found");
}

FiniteField::FiniteField(unsigned p, unsigned a, std::vector<unsigned> modulus)
    : p_(p), a_(a), q_(ipow(p, a)), modulus_(std::move(modulus)) {
  auto digits = [&](unsigned x) {
    Poly f(a_, 0);
    for (unsigned i = 0; i < a_; ++i, x /= p_) f[i] = x % p_;
    return f;
  };
  auto encode = [&](const Poly& f) {
    unsigned x = 0;
    for (std::size_t i = f.size(); i-- > 0;) x = x * p_ + f[i];
    return static_cast<FieldElement>(x);
  };

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  frob_.resize(q_);
  for (unsigned x = 0; x < q_; ++x) {
    const Poly fx = digits(x);
    Poly nx(a_);
    for (unsigned i = 0; i < a_; ++i) nx[i] = (p_ - fx[i]) % p_;
    neg_[x] = encode(nx);
    for (unsigned y = 0; y < q_; ++y) {
      const Poly fy = digits(y);
      Poly sum(a_);
      for (unsigned i = 0; i < a_; ++i) sum[i] = (fx[i] + fy[i]) % p_;
      add_[x * q_ + y] = encode(sum);
      Poly prod(2 * a_, 0);
      for (unsigned i = 0; i < a_; ++i) {
        for (unsigned j = 0; j < a_; ++j) prod[i + j] = (prod[i + j] + fx[i] * fy[j]) % p_;
      }
      Poly reduced = poly_mod(prod, modulus_, p_);
      reduced.resize(a_, 0);
      mul_[x * q_ + y] = encode(reduced);
    }
  }
  for (unsigned x = 1; x < q_; ++x) {
    for (unsigned y = 1; y < q_; ++y) {
      if (mul_[x * q_ + y] == 1) {
        inv_[x] = static_cast<FieldElement>(y);
        break;
      }
    }
  }
  for (unsigned x = 0; x < q_; ++x) frob_[x] = pow(static_cast<FieldElement>(x), p_);
}

std::string FiniteField::modulus_str() const {
  std::string out;
  for (std::size_t k = modulus_.size(); k-- > 0;) {
    const unsigned c = modulus_[k];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || k == 0) out += std::to_string(c);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

FieldElement FiniteField::pow(FieldElement x, std::uint64_t k) const {
  FieldElement r = 1;
  while (k != 0) {
    if (k & 1) r = mul(r, x);
    x = mul(x, x);
    k >>= 1;
  }
  return r;
}

unsigned FiniteField::order(FieldElement x) const {
  if (x == 0) throw DomainError("FiniteField::order: zero has no multiplicative order");
  unsigned k = 1;
  for (FieldElement y = x; y != 1; y = mul(y, x)) ++k;
  return k;
}

FieldElement FiniteField::from_int(long v) const {
  const long r = ((v % static_cast<long>(p_)) + static_cast<long>(p_)) % static_cast<long>(p_);
  return static_cast<FieldElement>(r);
}

}  // namespace mpr
