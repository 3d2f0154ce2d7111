#include "mpr/matrix.hpp"

#include <algorithm>

#include "mpr/errors.hpp"

namespace mpr {

MatrixRing::MatrixRing(std::shared_ptr<const FiniteField> field, unsigned d) : field_(std::move(field)), d_(d) {
  if (d_ < 1 || d_ > kMaxMatrixDim) throw DomainError("MatrixRing: dimension must be in 1..4");
  code_space_ = 1;
  for (unsigned i = 0; i < d_ * d_; ++i) {
    if (code_space_ > (std::uint64_t{1} << 56) / field_->size()) {
      code_space_ = 0;  // too large to index densely
      break;
    }
    code_space_ *= field_->size();
  }
}

Matrix MatrixRing::zero() const {
  Matrix m;
  m.d = d_;
  return m;
}

Matrix MatrixRing::identity() const { return scalar(1); }

Matrix MatrixRing::scalar(FieldElement lambda) const {
  Matrix m = zero();
  for (unsigned i = 0; i < d_; ++i) m.at(i, i) = lambda;
  return m;
}

Matrix MatrixRing::from_rows(const std::vector<std::vector<unsigned>>& rows) const {
  if (rows.size() != d_) throw DomainError("from_rows: wrong number of rows");
  Matrix m = zero();
  for (unsigned i = 0; i < d_; ++i) {
    if (rows[i].size() != d_) throw DomainError("from_rows: wrong row length");
    for (unsigned j = 0; j < d_; ++j) {
      if (rows[i][j] >= field_->size()) throw DomainError("from_rows: entry outside the field");
      m.at(i, j) = static_cast<FieldElement>(rows[i][j]);
    }
  }
  return m;
}

Matrix MatrixRing::mul(const Matrix& a, const Matrix& b) const {
  const FiniteField& F = *field_;
  Matrix c = zero();
  for (unsigned i = 0; i < d_; ++i) {
    for (unsigned k = 0; k < d_; ++k) {
      const FieldElement aik = a.at(i, k);
      if (aik == 0) continue;
      for (unsigned j = 0; j < d_; ++j) c.at(i, j) = F.add(c.at(i, j), F.mul(aik, b.at(k, j)));
    }
  }
  return c;
}

Matrix MatrixRing::add(const Matrix& a, const Matrix& b) const {
  Matrix c = zero();
  for (unsigned i = 0; i < d_ * d_; ++i) c.e[i] = field_->add(a.e[i], b.e[i]);
  return c;
}

Matrix MatrixRing::scale(FieldElement lambda, const Matrix& a) const {
  Matrix c = zero();
  for (unsigned i = 0; i < d_ * d_; ++i) c.e[i] = field_->mul(lambda, a.e[i]);
  return c;
}

Matrix MatrixRing::pow(Matrix a, std::uint64_t k) const {
  Matrix r = identity();
  while (k != 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

namespace {

// Row reduction; returns the rank and accumulates the determinant of a square matrix.
unsigned eliminate(const FiniteField& F, Matrix m, FieldElement* det_out) {
  const unsigned d = m.d;
  FieldElement det = 1;
  unsigned rank = 0;
  for (unsigned col = 0; col < d && rank < d; ++col) {
    unsigned pivot = rank;
    while (pivot < d && m.at(pivot, col) == 0) ++pivot;
    if (pivot == d) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      for (unsigned j = 0; j < d; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
      det = F.neg(det);
    }
    const FieldElement pv = m.at(rank, col);
    det = F.mul(det, pv);
    const FieldElement inv = F.inv(pv);
    for (unsigned i = rank + 1; i < d; ++i) {
      const FieldElement factor = F.mul(m.at(i, col), inv);
      if (factor == 0) continue;
      for (unsigned j = col; j < d; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(rank, j)));
    }
    ++rank;
  }
  if (rank < d) det = 0;
  if (det_out) *det_out = det;
  return rank;
}

}  // namespace

FieldElement MatrixRing::det(const Matrix& a) const {
  FieldElement det = 0;
  eliminate(*field_, a, &det);
  return det;
}

unsigned MatrixRing::rank(const Matrix& a) const { return eliminate(*field_, a, nullptr); }

Matrix MatrixRing::inverse(const Matrix& a) const {
  const FiniteField& F = *field_;
  Matrix m = a;
  Matrix inv = identity();
  for (unsigned col = 0; col < d_; ++col) {
    unsigned pivot = col;
    while (pivot < d_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == d_) throw DomainError("MatrixRing::inverse: singular matrix " + str(a));
    for (unsigned j = 0; j < d_; ++j) {
      std::swap(m.at(pivot, j), m.at(col, j));
      std::swap(inv.at(pivot, j), inv.at(col, j));
    }
    const FieldElement pinv = F.inv(m.at(col, col));
    for (unsigned j = 0; j < d_; ++j) {
      m.at(col, j) = F.mul(m.at(col, j), pinv);
      inv.at(col, j) = F.mul(inv.at(col, j), pinv);
    }
    for (unsigned i = 0; i < d_; ++i) {
      if (i == col) continue;
      const FieldElement factor = m.at(i, col);
      if (factor == 0) continue;
      for (unsigned j = 0; j < d_; ++j) {
        m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(col, j)));
        inv.at(i, j) = F.sub(inv.at(i, j), F.mul(factor, inv.at(col, j)));
      }
    }
  }
  return inv;
}

Matrix MatrixRing::transpose(const Matrix& a) const {
  Matrix t = zero();
  for (unsigned i = 0; i < d_; ++i) {
    for (unsigned j = 0; j < d_; ++j) t.at(j, i) = a.at(i, j);
  }
  return t;
}

Matrix MatrixRing::frobenius(const Matrix& a) const {
  Matrix f = zero();
  for (unsigned i = 0; i < d_ * d_; ++i) f.e[i] = field_->frobenius(a.e[i]);
  return f;
}

Matrix MatrixRing::graph(const Matrix& a) const { return transpose(inverse(a)); }

bool MatrixRing::is_scalar(const Matrix& a) const {
  for (unsigned i = 0; i < d_; ++i) {
    for (unsigned j = 0; j < d_; ++j) {
      if (i != j && a.at(i, j) != 0) return false;
    }
    if (a.at(i, i) != a.at(0, 0)) return false;
  }
  return true;
}

ProjectiveMatrix MatrixRing::canonical(const Matrix& a) const {
  for (unsigned i = 0; i < d_ * d_; ++i) {
    if (a.e[i] != 0) return a.e[i] == 1 ? a : scale(field_->inv(a.e[i]), a);
  }
  throw DomainError("MatrixRing::canonical: zero matrix");
}

std::uint64_t MatrixRing::projective_order(const Matrix& a) const {
  if (det(a) == 0) throw DomainError("projective_order: singular matrix");
  Matrix x = a;
  for (std::uint64_t k = 1;; ++k) {
    if (is_scalar(x)) return k;
    x = mul(x, a);
  }
}

FqPoly MatrixRing::charpoly(const Matrix& a) const {
  // Coefficient of x^(d-k) is (-1)^k times the sum of the principal k x k minors.
  const FiniteField& F = *field_;
  FqPoly out(d_ + 1, 0);
  out[d_] = 1;
  for (unsigned k = 1; k <= d_; ++k) {
    FieldElement sum = 0;
    for (unsigned mask = 0; mask < (1u << d_); ++mask) {
      if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
      std::vector<unsigned> idx;
      for (unsigned i = 0; i < d_; ++i) {
        if (mask & (1u << i)) idx.push_back(i);
      }
      Matrix minor;
      minor.d = k;
      for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < k; ++j) minor.at(i, j) = a.at(idx[i], idx[j]);
      }
      FieldElement det_minor = 0;
      eliminate(F, minor, &det_minor);
      sum = F.add(sum, det_minor);
    }
    out[d_ - k] = (k % 2 == 1) ? F.neg(sum) : sum;
  }
  return out;
}

Matrix MatrixRing::evaluate(const FqPoly& f, const Matrix& a) const {
  Matrix r = zero();
  for (std::size_t i = f.size(); i-- > 0;) r = add(mul(r, a), scalar(f[i]));
  return r;
}

Matrix MatrixRing::companion(const FqPoly& monic) const { return block_companion({monic}); }

Matrix MatrixRing::block_companion(const std::vector<FqPoly>& blocks) const {
  Matrix m = zero();
  unsigned offset = 0;
  for (const auto& f : blocks) {
    if (f.empty() || f.back() != 1) throw DomainError("block_companion: block polynomial must be monic");
    const unsigned k = static_cast<unsigned>(f.size()) - 1;
    if (offset + k > d_) throw DomainError("block_companion: blocks exceed the dimension");
    for (unsigned i = 1; i < k; ++i) m.at(offset + i, offset + i - 1) = 1;
    for (unsigned i = 0; i < k; ++i) m.at(offset + i, offset + k - 1) = field_->neg(f[i]);
    offset += k;
  }
  if (offset != d_) throw DomainError("block_companion: blocks do not fill the dimension");
  return m;
}

std::uint64_t MatrixRing::code(const Matrix& a) const {
  std::uint64_t c = 0;
  for (unsigned i = 0; i < d_ * d_; ++i) c = c * field_->size() + a.e[i];
  return c;
}

Matrix MatrixRing::from_code(std::uint64_t code) const {
  Matrix m = zero();
  for (unsigned i = d_ * d_; i-- > 0;) {
    m.e[i] = static_cast<FieldElement>(code % field_->size());
    code /= field_->size();
  }
  return m;
}

std::string MatrixRing::str(const Matrix& a) const {
  std::string out = "[";
  for (unsigned i = 0; i < d_; ++i) {
    out += i ? ";" : "";
    for (unsigned j = 0; j < d_; ++j) {
      out += j ? " " : "";
      out += std::to_string(a.at(i, j));
    }
  }
  return out + "]";
}

void fq_trim(FqPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FqPoly fq_mul(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  fq_trim(c);
  return c;
}

std::pair<FqPoly, FqPoly> fq_divmod(const FiniteField& F, const FqPoly& a, const FqPoly& monic) {
  if (monic.empty() || monic.back() != 1) throw DomainError("fq_divmod: divisor must be monic");
  FqPoly r = a;
  fq_trim(r);
  const std::size_t dm = monic.size() - 1;
  FqPoly quot(r.size() > dm ? r.size() - dm : 0, 0);
  while (r.size() > dm) {
    const FieldElement lead = r.back();
    const std::size_t shift = r.size() - 1 - dm;
    quot[shift] = lead;
    for (std::size_t j = 0; j <= dm; ++j) r[shift + j] = F.sub(r[shift + j], F.mul(lead, monic[j]));
    fq_trim(r);
  }
  return {quot, r};
}

FqPoly fq_monic_from_code(unsigned degree, std::uint64_t code, unsigned q) {
  FqPoly f(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i, code /= q) f[i] = static_cast<FieldElement>(code % q);
  f[degree] = 1;
  return f;
}

std::vector<FqPoly> fq_factor(const FiniteField& F, FqPoly monic) {
  fq_trim(monic);
  std::vector<FqPoly> out;
  // Trial division in (degree, code) order meets irreducibles before their multiples.
  for (unsigned k = 1; monic.size() > 1 && 2 * k <= monic.size() - 1; ++k) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= F.size();
    for (std::uint64_t c = 0; c < count && 2 * k <= monic.size() - 1; ++c) {
      const FqPoly g = fq_monic_from_code(k, c, F.size());
      for (;;) {
        auto [quot, rem] = fq_divmod(F, monic, g);
        if (!rem.empty()) break;
        out.push_back(g);
        monic = std::move(quot);
      }
    }
  }
  if (monic.size() > 1) out.push_back(monic);
  std::sort(out.begin(), out.end(), [](const FqPoly& a, const FqPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

std::string fq_str(const FqPoly& f) {
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t k = f.size(); k-- > 0;) {
    if (f[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (f[k] != 1 || k == 0) out += std::to_string(f[k]);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace mpr
