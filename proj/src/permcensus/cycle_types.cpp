#include <algorithm>
#include <map>

#include "mpr/errors.hpp"
#include "mpr/ntheory.hpp"
#include "mpr/permcensus.hpp"

namespace mpr {
namespace {

void require_prime(unsigned p, const char* op) {
  if (p < 2 || !is_prime(p)) throw DomainError(std::string(op) + ": " + std::to_string(p) + " is not prime");
}

void require_degree(unsigned m, const char* op) {
  if (m < 5) throw DomainError(std::string(op) + ": degree must be >= 5");
}

CycleType make_type(unsigned m, const std::vector<unsigned>& nontrivial) {
  CycleType t;
  t.parts = nontrivial;
  std::sort(t.parts.begin(), t.parts.end(), std::greater<>());
  const unsigned used = t.degree();
  t.parts.insert(t.parts.end(), m - used, 1u);
  return t;
}

// Multisets of lengths from `lengths` (descending) summing to at most `budget`.
void partitions_into(const std::vector<unsigned>& lengths, std::size_t from, unsigned budget,
                     std::vector<unsigned>& current, std::vector<std::vector<unsigned>>& out) {
  out.push_back(current);
  for (std::size_t i = from; i < lengths.size(); ++i) {
    if (lengths[i] > budget) continue;
    current.push_back(lengths[i]);
    partitions_into(lengths, i, budget - lengths[i], current, out);
    current.pop_back();
  }
}

// Legendre-style exponent bookkeeping so that m!/(...) never overflows midway.
void add_factorial(std::map<unsigned, long>& exps, unsigned n, long sign) {
  for (unsigned k = 2; k <= n; ++k) {
    unsigned v = k;
    for (unsigned r = 2; r * r <= v; ++r) {
      while (v % r == 0) { exps[r] += sign; v /= r; }
    }
    if (v > 1) exps[v] += sign;
  }
}

void add_integer_power(std::map<unsigned, long>& exps, unsigned base, unsigned times, long sign) {
  unsigned v = base;
  for (unsigned r = 2; r * r <= v; ++r) {
    while (v % r == 0) { exps[r] += sign * static_cast<long>(times); v /= r; }
  }
  if (v > 1) exps[v] += sign * static_cast<long>(times);
}

}  // namespace

std::vector<CycleType> order_p_cycle_types(unsigned m, unsigned p) {
  require_degree(m, "order_p_cycle_types");
  require_prime(p, "order_p_cycle_types");
  std::vector<CycleType> out;
  for (unsigned k = 1; k * p <= m; ++k) {
    // k cycles of length p contribute k(p-1) transpositions.
    if ((k * (p - 1)) % 2 != 0) continue;
    out.push_back(make_type(m, std::vector<unsigned>(k, p)));
  }
  return out;
}

std::vector<CycleType> p_power_cycle_types(unsigned m, unsigned p) {
  require_degree(m, "p_power_cycle_types");
  require_prime(p, "p_power_cycle_types");
  std::vector<unsigned> lengths;
  for (unsigned len = p; len <= m; len *= p) lengths.push_back(len);
  std::reverse(lengths.begin(), lengths.end());
  std::vector<std::vector<unsigned>> raw;
  std::vector<unsigned> current;
  partitions_into(lengths, 0, m, current, raw);

  std::vector<CycleType> out;
  for (const auto& nontrivial : raw) {
    if (nontrivial.empty()) continue;
    CycleType t = make_type(m, nontrivial);
    if (t.is_even()) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const CycleType& a, const CycleType& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.parts < b.parts;
  });
  return out;
}

i128 sym_class_size(const CycleType& t) {
  std::map<unsigned, long> exps;
  add_factorial(exps, t.degree(), +1);
  std::map<unsigned, unsigned> multiplicity;
  for (const unsigned part : t.parts) ++multiplicity[part];
  for (const auto& [len, c] : multiplicity) {
    add_integer_power(exps, len, c, -1);
    add_factorial(exps, c, -1);
  }
  i128 size = 1;
  for (const auto& [r, e] : exps) {
    if (e < 0) throw ConsistencyError("sym_class_size: non-integral class size");
    size = checked_mul(size, checked_pow(r, static_cast<unsigned>(e)), "class size");
  }
  return size;
}

unsigned alt_mpr_p(unsigned m, unsigned p, const Alt6Realization& alt6) {
  require_degree(m, "alt_mpr_p");
  require_prime(p, "alt_mpr_p");
  if (m == 6) {
    if (!alt6) {
      throw DomainError(
          "alt_mpr_p: Alt(6) requires matrix realization (Aut(Alt(6)) is larger than Sym(6)); "
          "supply the PSL(2,9) census");
    }
    return alt6(p).first;
  }
  return static_cast<unsigned>(order_p_cycle_types(m, p).size());
}

AltCensusRow closed_form_alt_census(unsigned m, unsigned p) {
  require_degree(m, "closed_form_alt_census");
  require_prime(p, "closed_form_alt_census");
  if (m == 6) throw DomainError("closed_form_alt_census: Alt(6) has no closed form here; use the PSL(2,9) census");
  AltCensusRow row;
  row.degree = m;
  row.prime = p;
  row.source = CensusSource::ClosedForm;
  row.class_cycle_types = order_p_cycle_types(m, p);
  for (const auto& t : row.class_cycle_types) {
    AltClassRecord rec;
    rec.cycle_type = t;
    rec.representative = Permutation::from_cycle_type(t);
    rec.class_size = sym_class_size(t);
    // Every power x^k (p not dividing k) has the cycle type of x.
    rec.n_over_c_index = p - 1;
    rec.mpr_star = 1;
    rec.generator_orbit_count = 1;
    row.classes.push_back(std::move(rec));
  }
  row.mpr_p = static_cast<unsigned>(row.classes.size());
  row.m_p = static_cast<unsigned>(p_power_cycle_types(m, p).size());
  return row;
}

unsigned mpr_star_alt(unsigned m, unsigned p, const CycleType& t) {
  require_degree(m, "mpr_star_alt");
  require_prime(p, "mpr_star_alt");
  if (t.degree() != m || t.order() != p || !t.is_even()) {
    throw DomainError("mpr_star_alt: " + t.str() + " is not an even cycle type of order " + std::to_string(p) +
                      " in degree " + std::to_string(m));
  }
  if (m <= 8) {
    const Permutation x = Permutation::from_cycle_type(t);
    for (unsigned k = 1; k < p; ++k) {
      if (x.pow(k).cycle_type() != t) {
        throw ConsistencyError("mpr_star_alt: generator x^" + std::to_string(k) + " changes cycle type");
      }
    }
  }
  return 1;
}

}  // namespace mpr
