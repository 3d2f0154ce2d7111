#include "mpr/paperbounds.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "mpr/errors.hpp"
#include "mpr/ntheory.hpp"
#include "mpr/similarity.hpp"

namespace mpr {
namespace {

struct FamilyName {
  LieFamily family;
  const char* name;
};

constexpr FamilyName kFamilyNames[] = {
    {LieFamily::PSL, "PSL"},           {LieFamily::PSU, "PSU"},
    {LieFamily::PSp, "PSp"},           {LieFamily::OmegaOdd, "Omega_odd"},
    {LieFamily::POmegaPlus, "POmega_plus"}, {LieFamily::POmegaMinus, "POmega_minus"},
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

// Named groups for which the Zsigmondy prime is missing and that are dropped
// from the classical argument.
struct NamedException {
  LieFamily family;
  unsigned d;
  unsigned q;
};

constexpr NamedException kNamedExceptions[] = {
    {LieFamily::PSL, 2, 8}, {LieFamily::PSL, 3, 4}, {LieFamily::PSU, 3, 4},        {LieFamily::PSL, 6, 2},
    {LieFamily::PSp, 6, 2}, {LieFamily::PSU, 4, 2}, {LieFamily::POmegaPlus, 8, 2},
};

std::string named_exception_list() {
  std::string out;
  for (const auto& e : kNamedExceptions) {
    if (!out.empty()) out += ", ";
    out += std::string(to_string(e.family)) + "(" + std::to_string(e.d) + "," + std::to_string(e.q) + ")";
  }
  return out;
}

bool is_mersenne_prime(unsigned p) {
  const unsigned n = p + 1;
  return (n & (n - 1)) == 0;
}

i128 half_factorial(unsigned n) {
  i128 acc = 1;
  for (unsigned k = 3; k <= n; ++k) acc = checked_mul(acc, k, "half factorial");
  return acc;
}

std::vector<unsigned> primes_up_to(unsigned m) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p <= m; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::vector<unsigned> prime_divisors(i128 n) {
  std::vector<unsigned> out;
  for (const auto& pp : factorize(n).factors) out.push_back(static_cast<unsigned>(pp.prime));
  return out;
}

}  // namespace

const char* to_string(LieFamily f) {
  for (const auto& entry : kFamilyNames) {
    if (entry.family == f) return entry.name;
  }
  return "?";
}

LieFamily parse_lie_family(const std::string& text) {
  for (const auto& entry : kFamilyNames) {
    if (lower(text) == lower(entry.name)) return entry.family;
  }
  throw DomainError("unknown family '" + text + "' (expected PSL, PSU, PSp, Omega_odd, POmega_plus or POmega_minus)");
}

unsigned FamilySpec::q() const {
  unsigned q = 1;
  for (unsigned i = 0; i < a; ++i) q *= p;
  return q;
}

std::string FamilySpec::name() const {
  return std::string(to_string(family)) + "(" + std::to_string(d) + "," + std::to_string(q()) + ")";
}

FamilySpec derive_family_spec(LieFamily family, unsigned d, unsigned p, unsigned a) {
  if (p < 2 || !is_prime(p)) throw DomainError("derive_family_spec: " + std::to_string(p) + " is not prime");
  if (a < 1) throw DomainError("derive_family_spec: field degree must be >= 1");
  if (checked_pow(p, a, "field size") > 0xffffffffLL) throw RangeError("derive_family_spec: field size too large");
  FamilySpec spec;
  spec.family = family;
  spec.d = d;
  spec.p = p;
  spec.a = a;
  const unsigned q = spec.q();
  const std::string label = spec.name();
  auto reject = [&](const std::string& rule) { throw DomainError(label + " is outside the classical list: " + rule); };

  switch (family) {
    case LieFamily::PSL:
      if (d < 2) reject("PSL needs d >= 2");
      if (d == 2 && (q == 2 || q == 3 || q == 4 || q == 7)) reject("PSL requires (q,d) not in {(2,2),(3,2),(4,2),(7,2)}");
      break;
    case LieFamily::PSp:
      if (d < 4 || d % 2 != 0) reject("PSp needs d even and d >= 4");
      if (q == 2 && d == 4) reject("PSp requires (q,d) != (2,4)");
      break;
    case LieFamily::PSU:
      if (d < 3) reject("PSU needs d >= 3");
      if (q == 2 && d == 3) reject("PSU requires (q,d) != (2,3)");
      break;
    case LieFamily::OmegaOdd:
      if (d < 7 || d % 2 == 0 || p % 2 == 0) reject("Omega needs d >= 7 and dp odd");
      break;
    case LieFamily::POmegaPlus:
    case LieFamily::POmegaMinus:
      if (d < 8 || d % 2 != 0) reject("POmega needs d even and d >= 8");
      break;
  }

  spec.delta = family == LieFamily::PSU ? 2 : 1;
  const bool uses_d_minus_1 = (family == LieFamily::PSU && d % 2 == 0) || family == LieFamily::OmegaOdd;
  if (family == LieFamily::POmegaPlus) {
    spec.zsig_exponent = a * (d - 2);
  } else if (uses_d_minus_1) {
    spec.zsig_exponent = a * (d - 1) * spec.delta;
  } else {
    spec.zsig_exponent = a * d * spec.delta;
  }

  for (const auto& e : kNamedExceptions) {
    if (e.family == family && e.d == d && e.q == q) {
      spec.exclusion = "named Zsigmondy exception " + label + " (excluded groups: " + named_exception_list() + ")";
    }
  }
  if (family == LieFamily::PSL && d == 2 && a == 1 && is_mersenne_prime(p)) {
    spec.exclusion = label + " with p a Mersenne prime has no primitive prime divisor of p^2 - 1";
  }
  return spec;
}

std::optional<i128> zsig_prime_for(const FamilySpec& spec) {
  if (spec.exclusion) return std::nullopt;
  return primitive_prime_divisors(spec.p, spec.zsig_exponent).largest;
}

Rational ppd_lower_bound(const FamilySpec& spec) {
  const auto s = zsig_prime_for(spec);
  if (!s) {
    throw DomainError("ppd_lower_bound: no Zsigmondy prime for " + spec.name() + " (" +
                      spec.exclusion.value_or("no primitive prime divisor") +
                      "); the PSL(2,p) Mersenne case goes through the split-torus check");
  }
  return Rational(*s - 1, 6 * static_cast<i128>(spec.a) * spec.delta * spec.d);
}

BoundReport check_ppd(const FamilySpec& spec, const CensusOptions& options) {
  if (spec.family != LieFamily::PSL) throw DomainError("check_ppd: only PSL targets can be enumerated");
  const Rational bound = ppd_lower_bound(spec);
  const auto s = static_cast<unsigned>(*zsig_prime_for(spec));
  const auto row = census(make_group_spec(GroupFamily::PSL, spec.d, spec.q()), s, options);
  if (row.classes.empty()) {
    throw ConsistencyError("check_ppd: " + spec.name() + " has no element of order " + std::to_string(s));
  }
  unsigned lhs = row.classes.front().mpr_star;
  std::string stars;
  for (const auto& rec : row.classes) {
    lhs = std::min(lhs, rec.mpr_star);
    stars += (stars.empty() ? "" : " ") + std::to_string(rec.mpr_star);
  }
  return make_report("ppd", spec.name() + " s=" + std::to_string(s), Rational(lhs), bound, Relation::AtLeast,
                     "classes=" + std::to_string(row.classes.size()) + " mpr*=" + stars +
                         " bound=(s-1)/(6*a*delta*d)");
}

std::vector<std::pair<unsigned, unsigned>> ppd_sweep_targets() {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (const unsigned q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u, 19u, 23u, 25u, 27u}) out.emplace_back(2, q);
  for (const unsigned q : {2u, 3u}) out.emplace_back(3, q);
  return out;
}

std::vector<BoundReport> check_ppd_sweep(const CensusOptions& options) {
  std::vector<BoundReport> out;
  for (const auto& [d, q] : ppd_sweep_targets()) {
    const auto f = factorize(q).factors.front();
    const std::string context = "PSL(" + std::to_string(d) + "," + std::to_string(q) + ")";
    FamilySpec spec;
    try {
      spec = derive_family_spec(LieFamily::PSL, d, static_cast<unsigned>(f.prime), f.exponent);
    } catch (const DomainError& e) {
      out.push_back(make_report("ppd-skipped", context, Rational(0), Rational(0), Relation::Computed, e.what()));
      continue;
    }
    if (!zsig_prime_for(spec)) {
      out.push_back(make_report("ppd-skipped", context, Rational(0), Rational(0), Relation::Computed,
                                spec.exclusion.value_or("no Zsigmondy prime")));
      continue;
    }
    out.push_back(check_ppd(spec, options));
  }
  return out;
}

unsigned alt_mpr(unsigned m, const Alt6Realization& alt6) {
  unsigned best = 0;
  for (const unsigned p : primes_up_to(m)) best = std::max(best, alt_mpr_p(m, p, alt6));
  return best;
}

BoundReport alt_bound_chain(unsigned m, const Alt6Realization& alt6) {
  const unsigned mpr = alt_mpr(m, alt6);
  const unsigned h = m / 4;
  std::vector<std::string> failed;
  if (alt_mpr_p(m, 2, alt6) < (m == 6 ? 1 : h)) failed.push_back("mpr_2 < h(m)");
  if (7 * h < m) failed.push_back("7h(m) < m");
  std::string detail = "mpr=" + std::to_string(mpr) + " h=" + std::to_string(h);
  // 34!/2 is the largest half-factorial below 2^127.
  if (7 * mpr <= 34) {
    const i128 order = half_factorial(m);
    const i128 bound = half_factorial(7 * mpr);
    detail += " m!/2=" + to_string(order) + " (7mpr)!/2=" + to_string(bound);
    if (order > bound) failed.push_back("m!/2 > (7 mpr)!/2");
  } else {
    detail += " (7mpr)!/2 bound vacuously large";
  }
  for (const auto& f : failed) detail += "; failed: " + f;
  auto report = make_report("alt-chain", "Alt(" + std::to_string(m) + ")", Rational(7 * mpr), Rational(m),
                            Relation::AtLeast, detail);
  report.holds = report.holds && failed.empty();
  return report;
}

ExceptionalRow e8_row() { return {"E8", 30, 248, "builtin"}; }

std::vector<ExceptionalRow> parse_exceptional_table(const std::string& text) {
  std::vector<ExceptionalRow> rows{e8_row()};
  std::istringstream in(text);
  std::string line;
  for (unsigned lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    for (std::string field; std::getline(ls, field, '\t');) fields.push_back(field);
    const std::string where = "exceptional table line " + std::to_string(lineno);
    if (fields.size() != 3 || fields[0].empty()) throw DomainError(where + ": expected family<TAB>exponent<TAB>dimension");
    auto number = [&](const std::string& s) {
      if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw DomainError(where + ": '" + s + "' is not a positive integer");
      }
      return static_cast<unsigned>(std::stoul(s));
    };
    ExceptionalRow row{fields[0], number(fields[1]), number(fields[2]), "config"};
    if (row.exponent < 3) throw DomainError(where + ": exponent must be >= 3");
    if (row.n_dim < 1) throw DomainError(where + ": dimension must be >= 1");
    if (lower(row.family) == "e8") throw DomainError(where + ": the E8 row is built in and cannot be redefined");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ExceptionalRow> load_exceptional_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read exceptional table '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_exceptional_table(buffer.str());
}

ExceptionalBound exceptional_lower_bound(const ExceptionalRow& row, unsigned p, unsigned a) {
  if (p < 2 || !is_prime(p)) throw DomainError("exceptional_lower_bound: " + std::to_string(p) + " is not prime");
  if (a < 1) throw DomainError("exceptional_lower_bound: a must be >= 1");
  if (row.exponent < 3) throw DomainError("exceptional_lower_bound: exponent must be >= 3");
  ExceptionalBound out;
  out.row = row;
  out.p = p;
  out.a = a;
  out.cyclotomic_index = a * row.exponent;
  if (out.cyclotomic_index > kMaxCyclotomicIndex) {
    throw RangeError("exceptional_lower_bound: cyclotomic index " + std::to_string(out.cyclotomic_index) +
                     " above " + std::to_string(kMaxCyclotomicIndex));
  }
  out.phi_value = cyclotomic_eval(out.cyclotomic_index, p);
  out.s = largest_prime_factor(out.phi_value);
  out.bound = Rational(out.s - 1, 2 * static_cast<i128>(a) * row.n_dim);
  out.report = make_report(
      "exceptional-bound",
      row.family + " p=" + std::to_string(p) + " a=" + std::to_string(a) + " provenance=" + row.provenance,
      Rational(out.s), out.bound, Relation::Computed,
      "lhs=s=P[Phi_" + std::to_string(out.cyclotomic_index) + "(" + std::to_string(p) + ")] with Phi=" +
          to_string(out.phi_value) + "; rhs=(s-1)/(2*a*" + std::to_string(row.n_dim) +
          ") is a computed lower bound for mpr*(T)");
  return out;
}

std::vector<BoundReport> check_lemma1_sweep(const std::vector<GroupSpec>& groups,
                                            const std::vector<unsigned>& alt_degrees,
                                            const CensusOptions& options) {
  std::vector<BoundReport> out;
  for (const unsigned m : alt_degrees) {
    for (const unsigned p : primes_up_to(m)) {
      const auto row = brute_force_alt_census(m, p, options.workers);
      for (const auto& rec : row.classes) {
        out.push_back(make_report(
            "lemma1", "Alt(" + std::to_string(m) + ") p=" + std::to_string(p) + " x=" + rec.representative.str(),
            Rational(rec.generator_orbit_count), Rational(static_cast<i128>(euler_phi(p)), rec.n_over_c_index),
            Relation::Equal,
            "class_size=" + to_string(rec.class_size) + " index=" + std::to_string(rec.n_over_c_index)));
      }
    }
  }
  for (const auto& spec : groups) {
    AutCensus engine(spec, Acting::FullAut, options);
    for (const unsigned p : prime_divisors(spec.order)) {
      const auto row = engine.census(p);
      for (const auto& rec : row.classes) {
        auto report = make_report(
            "lemma1", spec.name() + " p=" + std::to_string(p) + " x=" + engine.group().ring().str(rec.representative),
            Rational(rec.generator_orbit_count), Rational(static_cast<i128>(euler_phi(p)), rec.n_over_c_index),
            Relation::Equal,
            "class_size=" + to_string(rec.class_size) + " |N|=" + to_string(rec.normalizer_count) +
                " |C|=" + to_string(rec.centralizer_count) + " index=" + std::to_string(rec.n_over_c_index));
        report.holds = report.holds && rec.lemma1_consistent();
        out.push_back(std::move(report));
      }
    }
  }
  return out;
}

std::vector<BoundReport> check_lemma2_sweep(const std::vector<unsigned>& d_range, const std::vector<unsigned>& q_range,
                                            const CensusOptions& options) {
  std::vector<BoundReport> out;
  for (const unsigned d : d_range) {
    for (const unsigned q : q_range) {
      const GroupSpec spec = make_group_spec(GroupFamily::PGL, d, q);
      const unsigned p = spec.field->characteristic();
      const bool enumerable = spec.order <= options.ceiling;
      const IndexRoute route = enumerable ? IndexRoute::BruteForce : IndexRoute::Similarity;
      const auto classes = pgl_prime_order_classes(d, q, route, options);
      const MatrixRing ring(spec.field, d);
      for (const auto& c : classes) {
        const std::string context = spec.name() + " s=" + std::to_string(c.order) + " x=" + ring.str(c.representative);
        const std::string detail = std::string("route=") + to_string(route);
        if (c.order == p) {
          out.push_back(make_report("lemma2-outside", context, Rational(c.index), Rational(d), Relation::Computed,
                                    detail + "; s = p, outside the distinct-primes hypothesis"));
        } else if (std::gcd(c.order, q - 1) == 1) {
          out.push_back(make_report("lemma2", context, Rational(c.index), Rational(d), Relation::AtMost, detail));
        }
      }
      if (enumerable) {
        // Independent route: rational canonical forms and similarity invariants.
        const auto sim = pgl_prime_order_classes(d, q, IndexRoute::Similarity, options);
        std::multiset<std::pair<unsigned, unsigned>> a, b;
        for (const auto& c : classes) a.insert({c.order, c.index});
        for (const auto& c : sim) b.insert({c.order, c.index});
        bool per_element = true;
        for (const auto& c : classes) per_element = per_element && pgl_index_by_similarity(ring, c.representative) == c.index;
        auto report = make_report("lemma2-routes", spec.name(), Rational(static_cast<i128>(classes.size())),
                                  Rational(static_cast<i128>(sim.size())), Relation::Equal,
                                  "brute-force classes vs similarity classes; (order,index) multisets " +
                                      std::string(a == b ? "agree" : "differ"));
        report.holds = report.holds && a == b && per_element;
        out.push_back(std::move(report));
      }
    }
  }
  return out;
}

}  // namespace mpr
