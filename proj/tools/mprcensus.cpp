// Command-line front end: number-theory tables, class censuses and the bound checks.
//
// Exit status: 0 on success, 1 on usage or domain errors, 2 when a check fails.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "mpr/acceptance.hpp"
#include "mpr/errors.hpp"
#include "mpr/factor_cache.hpp"
#include "mpr/matcensus.hpp"
#include "mpr/ntheory.hpp"
#include "mpr/paperbounds.hpp"
#include "mpr/permcensus.hpp"
#include "mpr/records.hpp"

namespace {

using namespace mpr;

struct Globals {
  std::string format = "jsonl";
  unsigned workers = 1;
  std::optional<std::uint64_t> limit;
  std::string exceptional_table;
  std::string cache;
  bool stretch = false;

  CensusOptions census() const {
    CensusOptions o;
    o.workers = workers;
    if (limit) o.ceiling = static_cast<i128>(*limit);
    return o;
  }
  SuiteOptions suite() const {
    SuiteOptions o;
    o.workers = workers;
    o.ceiling = census().ceiling;
    o.stretch = stretch;
    return o;
  }
};

// Writes records in order and remembers whether any check failed.
class Output {
 public:
  Output(OutputFormat format, std::string schema) : sink_(std::cout, format, std::move(schema)) {}
  void add(const OutputRecord& r) {
    sink_.write(r);
    if (r.schema == "bound" && !std::get<bool>(r.at("holds"))) failed_ = true;
  }
  void add(const std::vector<OutputRecord>& rs) {
    for (const auto& r : rs) add(r);
  }
  void add(const BoundReport& b) { add(bound_record(b)); }
  void add(const std::vector<BoundReport>& bs) {
    for (const auto& b : bs) add(b);
  }
  int finish() {
    sink_.finish();
    std::cout.flush();
    return failed_ ? 2 : 0;
  }

 private:
  RecordSink sink_;
  bool failed_ = false;
};

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

std::vector<ExceptionalRow> exceptional_rows(const Globals& g) {
  if (g.exceptional_table.empty()) return {e8_row()};
  return load_exceptional_table(g.exceptional_table);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal prime-ratio censuses and bound checks for finite simple groups", "mprcensus"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--limit", g.limit, "census enumeration ceiling (group order)");
  app.add_option("--exceptional-table", g.exceptional_table, "extra exceptional rows, family<TAB>exponent<TAB>dimension");
  app.add_option("--cache", g.cache, "factorization cache file");
  app.add_flag("--stretch", g.stretch, "include the PSL(4,2) ~ Alt(8) cross-check in verify-all");

  std::string i_value, i_base;
  unsigned n = 0, exp = 0, n_min = 4, n_max = 120, m = 0, m_min = 5, m_max = 40, d = 0, a = 1;
  std::optional<unsigned> p_opt, s_opt, a_opt;
  std::string method = "closed", group, family = "PSL";
  std::vector<std::string> groups;
  std::vector<unsigned> alts, ds, qs;

  auto* cyc = app.add_subcommand("cyclotomic", "Phi_n(x) and its value at a");
  cyc->add_option("--n", n, "index")->required()->check(CLI::Range(1u, kMaxCyclotomicIndex));
  cyc->add_option("--a", i_base, "evaluation point (default 2)");

  auto* fac = app.add_subcommand("factor", "prime factorization");
  fac->add_option("--value", i_value, "integer, |value| < 2^127")->required();

  auto* zs = app.add_subcommand("zsigmondy", "primitive prime divisors of base^exp - 1");
  zs->add_option("--base", i_base)->required();
  zs->add_option("--exp", exp)->required();

  auto* st = app.add_subcommand("stewart-table", "largest prime factor of Phi_n(base) against n exp(log n / 104 log log n)");
  st->add_option("--base", i_base)->required();
  st->add_option("--n-min", n_min);
  st->add_option("--n-max", n_max);

  auto* ac = app.add_subcommand("alt-census", "Aut-classes of prime-order elements of Alt(m)");
  ac->add_option("--m", m)->required()->check(CLI::Range(5u, 1000u));
  ac->add_option("--p", p_opt, "prime (default: every prime up to m)");
  ac->add_option("--method", method, "closed or brute")->check(CLI::IsMember({"closed", "brute"}));

  auto* mc = app.add_subcommand("mat-census", "Aut-classes of prime-order elements of PSL(d,q) or PGL(d,q)");
  mc->add_option("--group", group, "e.g. PSL(2,11)")->required();
  mc->add_option("--p", p_opt, "prime (default: every prime dividing the order)");

  auto* l1 = app.add_subcommand("verify-lemma1", "generator-orbit count == phi(o(x)) / |N:C|");
  l1->add_option("--group", groups, "groups (repeatable)");
  l1->add_option("--alt", alts, "alternating degrees in {5,7,8} (repeatable)");

  auto* l2 = app.add_subcommand("verify-lemma2", "|N:C| <= d in PGL(d,q)");
  l2->add_option("--d", ds, "dimensions (repeatable)");
  l2->add_option("--q", qs, "field sizes (repeatable)");

  auto* vp = app.add_subcommand("verify-ppd", "mpr*(x) >= (s-1)/(6 a delta d)");
  vp->add_option("--family", family, "PSL, PSU, PSp, Omega_odd, POmega_plus, POmega_minus");
  vp->add_option("--d", d, "dimension (default: the PSL sweep)");
  vp->add_option("--p", p_opt, "characteristic");
  vp->add_option("--a", a, "field degree");

  auto* vd = app.add_subcommand("verify-dihedral", "split-torus normalizer in PSL(2,p)");
  vd->add_option("--p", p_opt);
  vd->add_option("--s", s_opt);

  auto* ab = app.add_subcommand("alt-bound", "7 mpr(Alt(m)) >= m");
  ab->add_option("--m-min", m_min)->check(CLI::Range(5u, 1000u));
  ab->add_option("--m-max", m_max)->check(CLI::Range(5u, 1000u));

  auto* eb = app.add_subcommand("exceptional-bound", "(s-1)/(2 a n) with s = P[Phi_{ae}(p)]");
  eb->add_option("--p", p_opt);
  eb->add_option("--a", a_opt);

  auto* va = app.add_subcommand("verify-all", "the full acceptance suite, one record per criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!g.cache.empty()) {
      set_factor_cache(std::make_shared<FactorCache>(
          g.cache, [](const std::string& w) { std::cerr << "warning: " << w << "\n"; }));
    }
    const OutputFormat format = parse_output_format(g.format);
    const CensusOptions opts = g.census();

    if (cyc->parsed()) {
      Output out(format, "cyclotomic");
      out.add(cyclotomic_record(n, i_base.empty() ? 2 : parse_i128(i_base)));
      return out.finish();
    }
    if (fac->parsed()) {
      Output out(format, "factor");
      out.add(factor_record(parse_i128(i_value)));
      return out.finish();
    }
    if (zs->parsed()) {
      Output out(format, "ppd");
      out.add(ppd_record(primitive_prime_divisors(parse_i128(i_base), exp)));
      return out.finish();
    }
    if (st->parsed()) {
      Output out(format, "stewart");
      for (const auto& row : stewart_table(parse_i128(i_base), n_min, n_max, g.workers)) out.add(stewart_record(row));
      return out.finish();
    }
    if (ac->parsed()) {
      Output out(format, "census");
      const auto primes = p_opt ? std::vector<unsigned>{*p_opt} : primes_up_to(m);
      for (const unsigned p : primes) {
        if (m == 6) {
          out.add(census_records(alt6_full_aut_census(p)));
        } else if (method == "brute") {
          out.add(census_records(brute_force_alt_census(m, p, g.workers)));
        } else {
          out.add(census_records(closed_form_alt_census(m, p)));
        }
      }
      return out.finish();
    }
    if (mc->parsed()) {
      Output out(format, "census");
      const auto spec = parse_group_spec(group);
      AutCensus engine(spec, Acting::FullAut, opts);
      const auto primes = p_opt ? std::vector<unsigned>{*p_opt} : prime_divisors(spec.order);
      for (const unsigned p : primes) out.add(census_records(engine.census(p), engine.group().ring()));
      return out.finish();
    }
    if (l1->parsed()) {
      Output out(format, "bound");
      std::vector<GroupSpec> specs;
      for (const auto& s : groups) specs.push_back(parse_group_spec(s));
      if (specs.empty() && alts.empty()) {
        for (const unsigned q : {4u, 5u, 7u, 8u, 9u, 11u, 13u}) specs.push_back(make_group_spec(GroupFamily::PSL, 2, q));
        alts = {5, 7, 8};
      }
      out.add(check_lemma1_sweep(specs, alts, opts));
      return out.finish();
    }
    if (l2->parsed()) {
      Output out(format, "bound");
      if (ds.empty()) ds = {2, 3};
      if (qs.empty()) qs = {2, 3, 4, 5, 7, 8, 9};
      out.add(check_lemma2_sweep(ds, qs, opts));
      return out.finish();
    }
    if (vp->parsed()) {
      Output out(format, "bound");
      if (d == 0) {
        out.add(check_ppd_sweep(opts));
        return out.finish();
      }
      if (!p_opt) throw UsageError("verify-ppd: --d requires --p");
      const auto spec = derive_family_spec(parse_lie_family(family), d, *p_opt, a);
      if (spec.family == LieFamily::PSL) {
        out.add(check_ppd(spec, opts));
      } else {
        const Rational bound = ppd_lower_bound(spec);
        out.add(make_report("ppd-bound", spec.name() + " s=" + to_string(*zsig_prime_for(spec)), Rational(*zsig_prime_for(spec)),
                            bound, Relation::Computed,
                            "b=" + std::to_string(spec.zsig_exponent) + " delta=" + std::to_string(spec.delta) +
                                "; not enumerable, bound only"));
      }
      return out.finish();
    }
    if (vd->parsed()) {
      Output out(format, "bound");
      if (p_opt.has_value() != s_opt.has_value()) throw UsageError("verify-dihedral: give both --p and --s, or neither");
      std::vector<std::pair<unsigned, unsigned>> pairs{{11, 5}, {13, 3}, {19, 3}, {29, 7}, {31, 5}};
      if (p_opt) pairs = {{*p_opt, *s_opt}};
      for (const auto& [p, s] : pairs) out.add(verify_dihedral_structure(p, s, opts));
      return out.finish();
    }
    if (ab->parsed()) {
      Output out(format, "bound");
      if (m_min > m_max) throw UsageError("alt-bound: --m-min exceeds --m-max");
      const auto alt6 = psl2_9_alt6_realization(opts);
      for (unsigned k = m_min; k <= m_max; ++k) out.add(alt_bound_chain(k, alt6));
      return out.finish();
    }
    if (eb->parsed()) {
      Output out(format, "bound");
      if (p_opt.has_value() != a_opt.has_value()) throw UsageError("exceptional-bound: give both --p and --a, or neither");
      std::vector<std::pair<unsigned, unsigned>> pairs{{2, 1}, {3, 1}, {2, 2}};
      if (p_opt) pairs = {{*p_opt, *a_opt}};
      for (const auto& row : exceptional_rows(g)) {
        for (const auto& [p, aa] : pairs) out.add(exceptional_lower_bound(row, p, aa).report);
      }
      return out.finish();
    }
    if (va->parsed()) {
      Output out(format, "bound");
      for (unsigned id = 1; id <= kCriterionCount; ++id) out.add(criterion_report(run_criterion(id, g.suite())));
      return out.finish();
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
