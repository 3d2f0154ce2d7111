#include <algorithm>
#include <numeric>
#include <set>

#include "mpr/errors.hpp"
#include "mpr/matcensus.hpp"
#include "mpr/ntheory.hpp"
#include "mpr/parallel.hpp"
#include "mpr/similarity.hpp"

namespace mpr {

const char* to_string(IndexRoute r) { return r == IndexRoute::BruteForce ? "brute-force" : "similarity"; }

bool AutClassRecord::lemma1_consistent() const {
  const auto phi = euler_phi(element_order);
  return n_over_c_index != 0 && phi % n_over_c_index == 0 && mpr_star == phi / n_over_c_index &&
         generator_orbit_count == mpr_star;
}

namespace {

bool is_power_of(std::uint64_t n, unsigned p) {
  if (n < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

struct SweepPart {
  std::vector<std::uint32_t> hits;
  i128 normalizer = 0;
  i128 centralizer = 0;
  std::vector<std::uint32_t> n_members;
  std::vector<std::uint32_t> c_members;
};

}  // namespace

struct AutCensus::Impl {
  GroupSpec spec;
  CensusOptions options;
  std::unique_ptr<MatrixGroup> group;
  std::unique_ptr<MatrixGroup> pgl_storage;
  const MatrixGroup* pgl = nullptr;
  std::vector<Matrix> pgl_inverse;
  unsigned frob_count = 1;
  unsigned graph_count = 1;

  struct Orbit {
    std::uint32_t rep;
    std::vector<std::uint32_t> members;
    i128 normalizer;
    i128 centralizer;
  };
  std::vector<std::int32_t> class_of;
  std::vector<Orbit> orbits;

  const MatrixRing& ring() const { return group->ring(); }
  std::size_t acting_size() const { return pgl->size() * frob_count * graph_count; }

  // x under graph^t then Frobenius^f, indexed t * frob_count + f.
  std::vector<Matrix> variants(const Matrix& x) const {
    std::vector<Matrix> out;
    for (unsigned t = 0; t < graph_count; ++t) {
      Matrix v = t ? ring().graph(x) : x;
      for (unsigned f = 0; f < frob_count; ++f) {
        out.push_back(v);
        v = ring().frobenius(v);
      }
    }
    return out;
  }

  ProjectiveMatrix apply(std::size_t i, const std::vector<Matrix>& vars) const {
    const std::size_t n = pgl->size();
    const std::size_t g = i % n;
    return ring().canonical(ring().mul(ring().mul(pgl_inverse[g], vars[i / n]), (*pgl)[g]));
  }

  SweepPart sweep(const ProjectiveMatrix& x, bool collect) const {
    const auto vars = variants(x);
    const std::uint32_t xi = group->index_of(x);
    std::vector<char> in_cyclic(group->size(), 0);
    in_cyclic[xi] = 1;
    {
      Matrix y = x;
      for (std::uint64_t k = 1; k < group->order_of(xi); ++k, y = ring().mul(y, x)) {
        in_cyclic[group->index_of(ring().canonical(y))] = 1;
      }
    }
    const std::size_t total = acting_size();
    const std::size_t chunks = std::min<std::size_t>(total, std::max(1u, options.workers) * 4);
    const auto bounds = chunk_bounds(total, chunks);
    auto parts = parallel_map(chunks, options.workers, [&](std::size_t c) {
      SweepPart part;
      for (std::size_t i = bounds[c]; i < bounds[c + 1]; ++i) {
        const std::uint32_t h = group->index_of(apply(i, vars));
        part.hits.push_back(h);
        if (in_cyclic[h]) {
          ++part.normalizer;
          if (collect) part.n_members.push_back(static_cast<std::uint32_t>(i));
        }
        if (h == xi) {
          ++part.centralizer;
          if (collect) part.c_members.push_back(static_cast<std::uint32_t>(i));
        }
      }
      std::sort(part.hits.begin(), part.hits.end());
      part.hits.erase(std::unique(part.hits.begin(), part.hits.end()), part.hits.end());
      return part;
    });
    SweepPart total_part;
    for (auto& part : parts) {
      total_part.hits.insert(total_part.hits.end(), part.hits.begin(), part.hits.end());
      total_part.normalizer += part.normalizer;
      total_part.centralizer += part.centralizer;
      total_part.n_members.insert(total_part.n_members.end(), part.n_members.begin(), part.n_members.end());
      total_part.c_members.insert(total_part.c_members.end(), part.c_members.begin(), part.c_members.end());
    }
    std::sort(total_part.hits.begin(), total_part.hits.end());
    total_part.hits.erase(std::unique(total_part.hits.begin(), total_part.hits.end()), total_part.hits.end());
    return total_part;
  }

  std::int32_t ensure_orbit(std::uint32_t i) {
    if (class_of[i] >= 0) return class_of[i];
    auto s = sweep((*group)[i], false);
    const auto id = static_cast<std::int32_t>(orbits.size());
    for (const auto h : s.hits) {
      if (class_of[h] >= 0) throw ConsistencyError(spec.name() + ": automorphism orbits overlap");
      class_of[h] = id;
    }
    orbits.push_back({i, std::move(s.hits), s.normalizer, s.centralizer});
    return id;
  }
};

AutCensus::AutCensus(const GroupSpec& spec, Acting acting, const CensusOptions& options)
    : impl_(std::make_unique<Impl>()) {
  Impl& m = *impl_;
  m.spec = spec;
  m.options = options;
  m.group = std::make_unique<MatrixGroup>(spec, options.ceiling);
  if (spec.family == GroupFamily::PGL) {
    m.pgl = m.group.get();
  } else {
    GroupSpec pgl_spec = spec;
    pgl_spec.family = GroupFamily::PGL;
    pgl_spec.order = group_order(GroupFamily::PGL, spec.d, spec.q());
    // PGL is at most gcd(d, q-1) times larger than PSL and is needed to act.
    m.pgl_storage = std::make_unique<MatrixGroup>(pgl_spec, std::max(options.ceiling, pgl_spec.order));
    m.pgl = m.pgl_storage.get();
  }
  for (const auto& g : m.pgl->elements()) m.pgl_inverse.push_back(m.ring().inverse(g));
  if (acting == Acting::FullAut) {
    m.frob_count = spec.field->degree();
    m.graph_count = spec.d >= 3 ? 2 : 1;
  }
  m.class_of.assign(m.group->size(), -1);
}

AutCensus::~AutCensus() = default;

const MatrixGroup& AutCensus::group() const { return *impl_->group; }
const MatrixGroup& AutCensus::acting_pgl() const { return *impl_->pgl; }
std::size_t AutCensus::acting_size() const { return impl_->acting_size(); }

ProjectiveMatrix AutCensus::act(std::size_t i, const ProjectiveMatrix& x) const {
  return impl_->apply(i, impl_->variants(x));
}

MatCensusRow AutCensus::census(unsigned p) {
  if (p < 2 || !is_prime(p)) throw DomainError("census: " + std::to_string(p) + " is not prime");
  Impl& m = *impl_;
  const MatrixGroup& G = *m.group;
  std::set<std::int32_t> p_power_orbits;
  for (std::uint32_t i = 0; i < G.size(); ++i) {
    if (is_power_of(G.order_of(i), p)) p_power_orbits.insert(m.ensure_orbit(i));
  }

  MatCensusRow row;
  row.group = m.spec.name();
  row.prime = p;
  row.m_p = static_cast<unsigned>(p_power_orbits.size());
  const auto phi = euler_phi(p);
  for (const auto id : p_power_orbits) {
    const auto& orbit = m.orbits[static_cast<std::size_t>(id)];
    if (G.order_of(orbit.rep) != p) continue;
    AutClassRecord rec;
    rec.representative = G[orbit.rep];
    rec.element_order = p;
    rec.class_size = static_cast<i128>(orbit.members.size());
    rec.normalizer_count = orbit.normalizer;
    rec.centralizer_count = orbit.centralizer;
    if (orbit.centralizer == 0 || orbit.normalizer % orbit.centralizer != 0) {
      throw ConsistencyError(row.group + ": centralizer count does not divide normalizer count");
    }
    rec.n_over_c_index = static_cast<unsigned>(orbit.normalizer / orbit.centralizer);
    rec.mpr_star = phi % rec.n_over_c_index == 0 ? static_cast<unsigned>(phi / rec.n_over_c_index) : 0;
    std::set<std::int32_t> generator_classes;
    Matrix y = rec.representative;
    for (unsigned k = 1; k < p; ++k, y = m.ring().mul(y, rec.representative)) {
      generator_classes.insert(m.class_of[G.index_of(m.ring().canonical(y))]);
    }
    rec.generator_orbit_count = static_cast<unsigned>(generator_classes.size());
    row.order_p_elements += rec.class_size;
    row.classes.push_back(rec);
  }
  std::sort(row.classes.begin(), row.classes.end(),
            [](const AutClassRecord& a, const AutClassRecord& b) { return a.representative < b.representative; });
  row.mpr_p = static_cast<unsigned>(row.classes.size());
  return row;
}

std::vector<ProjectiveMatrix> AutCensus::orbit(const ProjectiveMatrix& x) {
  Impl& m = *impl_;
  const auto id = m.ensure_orbit(m.group->index_of(m.ring().canonical(x)));
  std::vector<ProjectiveMatrix> out;
  for (const auto h : m.orbits[static_cast<std::size_t>(id)].members) out.push_back((*m.group)[h]);
  return out;
}

NormalizerCentralizer AutCensus::normalizer_centralizer(const ProjectiveMatrix& x, bool collect_members) {
  Impl& m = *impl_;
  auto s = m.sweep(m.ring().canonical(x), collect_members);
  NormalizerCentralizer out;
  out.normalizer = s.normalizer;
  out.centralizer = s.centralizer;
  out.index = static_cast<unsigned>(s.normalizer / s.centralizer);
  out.normalizer_members = std::move(s.n_members);
  out.centralizer_members = std::move(s.c_members);
  return out;
}

MatCensusRow census(const GroupSpec& spec, unsigned p, const CensusOptions& options) {
  return AutCensus(spec, Acting::FullAut, options).census(p);
}

std::vector<ProjectiveMatrix> aut_orbit(const GroupSpec& spec, const ProjectiveMatrix& x,
                                        const CensusOptions& options) {
  return AutCensus(spec, Acting::FullAut, options).orbit(x);
}

unsigned normalizer_centralizer_index(const GroupSpec& spec, Acting acting, const ProjectiveMatrix& x,
                                      const CensusOptions& options) {
  return AutCensus(spec, acting, options).normalizer_centralizer(x).index;
}

ProjectiveMatrix psl2_torus_element(unsigned p, unsigned s) {
  if (p <= 3 || !is_prime(p)) throw DomainError("psl2_torus_element: p must be a prime > 3");
  if (s < 3 || !is_prime(s) || (p - 1) % s != 0) {
    throw DomainError("psl2_torus_element: s = " + std::to_string(s) + " is not an odd prime dividing " +
                      std::to_string(p - 1));
  }
  unsigned zeta = 2;
  while (multiplicative_order(zeta, p) != s) ++zeta;
  const MatrixRing ring(FiniteField::build(p, 1), 2);
  const auto z = static_cast<FieldElement>(zeta);
  return ring.canonical(ring.from_rows({{z, 0}, {0, ring.field().inv(z)}}));
}

BoundReport verify_dihedral_structure(unsigned p, unsigned s, const CensusOptions& options) {
  const ProjectiveMatrix x = psl2_torus_element(p, s);
  const GroupSpec spec = make_group_spec(GroupFamily::PSL, 2, p);
  AutCensus engine(spec, Acting::FullAut, options);
  const MatrixRing& ring = engine.group().ring();
  const auto nc = engine.normalizer_centralizer(x, true);

  std::vector<std::string> failed;
  if (nc.normalizer != 2 * static_cast<i128>(p - 1)) failed.push_back("|N| != 2(p-1)");
  if (nc.centralizer != static_cast<i128>(p - 1)) failed.push_back("|C| != p-1");
  const bool cyclic = std::any_of(nc.centralizer_members.begin(), nc.centralizer_members.end(), [&](std::uint32_t i) {
    return engine.acting_pgl().order_of(i) == p - 1;
  });
  if (!cyclic) failed.push_back("C has no element of order p-1");
  const ProjectiveMatrix x_inv = ring.canonical(ring.inverse(x));
  bool inverts = true;
  bool involutions = true;
  for (const auto i : nc.normalizer_members) {
    if (std::binary_search(nc.centralizer_members.begin(), nc.centralizer_members.end(), i)) continue;
    inverts = inverts && engine.act(i, x) == x_inv;
    involutions = involutions && engine.acting_pgl().order_of(i) == 2;
  }
  if (!inverts) failed.push_back("N \\ C does not invert x");
  if (!involutions) failed.push_back("N \\ C contains a non-involution");

  const auto mpr_star = nc.index != 0 && (s - 1) % nc.index == 0 ? (s - 1) / nc.index : 0;
  std::string detail = "|N|=" + to_string(nc.normalizer) + " |C|=" + to_string(nc.centralizer) +
                       " index=" + std::to_string(nc.index) + " x=" + ring.str(x);
  for (const auto& f : failed) detail += "; failed: " + f;
  auto report = make_report("dihedral-normalizer", spec.name() + " s=" + std::to_string(s), Rational(mpr_star),
                            Rational((s - 1) / 2), Relation::Equal, detail);
  report.holds = report.holds && failed.empty();
  return report;
}

Alt6Realization psl2_9_alt6_realization(const CensusOptions& options) {
  auto engine = std::make_shared<AutCensus>(make_group_spec(GroupFamily::PSL, 2, 9), Acting::FullAut, options);
  return [engine](unsigned p) {
    const auto row = engine->census(p);
    return std::make_pair(row.mpr_p, row.m_p);
  };
}

std::vector<PglPrimeClass> pgl_prime_order_classes(unsigned d, unsigned q, IndexRoute route,
                                                   const CensusOptions& options) {
  const GroupSpec spec = make_group_spec(GroupFamily::PGL, d, q);
  std::vector<PglPrimeClass> out;
  if (route == IndexRoute::BruteForce) {
    AutCensus engine(spec, Acting::PGL, options);
    for (const auto& pp : factorize(spec.order).factors) {
      for (const auto& rec : engine.census(static_cast<unsigned>(pp.prime)).classes) {
        out.push_back({rec.representative, static_cast<unsigned>(rec.element_order), rec.n_over_c_index,
                       rec.class_size});
      }
    }
  } else {
    const MatrixRing ring(spec.field, d);
    for (const auto& form : rational_canonical_forms(ring)) {
      const ProjectiveMatrix x = ring.canonical(form);
      const auto order = ring.projective_order(x);
      if (order < 2 || !is_prime(static_cast<i128>(order))) continue;
      const bool seen = std::any_of(out.begin(), out.end(), [&](const PglPrimeClass& c) {
        return c.order == order && pgl_similar(ring, x, c.representative);
      });
      if (!seen) out.push_back({x, static_cast<unsigned>(order), 0, 0});
    }
    for (auto& c : out) c.index = pgl_index_by_similarity(ring, c.representative);
  }
  std::sort(out.begin(), out.end(), [](const PglPrimeClass& a, const PglPrimeClass& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.representative < b.representative;
  });
  return out;
}

}  // namespace mpr
