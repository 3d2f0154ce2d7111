#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "mpr/errors.hpp"
#include "mpr/ntheory.hpp"
#include "mpr/parallel.hpp"
#include "mpr/permcensus.hpp"

namespace mpr {
namespace {

bool is_power_of(std::uint64_t n, unsigned p) {
  if (n < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

// Automorphisms of Alt(m) realized as sigma-conjugation, optionally preceded
// by a fixed outer automorphism `theta` of Sym(m).
class PermAction {
 public:
  PermAction(std::vector<Permutation> sigmas, const std::unordered_map<std::uint32_t, Permutation>* theta)
      : sigmas_(std::move(sigmas)), theta_(theta) {}

  std::size_t size() const { return theta_ ? 2 * sigmas_.size() : sigmas_.size(); }

  Permutation apply(std::size_t i, const Permutation& x) const {
    if (i < sigmas_.size()) return x.conjugate_by(sigmas_[i]);
    return theta_->at(x.key()).conjugate_by(sigmas_[i - sigmas_.size()]);
  }

 private:
  std::vector<Permutation> sigmas_;
  const std::unordered_map<std::uint32_t, Permutation>* theta_;
};

struct Sweep {
  std::vector<std::uint32_t> hits;
  std::uint64_t normalizer = 0;
  std::uint64_t centralizer = 0;
};

AltCensusRow run_census(unsigned m, unsigned p, const PermAction& action, unsigned workers) {
  std::vector<Permutation> group;
  for (auto& g : sym_elements(m)) {
    if (g.is_even()) group.push_back(std::move(g));
  }
  std::unordered_map<std::uint32_t, std::uint32_t> index;
  index.reserve(group.size() * 2);
  for (std::uint32_t i = 0; i < group.size(); ++i) index.emplace(group[i].key(), i);

  const std::size_t chunks = std::max<std::size_t>(1, workers) * 4;
  const auto bounds = chunk_bounds(action.size(), chunks);

  // Full sweep of the automorphisms over x: orbit hits plus normalizer and
  // centralizer counts for <x>.
  auto sweep = [&](const Permutation& x) {
    std::set<std::uint32_t> powers;
    for (std::uint64_t k = 1; k < x.order(); ++k) powers.insert(x.pow(k).key());
    const auto parts = parallel_map(chunks, workers, [&](std::size_t c) {
      Sweep s;
      for (std::size_t i = bounds[c]; i < bounds[c + 1]; ++i) {
        const Permutation y = action.apply(i, x);
        const auto key = y.key();
        s.hits.push_back(index.at(key));
        if (powers.count(key)) ++s.normalizer;
        if (y == x) ++s.centralizer;
      }
      return s;
    });
    Sweep total;
    for (const auto& s : parts) {
      total.hits.insert(total.hits.end(), s.hits.begin(), s.hits.end());
      total.normalizer += s.normalizer;
      total.centralizer += s.centralizer;
    }
    std::sort(total.hits.begin(), total.hits.end());
    total.hits.erase(std::unique(total.hits.begin(), total.hits.end()), total.hits.end());
    return total;
  };

  constexpr int kUnassigned = -1;
  std::vector<int> class_of(group.size(), kUnassigned);
  struct Orbit {
    std::vector<std::uint32_t> members;
    std::uint64_t order;
  };
  std::vector<Orbit> orbits;
  for (std::uint32_t i = 0; i < group.size(); ++i) {
    const auto order = group[i].order();
    if (!is_power_of(order, p) || class_of[i] != kUnassigned) continue;
    auto s = sweep(group[i]);
    for (const auto h : s.hits) class_of[h] = static_cast<int>(orbits.size());
    orbits.push_back({std::move(s.hits), order});
  }

  AltCensusRow row;
  row.degree = m;
  row.prime = p;
  row.source = CensusSource::BruteForce;
  row.m_p = static_cast<unsigned>(orbits.size());

  const auto phi = euler_phi(p);
  for (const auto& orbit : orbits) {
    if (orbit.order != p) continue;
    // Representative: the canonical permutation of the orbit's smallest cycle type.
    std::set<CycleType> types;
    for (const auto h : orbit.members) types.insert(group[h].cycle_type());
    const CycleType type = *std::min_element(types.begin(), types.end(), [p](const CycleType& a, const CycleType& b) {
      if (a.count(p) != b.count(p)) return a.count(p) < b.count(p);
      return a < b;
    });
    const Permutation rep = Permutation::from_cycle_type(type);
    const auto rep_index = index.at(rep.key());
    if (!std::binary_search(orbit.members.begin(), orbit.members.end(), rep_index)) {
      throw ConsistencyError("brute-force census: canonical representative " + rep.str() + " outside its orbit");
    }

    const auto s = sweep(rep);
    AltClassRecord rec;
    rec.cycle_type = type;
    rec.representative = rep;
    rec.class_size = static_cast<i128>(orbit.members.size());
    rec.n_over_c_index = static_cast<unsigned>(s.normalizer / s.centralizer);
    rec.mpr_star = s.normalizer % s.centralizer == 0 && phi % rec.n_over_c_index == 0
                       ? static_cast<unsigned>(phi / rec.n_over_c_index)
                       : 0;
    std::set<int> generator_classes;
    for (unsigned k = 1; k < p; ++k) generator_classes.insert(class_of[index.at(rep.pow(k).key())]);
    rec.generator_orbit_count = static_cast<unsigned>(generator_classes.size());
    row.classes.push_back(std::move(rec));
  }
  std::sort(row.classes.begin(), row.classes.end(), [p](const AltClassRecord& a, const AltClassRecord& b) {
    if (a.cycle_type.count(p) != b.cycle_type.count(p)) return a.cycle_type.count(p) < b.cycle_type.count(p);
    return a.representative < b.representative;
  });
  for (const auto& rec : row.classes) row.class_cycle_types.push_back(rec.cycle_type);
  row.mpr_p = static_cast<unsigned>(row.classes.size());
  return row;
}

}  // namespace

AltCensusRow brute_force_alt_census(unsigned m, unsigned p, unsigned workers) {
  if (m < 5 || m > 8 || m == 6) {
    throw RangeError("brute_force_alt_census: degree must be one of 5, 7, 8 (got " + std::to_string(m) + ")");
  }
  if (p < 2 || !is_prime(p)) throw DomainError("brute_force_alt_census: " + std::to_string(p) + " is not prime");
  const PermAction action(sym_elements(m), nullptr);
  return run_census(m, p, action, workers);
}

std::vector<Permutation> sym6_outer_automorphism_images() {
  const auto sym6 = sym_elements(6);
  std::unordered_map<std::uint32_t, std::size_t> index;
  for (std::size_t i = 0; i < sym6.size(); ++i) index.emplace(sym6[i].key(), i);

  const Permutation s({1, 0, 2, 3, 4, 5});
  const Permutation t({1, 2, 3, 4, 5, 0});
  const CycleType triple_transposition{{2, 2, 2}};

  // Extend s -> s2, t -> t2 along the Cayley graph; consistency on every edge
  // makes the extension a homomorphism.
  auto try_extend = [&](const Permutation& s2, const Permutation& t2) -> std::vector<Permutation> {
    std::vector<Permutation> image(sym6.size());
    std::vector<bool> done(sym6.size(), false);
    const std::size_t id = index.at(Permutation::identity(6).key());
    image[id] = Permutation::identity(6);
    done[id] = true;
    std::deque<std::size_t> queue{id};
    const std::pair<const Permutation*, const Permutation*> gens[] = {{&s, &s2}, {&t, &t2}};
    while (!queue.empty()) {
      const auto g = queue.front();
      queue.pop_front();
      for (const auto& [gen, gen2] : gens) {
        const auto h = index.at((sym6[g] * *gen).key());
        const Permutation img = image[g] * *gen2;
        if (done[h]) {
          if (image[h] != img) return {};
          continue;
        }
        image[h] = img;
        done[h] = true;
        queue.push_back(h);
      }
    }
    std::set<std::uint32_t> distinct;
    for (const auto& img : image) distinct.insert(img.key());
    if (distinct.size() != sym6.size()) return {};
    return image;
  };

  for (const auto& s2 : sym6) {
    if (s2.cycle_type() != triple_transposition) continue;
    for (const auto& t2 : sym6) {
      if (t2.order() != 6) continue;
      auto image = try_extend(s2, t2);
      if (!image.empty()) return image;
    }
  }
  throw ConsistencyError("no outer automorphism of Sym(6) found");
}

AltCensusRow alt6_full_aut_census(unsigned p) {
  if (p < 2 || !is_prime(p)) throw DomainError("alt6_full_aut_census: " + std::to_string(p) + " is not prime");
  static const std::unordered_map<std::uint32_t, Permutation> theta = [] {
    const auto sym6 = sym_elements(6);
    const auto images = sym6_outer_automorphism_images();
    std::unordered_map<std::uint32_t, Permutation> table;
    for (std::size_t i = 0; i < sym6.size(); ++i) table.emplace(sym6[i].key(), images[i]);
    return table;
  }();
  const PermAction action(sym_elements(6), &theta);
  return run_census(6, p, action, 1);
}

}  // namespace mpr
