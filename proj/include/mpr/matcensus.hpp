#pragma once

// Matrix groups PSL_d(q) and PGL_d(q) for d in {2,3,4} and q <= 128, their
// full automorphism action and exact Aut-class censuses.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mpr/field.hpp"
#include "mpr/int128.hpp"
#include "mpr/matrix.hpp"
#include "mpr/permcensus.hpp"
#include "mpr/report.hpp"

namespace mpr {

enum class GroupFamily { PSL, PGL };

const char* to_string(GroupFamily f);

inline constexpr i128 kDefaultCeiling = 100000;

struct GroupSpec {
  GroupFamily family = GroupFamily::PSL;
  unsigned d = 2;
  std::shared_ptr<const FiniteField> field;
  i128 order = 0;

  unsigned q() const { return field->size(); }
  /// "PSL(2,9)"
  std::string name() const;
};

/// |PGL_d(q)| or |PSL_d(q)| from the closed forms.
i128 group_order(GroupFamily family, unsigned d, unsigned q);
GroupSpec make_group_spec(GroupFamily family, unsigned d, unsigned q);
/// Parses "PSL(d,q)" / "PGL(d,q)", case-insensitive.
GroupSpec parse_group_spec(std::string_view text);

struct CensusOptions {
  unsigned workers = 1;
  i128 ceiling = kDefaultCeiling;
};

/// All elements of a group in canonical projective form, sorted by their
/// row-major entries. Throws RangeError when the order exceeds the ceiling.
class MatrixGroup {
 public:
  MatrixGroup(GroupSpec spec, i128 ceiling);

  const GroupSpec& spec() const { return spec_; }
  const MatrixRing& ring() const { return ring_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<ProjectiveMatrix>& elements() const { return elements_; }
  const ProjectiveMatrix& operator[](std::size_t i) const { return elements_[i]; }

  /// Index of a canonical matrix, or nullopt if it is not in the group.
  std::optional<std::uint32_t> find(const ProjectiveMatrix& x) const;
  /// Like find, but a missing element is a ConsistencyError.
  std::uint32_t index_of(const ProjectiveMatrix& x) const;
  /// Projective element order.
  std::uint64_t order_of(std::uint32_t i) const { return orders_[i]; }

 private:
  GroupSpec spec_;
  MatrixRing ring_;
  std::vector<ProjectiveMatrix> elements_;
  std::vector<std::int32_t> dense_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
  std::vector<std::uint64_t> orders_;
};

std::vector<ProjectiveMatrix> enumerate_group(const GroupSpec& spec, i128 ceiling = kDefaultCeiling);

/// Least k >= 1 with g^k scalar.
std::uint64_t element_order(const MatrixRing& ring, const ProjectiveMatrix& g);

/// Which automorphisms act: conjugation by PGL_d(q) only, or all of Aut(T)
/// (PGL conjugation, Frobenius powers when a > 1, inverse-transpose when d >= 3).
enum class Acting { PGL, FullAut };

struct AutClassRecord {
  ProjectiveMatrix representative;
  std::uint64_t element_order = 0;
  i128 class_size = 0;
  /// Sizes of N(<x>) and C(x) counted over the acting set.
  i128 normalizer_count = 0;
  i128 centralizer_count = 0;
  unsigned n_over_c_index = 0;
  unsigned mpr_star = 0;
  unsigned generator_orbit_count = 0;

  /// mpr* = phi(o(x)) / |N:C| exactly, and equal to the generator-orbit count.
  bool lemma1_consistent() const;
};

struct MatCensusRow {
  std::string group;
  unsigned prime = 0;
  std::vector<AutClassRecord> classes;
  unsigned mpr_p = 0;
  /// Classes of non-identity p-power elements.
  unsigned m_p = 0;
  i128 order_p_elements = 0;
  CensusSource source = CensusSource::MatrixRealization;
};

struct NormalizerCentralizer {
  i128 normalizer = 0;
  i128 centralizer = 0;
  unsigned index = 0;
  /// Acting-set positions of the elements of N(<x>) and C(x) when collected.
  std::vector<std::uint32_t> normalizer_members;
  std::vector<std::uint32_t> centralizer_members;
};

/// Orbit and census engine for one group. Orbits found by one call are reused
/// by later ones; results never depend on call order or worker count.
class AutCensus {
 public:
  AutCensus(const GroupSpec& spec, Acting acting, const CensusOptions& options = {});
  ~AutCensus();
  AutCensus(const AutCensus&) = delete;
  AutCensus& operator=(const AutCensus&) = delete;

  const MatrixGroup& group() const;
  const MatrixGroup& acting_pgl() const;
  std::size_t acting_size() const;

  MatCensusRow census(unsigned p);
  /// Orbit of x, sorted.
  std::vector<ProjectiveMatrix> orbit(const ProjectiveMatrix& x);
  NormalizerCentralizer normalizer_centralizer(const ProjectiveMatrix& x, bool collect_members = false);
  /// The acting automorphism at position i applied to x.
  ProjectiveMatrix act(std::size_t i, const ProjectiveMatrix& x) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

MatCensusRow census(const GroupSpec& spec, unsigned p, const CensusOptions& options = {});
std::vector<ProjectiveMatrix> aut_orbit(const GroupSpec& spec, const ProjectiveMatrix& x,
                                        const CensusOptions& options = {});
unsigned normalizer_centralizer_index(const GroupSpec& spec, Acting acting, const ProjectiveMatrix& x,
                                      const CensusOptions& options = {});

/// Canonical image of diag(zeta, zeta^-1) in PSL_2(p), zeta the least residue of order s.
ProjectiveMatrix psl2_torus_element(unsigned p, unsigned s);
/// Normalizer/centralizer structure of the split-torus element in Aut(PSL_2(p)) = PGL_2(p).
BoundReport verify_dihedral_structure(unsigned p, unsigned s, const CensusOptions& options = {});

/// Alt(6) counts realized through the PSL_2(9) census.
Alt6Realization psl2_9_alt6_realization(const CensusOptions& options = {});

/// One PGL_d(q)-conjugacy class of prime-order elements with its |N:C|.
struct PglPrimeClass {
  ProjectiveMatrix representative;
  unsigned order = 0;
  unsigned index = 0;
  /// 0 when the class was found without enumeration.
  i128 class_size = 0;
};

enum class IndexRoute { BruteForce, Similarity };

const char* to_string(IndexRoute r);

/// Every PGL_d(q)-class of elements of prime order, sorted by (order, representative).
/// BruteForce enumerates the group (ceiling applies); Similarity walks rational
/// canonical forms and decides conjugacy by similarity invariants.
std::vector<PglPrimeClass> pgl_prime_order_classes(unsigned d, unsigned q, IndexRoute route,
                                                   const CensusOptions& options = {});

}  // namespace mpr
