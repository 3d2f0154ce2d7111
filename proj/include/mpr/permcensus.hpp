#pragma once

// Alternating-group censuses. For m != 6, Aut(Alt(m)) = Sym(m) and Aut-classes
// are cycle types, so counts come in closed form; small degrees are also
// enumerated outright as an oracle for the closed forms.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mpr/int128.hpp"

namespace mpr {

struct CycleType {
  std::vector<unsigned> parts;  // weakly decreasing, each >= 1

  unsigned degree() const;
  /// Number of parts equal to `len`.
  unsigned count(unsigned len) const;
  /// Even permutations have an even number of even-length cycles.
  bool is_even() const;
  /// lcm of the parts.
  std::uint64_t order() const;
  /// "(2,2,1)"
  std::string str() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

/// Bijection on {0..m-1}. Products apply the left factor first: (a*b)(i) = b(a(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(unsigned m);
  /// Places the cycles of `t` left to right over {0..m-1}.
  static Permutation from_cycle_type(const CycleType& t);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  const std::vector<std::uint8_t>& images() const { return images_; }
  std::uint8_t operator()(unsigned i) const { return images_[i]; }

  Permutation inverse() const;
  Permutation pow(std::uint64_t k) const;
  /// sigma^-1 * this * sigma
  Permutation conjugate_by(const Permutation& sigma) const;

  CycleType cycle_type() const;
  bool is_even() const;
  std::uint64_t order() const;
  /// Cycle notation with fixed points omitted, e.g. "(0 1)(2 3)"; "()" for the identity.
  std::string str() const;

  /// Injective 4-bits-per-point packing, valid for degree <= 8.
  std::uint32_t key() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

enum class CensusSource { ClosedForm, BruteForce, MatrixRealization };
const char* to_string(CensusSource s);

struct AltClassRecord {
  CycleType cycle_type;
  Permutation representative;
  i128 class_size = 0;
  unsigned n_over_c_index = 0;
  unsigned mpr_star = 0;
  unsigned generator_orbit_count = 0;
};

struct AltCensusRow {
  unsigned degree = 0;
  unsigned prime = 0;
  std::vector<CycleType> class_cycle_types;
  std::vector<AltClassRecord> classes;
  unsigned mpr_p = 0;
  unsigned m_p = 0;  // Aut-classes of non-identity elements of p-power order
  CensusSource source = CensusSource::ClosedForm;
};

/// Cycle types of even permutations of order p in Sym(m), by number of
/// p-cycles ascending.
std::vector<CycleType> order_p_cycle_types(unsigned m, unsigned p);

/// Cycle types of even, non-identity permutations of p-power order.
std::vector<CycleType> p_power_cycle_types(unsigned m, unsigned p);

/// |Sym(m)| / |C_Sym(m)(x)| for x of the given type.
i128 sym_class_size(const CycleType& t);

/// Supplies (mpr_p, m_p) of Alt(6) from a faithful realization with its full
/// automorphism group (Aut(Alt(6)) is larger than Sym(6)).
using Alt6Realization = std::function<std::pair<unsigned, unsigned>(unsigned p)>;

/// Number of Aut(Alt(m))-classes of elements of order p. m = 6 requires a realization.
unsigned alt_mpr_p(unsigned m, unsigned p, const Alt6Realization& alt6 = {});

/// Closed-form census row (m >= 5, m != 6).
AltCensusRow closed_form_alt_census(unsigned m, unsigned p);

/// Enumerates Alt(m), 5 <= m <= 8, m != 6, and groups elements into Sym(m)-orbits
/// by explicit conjugation.
AltCensusRow brute_force_alt_census(unsigned m, unsigned p, unsigned workers = 1);

/// Aut(Alt(6)) census by enumeration: Sym(6) conjugation together with an
/// explicit outer automorphism of Sym(6), located by search.
AltCensusRow alt6_full_aut_census(unsigned p);

/// An outer automorphism of Sym(6) as an image table indexed like
/// sym_elements(6); exposed for testing.
std::vector<Permutation> sym6_outer_automorphism_images();

/// All of Sym(m) in lexicographic order of image sequences.
std::vector<Permutation> sym_elements(unsigned m);

/// mpr*(x) for x of order p and cycle type t in Alt(m); always 1. For m <= 8 the
/// claim is checked by enumerating the generators of <x>; a failure throws.
unsigned mpr_star_alt(unsigned m, unsigned p, const CycleType& t);

}  // namespace mpr
