#pragma once

// Case rules and inequalities for classical, alternating and exceptional
// groups: delta and Zsigmondy-exponent selection, the (s-1)/(6 a delta d)
// bound, the alternating chain 7 mpr >= m, and the exceptional (s-1)/(2ab) bound.

#include <optional>
#include <string>
#include <vector>

#include "mpr/int128.hpp"
#include "mpr/matcensus.hpp"
#include "mpr/permcensus.hpp"
#include "mpr/rational.hpp"
#include "mpr/report.hpp"

namespace mpr {

enum class LieFamily { PSL, PSU, PSp, OmegaOdd, POmegaPlus, POmegaMinus };

const char* to_string(LieFamily f);
/// Accepts the names printed by to_string, case-insensitive.
LieFamily parse_lie_family(const std::string& text);

struct FamilySpec {
  LieFamily family = LieFamily::PSL;
  unsigned d = 2;
  unsigned p = 2;
  unsigned a = 1;
  unsigned delta = 1;
  /// Exponent b with s the largest primitive prime divisor of p^b - 1.
  unsigned zsig_exponent = 2;
  /// Set for the named small groups without a usable Zsigmondy prime.
  std::optional<std::string> exclusion;

  unsigned q() const;
  /// e.g. "PSU(4,3)"
  std::string name() const;
};

/// Fills delta and b; rejects the dimension/field pairs outside the classical list.
FamilySpec derive_family_spec(LieFamily family, unsigned d, unsigned p, unsigned a);

/// Largest primitive prime divisor of p^b - 1, or nullopt for the Zsigmondy
/// exceptions (PSL_2(p) with p Mersenne, and the named small groups).
std::optional<i128> zsig_prime_for(const FamilySpec& spec);

/// (s - 1) / (6 a delta d).
Rational ppd_lower_bound(const FamilySpec& spec);

/// min mpr*(x) over the order-s Aut-classes of PSL_d(q) against ppd_lower_bound.
BoundReport check_ppd(const FamilySpec& spec, const CensusOptions& options = {});

/// The PSL targets of the (ppd) sweep: d = 2 with q in {4,...,27} and d = 3 with q in {2,3}.
std::vector<std::pair<unsigned, unsigned>> ppd_sweep_targets();
/// check_ppd over ppd_sweep_targets, skipping excluded pairs and Zsigmondy exceptions.
std::vector<BoundReport> check_ppd_sweep(const CensusOptions& options = {});

/// max_p mpr_p(Alt(m)), with Alt(6) taken from the supplied realization.
unsigned alt_mpr(unsigned m, const Alt6Realization& alt6);
/// 7 mpr(Alt(m)) >= 7 h(m) >= m and m!/2 <= (7 mpr)!/2.
BoundReport alt_bound_chain(unsigned m, const Alt6Realization& alt6);

struct ExceptionalRow {
  std::string family;
  unsigned exponent = 0;
  unsigned n_dim = 0;
  std::string provenance;
};

/// The E8 row: exponent 30, minimal faithful dimension 248.
ExceptionalRow e8_row();
/// E8 followed by the rows of a "family<TAB>exponent<TAB>dimension" file.
std::vector<ExceptionalRow> load_exceptional_table(const std::string& path);
std::vector<ExceptionalRow> parse_exceptional_table(const std::string& text);

struct ExceptionalBound {
  ExceptionalRow row;
  unsigned p = 0;
  unsigned a = 0;
  unsigned cyclotomic_index = 0;
  i128 phi_value = 0;
  i128 s = 0;
  Rational bound;
  BoundReport report;
};

/// s = P[Phi_{a e}(p)] and the computed bound (s - 1) / (2 a n_dim).
ExceptionalBound exceptional_lower_bound(const ExceptionalRow& row, unsigned p, unsigned a);

/// One report per prime-order Aut-class: generator-orbit count == phi(o(x)) / |N:C|.
std::vector<BoundReport> check_lemma1_sweep(const std::vector<GroupSpec>& groups,
                                            const std::vector<unsigned>& alt_degrees,
                                            const CensusOptions& options = {});

/// |N:C| <= d in PGL_d(q) for every prime order s != p with gcd(s, q-1) = 1.
/// Classes with s = p fall outside the lemma and are reported as computed values.
/// Groups within the ceiling are also cross-checked against the similarity route.
std::vector<BoundReport> check_lemma2_sweep(const std::vector<unsigned>& d_range,
                                            const std::vector<unsigned>& q_range,
                                            const CensusOptions& options = {});

}  // namespace mpr
