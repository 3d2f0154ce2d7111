#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>

#include "mpr/errors.hpp"
#include "mpr/matcensus.hpp"
#include "mpr/ntheory.hpp"

namespace mpr {

const char* to_string(GroupFamily f) { return f == GroupFamily::PSL ? "PSL" : "PGL"; }

std::string GroupSpec::name() const {
  return std::string(to_string(family)) + "(" + std::to_string(d) + "," + std::to_string(q()) + ")";
}

namespace {

std::pair<unsigned, unsigned> prime_power(unsigned q) {
  if (q < 2) throw DomainError("field size " + std::to_string(q) + " is not a prime power");
  const auto f = factorize(q);
  if (f.factors.size() != 1) throw DomainError("field size " + std::to_string(q) + " is not a prime power");
  return {static_cast<unsigned>(f.factors[0].prime), f.factors[0].exponent};
}

}  // namespace

i128 group_order(GroupFamily family, unsigned d, unsigned q) {
  prime_power(q);
  if (d < 2 || d > kMaxMatrixDim) throw DomainError("group dimension must be 2, 3 or 4");
  const i128 qq = q;
  const i128 qd = checked_pow(qq, d, "group order");
  i128 gl = 1;
  for (unsigned i = 0; i < d; ++i) gl = checked_mul(gl, qd - checked_pow(qq, i, "group order"), "group order");
  i128 order = gl / (qq - 1);
  if (family == GroupFamily::PSL) order /= std::gcd(d, q - 1);
  return order;
}

GroupSpec make_group_spec(GroupFamily family, unsigned d, unsigned q) {
  const auto [p, a] = prime_power(q);
  GroupSpec spec;
  spec.family = family;
  spec.d = d;
  spec.order = group_order(family, d, q);
  spec.field = FiniteField::build(p, a);
  return spec;
}

GroupSpec parse_group_spec(std::string_view text) {
  static const std::regex pattern(R"(^\s*(psl|pgl)\s*\(\s*([0-9]+)\s*,\s*([0-9]+)\s*\)\s*$)", std::regex::icase);
  std::cmatch m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern)) {
    throw DomainError("cannot parse group spec '" + std::string(text) + "' (expected PSL(d,q) or PGL(d,q))");
  }
  std::string fam = m[1].str();
  std::transform(fam.begin(), fam.end(), fam.begin(), [](unsigned char c) { return std::toupper(c); });
  if (m[2].length() > 2 || m[3].length() > 4) throw DomainError("group spec parameters out of range");
  return make_group_spec(fam == "PSL" ? GroupFamily::PSL : GroupFamily::PGL, std::stoul(m[2].str()),
                         std::stoul(m[3].str()));
}

MatrixGroup::MatrixGroup(GroupSpec spec, i128 ceiling) : spec_(std::move(spec)), ring_(spec_.field, spec_.d) {
  if (spec_.order > ceiling) {
    throw RangeError(spec_.name() + " has order " + to_string(spec_.order) + ", above the enumeration ceiling " +
                     to_string(ceiling));
  }
  const FiniteField& F = *spec_.field;
  const unsigned q = F.size();
  const unsigned cells = spec_.d * spec_.d;
  // Nonzero determinants that are d-th powers: the PSL condition.
  std::vector<bool> admissible(q, spec_.family == GroupFamily::PGL);
  admissible[0] = false;
  if (spec_.family == GroupFamily::PSL) {
    for (unsigned x = 1; x < q; ++x) admissible[F.pow(static_cast<FieldElement>(x), spec_.d)] = true;
  }

  elements_.reserve(static_cast<std::size_t>(spec_.order));
  // Leading zeros sort first, so scanning the pivot position from the back
  // yields the elements in row-major lexicographic order.
  for (unsigned t = cells; t-- > 0;) {
    std::uint64_t tail = 1;
    for (unsigned i = t + 1; i < cells; ++i) tail *= q;
    for (std::uint64_t code = 0; code < tail; ++code) {
      Matrix m = ring_.zero();
      m.e[t] = 1;
      std::uint64_t c = code;
      for (unsigned i = cells; i-- > t + 1;) {
        m.e[i] = static_cast<FieldElement>(c % q);
        c /= q;
      }
      if (admissible[ring_.det(m)]) elements_.push_back(m);
    }
  }
  if (static_cast<i128>(elements_.size()) != spec_.order) {
    throw ConsistencyError(spec_.name() + ": enumerated " + std::to_string(elements_.size()) +
                           " elements, closed form gives " + to_string(spec_.order));
  }

  constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;
  if (ring_.code_space() != 0 && ring_.code_space() <= kDenseLimit) {
    dense_.assign(ring_.code_space(), -1);
    for (std::uint32_t i = 0; i < elements_.size(); ++i) dense_[ring_.code(elements_[i])] = static_cast<std::int32_t>(i);
  } else {
    sparse_.reserve(elements_.size() * 2);
    for (std::uint32_t i = 0; i < elements_.size(); ++i) sparse_.emplace(ring_.code(elements_[i]), i);
  }
  orders_.reserve(elements_.size());
  for (const auto& x : elements_) orders_.push_back(ring_.projective_order(x));
}

std::optional<std::uint32_t> MatrixGroup::find(const ProjectiveMatrix& x) const {
  const std::uint64_t code = ring_.code(x);
  if (!dense_.empty()) {
    if (code >= dense_.size() || dense_[code] < 0) return std::nullopt;
    return static_cast<std::uint32_t>(dense_[code]);
  }
  const auto it = sparse_.find(code);
  if (it == sparse_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t MatrixGroup::index_of(const ProjectiveMatrix& x) const {
  const auto i = find(x);
  if (!i) throw ConsistencyError(ring_.str(x) + " is not an element of " + spec_.name());
  return *i;
}

std::vector<ProjectiveMatrix> enumerate_group(const GroupSpec& spec, i128 ceiling) {
  return MatrixGroup(spec, ceiling).elements();
}

std::uint64_t element_order(const MatrixRing& ring, const ProjectiveMatrix& g) { return ring.projective_order(g); }

}  // namespace mpr
