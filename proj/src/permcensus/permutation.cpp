#include <algorithm>
#include <numeric>

#include "mpr/errors.hpp"
#include "mpr/ntheory.hpp"
#include "mpr/permcensus.hpp"

namespace mpr {

unsigned CycleType::degree() const { return std::accumulate(parts.begin(), parts.end(), 0u); }

unsigned CycleType::count(unsigned len) const {
  return static_cast<unsigned>(std::count(parts.begin(), parts.end(), len));
}

bool CycleType::is_even() const {
  unsigned even_cycles = 0;
  for (const unsigned part : parts) even_cycles += part % 2 == 0;
  return even_cycles % 2 == 0;
}

std::uint64_t CycleType::order() const {
  std::uint64_t l = 1;
  for (const unsigned part : parts) l = std::lcm(l, std::uint64_t{part});
  return l;
}

std::string CycleType::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (const auto v : images_) {
    if (v >= images_.size() || seen[v]) throw DomainError("Permutation: image sequence is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned m) {
  std::vector<std::uint8_t> img(m);
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycle_type(const CycleType& t) {
  std::vector<std::uint8_t> img(t.degree());
  unsigned start = 0;
  for (const unsigned len : t.parts) {
    for (unsigned j = 0; j < len; ++j) img[start + j] = static_cast<std::uint8_t>(start + (j + 1) % len);
    start += len;
  }
  return Permutation(std::move(img));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<std::uint8_t> img(a.images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = b.images_[a.images_[i]];
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> img(images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[images_[i]] = static_cast<std::uint8_t>(i);
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

Permutation Permutation::pow(std::uint64_t k) const {
  Permutation result = identity(degree());
  Permutation base = *this;
  while (k != 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& sigma) const {
  // sigma^-1 x sigma maps sigma(i) to sigma(x(i)).
  std::vector<std::uint8_t> img(images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[sigma.images_[i]] = sigma.images_[images_[i]];
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

CycleType Permutation::cycle_type() const {
  CycleType t;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    t.parts.push_back(len);
  }
  std::sort(t.parts.begin(), t.parts.end(), std::greater<>());
  return t;
}

bool Permutation::is_even() const { return cycle_type().is_even(); }

std::uint64_t Permutation::order() const { return cycle_type().order(); }

std::string Permutation::str() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::uint32_t Permutation::key() const {
  std::uint32_t k = 0;
  for (const auto v : images_) k = (k << 4) | v;
  return k;
}

const char* to_string(CensusSource s) {
  switch (s) {
    case CensusSource::ClosedForm: return "closed-form";
    case CensusSource::BruteForce: return "brute-force";
    case CensusSource::MatrixRealization: return "matrix-realization";
  }
  return "?";
}

std::vector<Permutation> sym_elements(unsigned m) {
  std::vector<std::uint8_t> img(m);
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace mpr
