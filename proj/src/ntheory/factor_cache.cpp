#include "mpr/factor_cache.hpp"

#include <sstream>

#include "mpr/errors.hpp"

namespace mpr {
namespace {

std::mutex g_cache_mutex;
std::shared_ptr<FactorCache> g_cache;

}  // namespace

FactorCache::FactorCache(std::filesystem::path path, WarningSink warn)
    : path_(std::move(path)), warn_(std::move(warn)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::string reason;
    auto parsed = parse_line(line, &reason);
    if (!parsed) {
      ++rejected_;
      if (warn_) warn_(path_.string() + ":" + std::to_string(line_no) + ": skipping cache line: " + reason);
      continue;
    }
    entries_.emplace(parsed->value, std::move(*parsed));
  }
}

std::optional<Factorization> FactorCache::parse_line(const std::string& line, std::string* reason) {
  auto fail = [&](const std::string& why) -> std::optional<Factorization> {
    if (reason) *reason = why;
    return std::nullopt;
  };
  const auto tab = line.find('\t');
  if (tab == std::string::npos) return fail("missing tab separator");
  Factorization f;
  try {
    f.value = parse_i128(line.substr(0, tab));
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  if (f.value < 1) return fail("value must be a positive integer");

  std::istringstream tokens(line.substr(tab + 1));
  std::string tok;
  while (tokens >> tok) {
    const auto caret = tok.find('^');
    if (caret == std::string::npos) return fail("factor '" + tok + "' lacks an exponent");
    PrimePower pp{};
    try {
      pp.prime = parse_i128(tok.substr(0, caret));
      const i128 e = parse_i128(tok.substr(caret + 1));
      if (e < 1 || e > 127) return fail("exponent out of range in '" + tok + "'");
      pp.exponent = static_cast<unsigned>(e);
    } catch (const std::exception& e) {
      return fail(e.what());
    }
    if (pp.prime < 2 || !is_prime(pp.prime)) return fail("'" + to_string(pp.prime) + "' is not prime");
    if (!f.factors.empty() && f.factors.back().prime >= pp.prime) return fail("primes not strictly increasing");
    f.factors.push_back(pp);
  }
  try {
    if (f.product() != f.value) return fail("factors do not multiply to the value");
  } catch (const RangeError&) {
    return fail("factor product overflows");
  }
  return f;
}

std::string FactorCache::format_line(const Factorization& f) {
  return to_string(f.value) + "\t" + f.str();
}

std::optional<Factorization> FactorCache::lookup(i128 abs_value) const {
  std::lock_guard lock(mutex_);
  const auto it = entries_.find(abs_value);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void FactorCache::store(const Factorization& f) {
  Factorization normalized = f;
  normalized.value = abs128(f.value);
  std::lock_guard lock(mutex_);
  if (!entries_.emplace(normalized.value, normalized).second) return;
  std::ofstream out(path_, std::ios::app);
  if (out) out << format_line(normalized) << '\n';
}

std::size_t FactorCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

void set_factor_cache(std::shared_ptr<FactorCache> cache) {
  std::lock_guard lock(g_cache_mutex);
  g_cache = std::move(cache);
}

std::shared_ptr<FactorCache> factor_cache() {
  std::lock_guard lock(g_cache_mutex);
  return g_cache;
}

}  // namespace mpr
