#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "mpr/ntheory.hpp"

namespace mpr {

/// Persistent factorization cache. One record per line:
///
///     value<TAB>p1^e1 p2^e2 ...
///
/// Lines that fail to parse, whose factors are not prime, or whose product
/// does not reproduce the value are skipped with a warning.
class FactorCache {
 public:
  using WarningSink = std::function<void(const std::string&)>;

  /// Loads `path` if it exists; new records are appended to it.
  explicit FactorCache(std::filesystem::path path, WarningSink warn = {});

  std::optional<Factorization> lookup(i128 abs_value) const;
  void store(const Factorization& f);

  std::size_t size() const;
  std::size_t rejected_lines() const { return rejected_; }

  /// Parses one record; returns nullopt (and the reason) for malformed input.
  static std::optional<Factorization> parse_line(const std::string& line, std::string* reason = nullptr);
  static std::string format_line(const Factorization& f);

 private:
  std::filesystem::path path_;
  WarningSink warn_;
  mutable std::mutex mutex_;
  std::map<i128, Factorization> entries_;
  std::size_t rejected_ = 0;
};

/// Installs (or clears, with nullptr) the process-wide cache consulted by factorize().
void set_factor_cache(std::shared_ptr<FactorCache> cache);
std::shared_ptr<FactorCache> factor_cache();

}  // namespace mpr
