#pragma once

#include <string>

#include "mpr/rational.hpp"

namespace mpr {

/// Comparison a report asserts between lhs and rhs. Computed reports carry a
/// value without a group-side confirmation and always hold.
enum class Relation { AtLeast, AtMost, Equal, Computed };

const char* to_string(Relation r);

struct BoundReport {
  std::string label;
  std::string context;
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::AtLeast;
  bool holds = false;
  std::string detail;
};

/// Builds a report with `holds` derived from the relation.
BoundReport make_report(std::string label, std::string context, Rational lhs, Rational rhs, Relation relation,
                        std::string detail = {});

}  // namespace mpr
