#include "mpr/report.hpp"

namespace mpr {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::AtLeast: return ">=";
    case Relation::AtMost: return "<=";
    case Relation::Equal: return "==";
    case Relation::Computed: return "computed";
  }
  return "?";
}

BoundReport make_report(std::string label, std::string context, Rational lhs, Rational rhs, Relation relation,
                        std::string detail) {
  BoundReport r;
  r.label = std::move(label);
  r.context = std::move(context);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = relation;
  switch (relation) {
    case Relation::AtLeast: r.holds = lhs >= rhs; break;
    case Relation::AtMost: r.holds = lhs <= rhs; break;
    case Relation::Equal: r.holds = lhs == rhs; break;
    case Relation::Computed: r.holds = true; break;
  }
  r.detail = std::move(detail);
  return r;
}

}  // namespace mpr
