#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "mpr/acceptance.hpp"
#include "mpr/errors.hpp"
#include "mpr/records.hpp"

using namespace mpr;

namespace {

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("empty csv is header only") {
  CHECK(emit({}, OutputFormat::Csv, "census") ==
        "group,prime,class,representative,class_size,index,mpr_star,generator_orbits,mpr_p,m_p,source\n");
  CHECK(emit({}, OutputFormat::Jsonl).empty());
  CHECK_THROWS_AS(emit({}, OutputFormat::Csv, "nope"), DomainError);
}

TEST_CASE("one census record gives two csv lines") {
  const auto spec = make_group_spec(GroupFamily::PSL, 3, 2);
  const auto row = census(spec, 7);
  const MatrixRing ring(spec.field, 3);
  const auto recs = census_records(row, ring);
  REQUIRE(recs.size() == 1);
  const auto csv = emit(recs, OutputFormat::Csv);
  CHECK(lines(csv) == 2);
  CHECK(csv.find("PSL(3,2)") != std::string::npos);
  CHECK(csv.find(",48,") != std::string::npos);
}

TEST_CASE("bound records and rationals") {
  const auto r = bound_record(make_report("ppd", "PSL(2,13) s=7", Rational(3), Rational(1, 2), Relation::AtLeast, "x"));
  const auto jsonl = emit({r}, OutputFormat::Jsonl);
  CHECK(jsonl ==
        "{\"schema\":\"bound\",\"label\":\"ppd\",\"context\":\"PSL(2,13) s=7\",\"lhs\":\"3\",\"rhs\":\"1/2\","
        "\"relation\":\">=\",\"holds\":true,\"detail\":\"x\"}\n");
  const auto csv = emit({r}, OutputFormat::Csv);
  // Fields containing commas are quoted.
  CHECK(csv == "label,context,lhs,rhs,relation,holds,detail\nppd,\"PSL(2,13) s=7\",3,1/2,>=,true,x\n");
}

TEST_CASE("mixed schemas") {
  std::vector<OutputRecord> recs{factor_record(8191), cyclotomic_record(6, 2), ppd_record(primitive_prime_divisors(2, 6))};
  CHECK(lines(emit(recs, OutputFormat::Jsonl)) == 3);
  CHECK_THROWS_AS(emit(recs, OutputFormat::Csv), UsageError);
  std::ostringstream out;
  RecordSink sink(out, OutputFormat::Csv);
  CHECK_THROWS_AS(sink.write_all(recs), UsageError);
  CHECK(out.str().empty());
}

TEST_CASE("ppd and stewart records") {
  const auto z = ppd_record(primitive_prime_divisors(2, 6));
  CHECK(std::get<bool>(z.at("exception")));
  CHECK(std::holds_alternative<std::monostate>(z.at("largest")));
  CHECK(emit({z}, OutputFormat::Jsonl).find("\"largest\":null") != std::string::npos);

  const auto s = stewart_record(stewart_row(2, 13));
  CHECK(std::get<i128>(s.at("lhs")) == 8191);
  const auto big = stewart_table(5, 118, 118);
  REQUIRE(big.size() == 1);
  const auto rec = stewart_record(big[0]);
  CHECK(render_value(rec.at("status")) == "out_of_range");
  CHECK(render_value(rec.at("lhs")).empty());
}

TEST_CASE("numbers round-trip") {
  const i128 v = parse_i128("170141183460469231731687303715884105727");
  CHECK(parse_i128(render_value(v)) == v);
  CHECK(std::stod(render_value(stewart_rhs(13))) == stewart_rhs(13));
  CHECK(render_value(Rational(330, 496)) == "165/248");
}

TEST_CASE("criterion summaries") {
  CHECK(std::string(criterion_name(11)) == "stewart-table");
  CHECK_THROWS_AS(criterion_name(14), DomainError);
  const auto r = run_criterion(12);
  CHECK(r.passed);
  CHECK(r.checks == 3);
  const auto b = criterion_report(r);
  CHECK(b.label == "criterion-12");
  CHECK(b.holds);
}
