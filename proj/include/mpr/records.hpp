#pragma once

// Flat output records and their CSV / JSONL encodings.
//
// Key sets, in emission order:
//   census      group prime class representative class_size index mpr_star generator_orbits mpr_p m_p source
//   bound       label context lhs rhs relation holds detail
//   stewart     base n phi_value lhs rhs status holds
//   ppd         base exponent primitive_primes largest exception
//   cyclotomic  n a polynomial value
//   factor      value factorization largest
//
// Unknown values (the Stewart lhs above 128 bits) are null in JSONL and empty in CSV.

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mpr/int128.hpp"
#include "mpr/matcensus.hpp"
#include "mpr/ntheory.hpp"
#include "mpr/permcensus.hpp"
#include "mpr/rational.hpp"
#include "mpr/report.hpp"

namespace mpr {

using RecordValue = std::variant<std::monostate, std::string, i128, Rational, bool, double>;

struct OutputRecord {
  std::string schema;
  std::vector<std::pair<std::string, RecordValue>> fields;

  const RecordValue& at(std::string_view key) const;
};

enum class OutputFormat { Csv, Jsonl };

OutputFormat parse_output_format(std::string_view text);

/// Documented key order of a schema; throws DomainError for an unknown schema.
const std::vector<std::string>& schema_keys(std::string_view schema);

/// Textual form used by both encodings (rationals "num/den", doubles to 17 digits).
std::string render_value(const RecordValue& v);

OutputRecord bound_record(const BoundReport& r);
OutputRecord stewart_record(const StewartRow& r);
OutputRecord ppd_record(const PpdResult& r);
OutputRecord cyclotomic_record(unsigned n, i128 a);
OutputRecord factor_record(i128 value);
std::vector<OutputRecord> census_records(const MatCensusRow& row, const MatrixRing& ring);
std::vector<OutputRecord> census_records(const AltCensusRow& row);

/// Serializes records. CSV requires a single schema (UsageError otherwise) and
/// writes the header of `schema` even when `records` is empty.
std::string emit(const std::vector<OutputRecord>& records, OutputFormat format, std::string_view schema = {});

/// Ordered sink: CSV writes its header once, on the first record or at finish().
class RecordSink {
 public:
  RecordSink(std::ostream& out, OutputFormat format, std::string schema = {});
  void write(const OutputRecord& r);
  void write_all(const std::vector<OutputRecord>& rs);
  void finish();

 private:
  void header();
  std::ostream& out_;
  OutputFormat format_;
  std::string schema_;
  bool header_written_ = false;
};

}  // namespace mpr
