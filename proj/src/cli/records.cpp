#include "mpr/records.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

#include "mpr/errors.hpp"

namespace mpr {
namespace {

const std::map<std::string, std::vector<std::string>, std::less<>>& all_schemas() {
  static const std::map<std::string, std::vector<std::string>, std::less<>> schemas{
      {"census",
       {"group", "prime", "class", "representative", "class_size", "index", "mpr_star", "generator_orbits", "mpr_p",
        "m_p", "source"}},
      {"bound", {"label", "context", "lhs", "rhs", "relation", "holds", "detail"}},
      {"stewart", {"base", "n", "phi_value", "lhs", "rhs", "status", "holds"}},
      {"ppd", {"base", "exponent", "primitive_primes", "largest", "exception"}},
      {"cyclotomic", {"n", "a", "polynomial", "value"}},
      {"factor", {"value", "factorization", "largest"}},
  };
  return schemas;
}

OutputRecord make(std::string schema, std::vector<RecordValue> values) {
  const auto& keys = schema_keys(schema);
  if (keys.size() != values.size()) throw ConsistencyError("record for schema " + schema + " has the wrong arity");
  OutputRecord r{std::move(schema), {}};
  for (std::size_t i = 0; i < keys.size(); ++i) r.fields.emplace_back(keys[i], std::move(values[i]));
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_value(const RecordValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "null";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return nlohmann::json(x).dump();
        } else if constexpr (std::is_same_v<T, Rational>) {
          return nlohmann::json(x.str()).dump();
        } else {
          return render_value(x);
        }
      },
      v);
}

void check_keys(const OutputRecord& r) {
  const auto& keys = schema_keys(r.schema);
  bool ok = keys.size() == r.fields.size();
  for (std::size_t i = 0; ok && i < keys.size(); ++i) ok = keys[i] == r.fields[i].first;
  if (!ok) throw ConsistencyError("record does not match the key set of schema " + r.schema);
}

std::string csv_header(std::string_view schema) {
  std::string line;
  for (const auto& k : schema_keys(schema)) line += (line.empty() ? "" : ",") + k;
  return line + "\n";
}

std::string encode(const OutputRecord& r, OutputFormat format) {
  check_keys(r);
  std::string line;
  if (format == OutputFormat::Csv) {
    for (const auto& [k, v] : r.fields) line += (line.empty() ? "" : ",") + csv_field(render_value(v));
  } else {
    line = "{\"schema\":" + nlohmann::json(r.schema).dump();
    for (const auto& [k, v] : r.fields) line += "," + nlohmann::json(k).dump() + ":" + json_value(v);
    line += "}";
  }
  return line + "\n";
}

}  // namespace

const RecordValue& OutputRecord::at(std::string_view key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return v;
  }
  throw DomainError("record of schema " + schema + " has no key " + std::string(key));
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "jsonl") return OutputFormat::Jsonl;
  throw UsageError("unknown format '" + std::string(text) + "' (expected csv or jsonl)");
}

const std::vector<std::string>& schema_keys(std::string_view schema) {
  const auto& schemas = all_schemas();
  const auto it = schemas.find(schema);
  if (it == schemas.end()) throw DomainError("unknown record schema '" + std::string(schema) + "'");
  return it->second;
}

std::string render_value(const RecordValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else if constexpr (std::is_same_v<T, i128>) {
          return to_string(x);
        } else if constexpr (std::is_same_v<T, Rational>) {
          return x.str();
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.17g", x);
          return buf;
        }
      },
      v);
}

OutputRecord bound_record(const BoundReport& r) {
  return make("bound", {r.label, r.context, r.lhs, r.rhs, std::string(to_string(r.relation)), r.holds, r.detail});
}

OutputRecord stewart_record(const StewartRow& r) {
  const bool known = r.status != StewartStatus::OutOfRange;
  return make("stewart", {r.base, i128{r.index}, known ? RecordValue{r.phi_value} : RecordValue{},
                          known ? RecordValue{r.lhs} : RecordValue{}, r.rhs, std::string(to_string(r.status)),
                          r.holds()});
}

OutputRecord ppd_record(const PpdResult& r) {
  std::string primes;
  for (const i128 p : r.primitive_primes) primes += (primes.empty() ? "" : " ") + to_string(p);
  return make("ppd", {r.base, i128{r.exponent}, primes, r.largest ? RecordValue{*r.largest} : RecordValue{},
                      r.is_zsigmondy_exception});
}

OutputRecord cyclotomic_record(unsigned n, i128 a) {
  return make("cyclotomic", {i128{n}, a, cyclotomic(n).str(), cyclotomic_eval(n, a)});
}

OutputRecord factor_record(i128 value) {
  const auto f = factorize(value);
  return make("factor", {value, f.str(), largest_prime_factor(value)});
}

std::vector<OutputRecord> census_records(const MatCensusRow& row, const MatrixRing& ring) {
  std::vector<OutputRecord> out;
  for (std::size_t i = 0; i < row.classes.size(); ++i) {
    const auto& c = row.classes[i];
    out.push_back(make("census", {row.group, i128{row.prime}, i128(i), ring.str(c.representative), c.class_size,
                                  i128{c.n_over_c_index}, i128{c.mpr_star}, i128{c.generator_orbit_count},
                                  i128{row.mpr_p}, i128{row.m_p}, std::string(to_string(row.source))}));
  }
  return out;
}

std::vector<OutputRecord> census_records(const AltCensusRow& row) {
  std::vector<OutputRecord> out;
  const std::string group = "Alt(" + std::to_string(row.degree) + ")";
  for (std::size_t i = 0; i < row.classes.size(); ++i) {
    const auto& c = row.classes[i];
    out.push_back(make("census", {group, i128{row.prime}, i128(i), c.representative.str(), c.class_size, i128{c.n_over_c_index},
                                  i128{c.mpr_star}, i128{c.generator_orbit_count}, i128{row.mpr_p}, i128{row.m_p},
                                  std::string(to_string(row.source))}));
  }
  return out;
}

std::string emit(const std::vector<OutputRecord>& records, OutputFormat format, std::string_view schema) {
  std::ostringstream out;
  RecordSink sink(out, format, std::string(schema));
  sink.write_all(records);
  sink.finish();
  return out.str();
}

RecordSink::RecordSink(std::ostream& out, OutputFormat format, std::string schema)
    : out_(out), format_(format), schema_(std::move(schema)) {
  if (!schema_.empty()) schema_keys(schema_);
}

void RecordSink::header() {
  if (header_written_ || format_ != OutputFormat::Csv) return;
  if (schema_.empty()) throw UsageError("CSV output needs a schema");
  out_ << csv_header(schema_);
  header_written_ = true;
}

void RecordSink::write(const OutputRecord& r) {
  if (format_ == OutputFormat::Csv) {
    if (schema_.empty()) schema_ = r.schema;
    if (r.schema != schema_) {
      throw UsageError("CSV output cannot mix schemas (" + schema_ + " and " + r.schema + "); use --format jsonl");
    }
    header();
  }
  out_ << encode(r, format_);
}

void RecordSink::write_all(const std::vector<OutputRecord>& rs) {
  // CSV schemas are validated up front so a usage error never leaves a partial table.
  if (format_ == OutputFormat::Csv) {
    std::string s = schema_;
    for (const auto& r : rs) {
      if (s.empty()) s = r.schema;
      if (r.schema != s) {
        throw UsageError("CSV output cannot mix schemas (" + s + " and " + r.schema + "); use --format jsonl");
      }
    }
  }
  for (const auto& r : rs) write(r);
}

void RecordSink::finish() { header(); }

}  // namespace mpr
