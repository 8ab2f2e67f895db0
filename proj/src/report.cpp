#include "beattylab/report.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "beattylab/errors.hpp"

namespace beattylab::report {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + '"';
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

// JSON has no infinities; those go out as strings
std::string json_number(double x) {
  const std::string t = format_number(x);
  return std::isfinite(x) ? t : json_string(t);
}

std::string json_params(const ParamMap& params) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : params) {
    if (!first)
      out += ", ";
    first = false;
    out += json_string(key) + ": ";
    if (const auto* i = std::get_if<std::int64_t>(&value))
      out += std::to_string(*i);
    else if (const auto* d = std::get_if<double>(&value))
      out += json_number(*d);
    else
      out += json_string(std::get<std::string>(value));
  }
  return out + "}";
}

} // namespace

Format parse_format(const std::string& s) {
  if (s == "csv")
    return Format::csv;
  if (s == "json")
    return Format::json;
  fail(errc::parse_error, "format must be csv or json");
}

void emit_report(std::vector<VerificationRecord> records, Format format, std::ostream& os) {
  std::stable_sort(records.begin(), records.end(), record_less);
  if (format == Format::csv) {
    os << "check_id,params,lhs,rhs,margin,pass\n";
    for (const auto& r : records)
      os << csv_field(r.check_id) << ',' << csv_field(format_params(r.params)) << ',' << format_number(r.lhs) << ','
         << format_number(r.rhs) << ',' << format_number(r.margin) << ',' << (r.pass ? "true" : "false") << '\n';
  } else {
    os << "[";
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& r = records[i];
      os << (i ? ",\n " : "\n ") << "{\"check_id\": " << json_string(r.check_id)
         << ", \"params\": " << json_params(r.params) << ", \"lhs\": " << json_number(r.lhs)
         << ", \"rhs\": " << json_number(r.rhs) << ", \"margin\": " << json_number(r.margin)
         << ", \"pass\": " << (r.pass ? "true" : "false") << "}";
    }
    os << (records.empty() ? "]\n" : "\n]\n");
  }
  if (!os)
    throw std::ios_base::failure("report stream failed");
}

std::string emit_report(std::vector<VerificationRecord> records, Format format) {
  std::ostringstream os;
  emit_report(std::move(records), format, os);
  return os.str();
}

bool all_pass(const std::vector<VerificationRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
}

} // namespace beattylab::report
