#pragma once

// CSV and JSON serialization of verification records. Rows are sorted by
// (check_id, canonical params); numbers carry 17 significant digits.

#include <iosfwd>
#include <string>
#include <vector>

#include "beattylab/record.hpp"

namespace beattylab::report {

enum class Format { csv, json };

Format parse_format(const std::string& s);

/// Throws std::ios_base::failure when the stream goes bad.
void emit_report(std::vector<VerificationRecord> records, Format format, std::ostream& os);
std::string emit_report(std::vector<VerificationRecord> records, Format format);

/// True when every record passes.
bool all_pass(const std::vector<VerificationRecord>& records);

} // namespace beattylab::report
