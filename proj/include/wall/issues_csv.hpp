#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wall/issues.hpp"

namespace wall {

inline constexpr std::string_view kIssuesCsvHeader = "File_Location,File_Name,Line,Message,Type";

/// Writes the header and one RFC 4180 row per record, LF-terminated.
/// Returns the number of bytes written. Throws IoError.
std::size_t write_csv(std::span<const IssueRecord> records, std::ostream& sink);
std::string to_csv(std::span<const IssueRecord> records);

/// Parses an issues CSV. Row numbers in errors are 1-based data rows
/// (the header is not counted). Backslash paths are normalized.
std::vector<IssueRecord> read_csv(std::istream& source);
std::vector<IssueRecord> parse_csv(std::string_view text);

/// RFC 4180 field quoting: quoted iff it holds a comma, quote, CR or LF.
std::string csv_escape(std::string_view field);

}  // namespace wall
