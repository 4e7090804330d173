#include "wall/issues_csv.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include "wall/errors.hpp"

namespace wall {

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string to_csv(std::span<const IssueRecord> records) {
    std::string out(kIssuesCsvHeader);
    out += '\n';
    for (const auto& r : records) {
        out += csv_escape(r.file_location);
        out += ',';
        out += csv_escape(r.file_name);
        out += ',';
        out += std::to_string(r.line);
        out += ',';
        out += csv_escape(r.message);
        out += ',';
        out += to_string(r.type);
        out += '\n';
    }
    return out;
}

std::size_t write_csv(std::span<const IssueRecord> records, std::ostream& sink) {
    const std::string text = to_csv(records);
    sink.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!sink) throw IoError("failed writing issues CSV");
    return text.size();
}

namespace {

struct CsvRow {
    std::vector<std::string> fields;
};

/// Splits RFC 4180 records. `row` counts records including the header.
class CsvScanner {
public:
    explicit CsvScanner(std::string_view text) : text_(text) {}

    bool next(CsvRow& row, std::size_t data_row) {
        row.fields.clear();
        if (pos_ >= text_.size()) return false;
        std::string field;
        bool quoted = false;
        bool was_quoted = false;
        while (true) {
            if (pos_ >= text_.size()) {
                if (quoted) throw RowParseError("row " + std::to_string(data_row) + ": unterminated quoted field", data_row);
                row.fields.push_back(std::move(field));
                return true;
            }
            const char c = text_[pos_++];
            if (quoted) {
                if (c == '"') {
                    if (pos_ < text_.size() && text_[pos_] == '"') {
                        field += '"';
                        ++pos_;
                    } else {
                        quoted = false;
                    }
                } else {
                    field += c;
                }
                continue;
            }
            if (c == '"') {
                if (!field.empty() || was_quoted) {
                    throw RowParseError("row " + std::to_string(data_row) + ": stray quote inside field", data_row);
                }
                quoted = true;
                was_quoted = true;
            } else if (c == ',') {
                row.fields.push_back(std::move(field));
                field.clear();
                was_quoted = false;
            } else if (c == '\n' || (c == '\r' && pos_ < text_.size() && text_[pos_] == '\n')) {
                if (c == '\r') ++pos_;
                row.fields.push_back(std::move(field));
                return true;
            } else {
                if (was_quoted) {
                    throw RowParseError("row " + std::to_string(data_row) + ": text after closing quote", data_row);
                }
                field += c;
            }
        }
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<IssueRecord> parse_csv(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
    CsvScanner scanner(text);
    CsvRow row;
    if (!scanner.next(row, 0)) throw HeaderMismatch("empty input: missing header");
    {
        std::string header;
        for (std::size_t i = 0; i < row.fields.size(); ++i) {
            if (i) header += ',';
            header += row.fields[i];
        }
        if (header != kIssuesCsvHeader) {
            throw HeaderMismatch("expected header '" + std::string(kIssuesCsvHeader) + "', got '" + header + "'");
        }
    }

    std::vector<IssueRecord> out;
    std::size_t data_row = 0;
    while (true) {
        ++data_row;
        if (!scanner.next(row, data_row)) break;
        const auto where = "row " + std::to_string(data_row);
        if (row.fields.size() == 1 && row.fields[0].empty()) continue;  // blank line
        if (row.fields.size() != 5) {
            throw RowParseError(where + ": expected 5 fields, got " + std::to_string(row.fields.size()), data_row);
        }
        IssueRecord r;
        r.file_location = normalize_location(row.fields[0]);
        r.file_name = row.fields[1];
        if (r.file_location.empty()) throw RowParseError(where + ": empty File_Location", data_row);
        if (basename_of(r.file_location) != r.file_name) {
            throw RowParseError(where + ": File_Name '" + r.file_name + "' is not the basename of '" +
                                    r.file_location + "'",
                                data_row);
        }
        const std::string& line = row.fields[2];
        int value = 0;
        const auto [end, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
        if (line.empty() || ec != std::errc{} || end != line.data() + line.size() || value < 1) {
            throw BadLineNumber(where + ": bad line number '" + line + "'", data_row);
        }
        r.line = value;
        r.message = row.fields[3];
        if (r.message.empty()) throw RowParseError(where + ": empty Message", data_row);
        const auto type = parse_issue_type(row.fields[4]);
        if (!type) throw BadType(where + ": unknown issue type '" + row.fields[4] + "'", data_row);
        r.type = *type;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<IssueRecord> read_csv(std::istream& source) {
    std::ostringstream buf;
    buf << source.rdbuf();
    if (source.bad()) throw IoError("failed reading issues CSV");
    return parse_csv(buf.str());
}

}  // namespace wall
