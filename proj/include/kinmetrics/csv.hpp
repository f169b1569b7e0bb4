#pragma once
// Minimal CSV machinery for the fixed schemas in ingest. Quoted fields may
// contain commas, doubled quotes and newlines; emitted files always use LF.

#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kinmetrics {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest representation that round-trips exactly through parse_double.
std::string format_double(double v);

double parse_double_field(std::string_view s, const std::string& context);
int parse_int_field(std::string_view s, const std::string& context);

std::string csv_quote(std::string_view s);

// Joins fields with commas; caller quotes string fields via csv_quote.
std::string csv_join(const std::vector<std::string>& fields);

class CsvReader {
public:
    CsvReader(std::string content, std::string source_name);

    // Next record, or nullopt at end of input. Handles quoted fields spanning
    // commas/newlines. Skips a trailing empty last line.
    std::optional<std::vector<std::string>> next();

    // 1-based line number where the record returned by the last next() began.
    int record_line() const { return record_line_; }
    const std::string& source() const { return source_; }

private:
    std::string content_;
    std::string source_;
    size_t pos_ = 0;
    int line_ = 1;
    int record_line_ = 1;
};

// Reads a whole file; throws std::runtime_error when the file cannot be read.
std::string read_text_file(const std::string& path);

// Writes with LF endings exactly as given; throws on I/O failure.
void write_text_file(const std::string& path, std::string_view content);

}  // namespace kinmetrics
