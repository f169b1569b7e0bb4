#include "kinmetrics/csv.hpp"

#include <fstream>
#include <sstream>

namespace kinmetrics {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

double parse_double_field(std::string_view s, const std::string& context) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(context + ": not a number: '" + std::string(s) + "'");
    return v;
}

int parse_int_field(std::string_view s, const std::string& context) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(context + ": not an integer: '" + std::string(s) + "'");
    return v;
}

std::string csv_quote(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string csv_join(const std::vector<std::string>& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += fields[i];
    }
    out.push_back('\n');
    return out;
}

CsvReader::CsvReader(std::string content, std::string source_name)
    : content_(std::move(content)), source_(std::move(source_name)) {}

std::optional<std::vector<std::string>> CsvReader::next() {
    if (pos_ >= content_.size()) return std::nullopt;
    record_line_ = line_;
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool saw_any = false;
    while (pos_ < content_.size()) {
        char c = content_[pos_];
        if (in_quotes) {
            if (c == '"') {
                if (pos_ + 1 < content_.size() && content_[pos_ + 1] == '"') {
                    field.push_back('"');
                    ++pos_;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line_;
                field.push_back(c);
            }
            ++pos_;
            continue;
        }
        switch (c) {
            case '"':
                in_quotes = true;
                saw_any = true;
                ++pos_;
                break;
            case ',':
                fields.push_back(std::move(field));
                field.clear();
                saw_any = true;
                ++pos_;
                break;
            case '\r':
                ++pos_;
                break;
            case '\n':
                ++line_;
                ++pos_;
                fields.push_back(std::move(field));
                // A lone newline after the final record is not a record.
                if (!saw_any && fields.size() == 1 && fields[0].empty()) {
                    if (pos_ >= content_.size()) return std::nullopt;
                    record_line_ = line_;
                    fields.clear();
                    field.clear();
                    continue;
                }
                return fields;
            default:
                field.push_back(c);
                saw_any = true;
                ++pos_;
                break;
        }
    }
    if (in_quotes)
        throw ParseError(source_ + ":" + std::to_string(record_line_) +
                         ": unterminated quoted field");
    fields.push_back(std::move(field));
    if (!saw_any && fields.size() == 1 && fields[0].empty()) return std::nullopt;
    return fields;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw std::runtime_error("read failed: " + path);
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace kinmetrics
