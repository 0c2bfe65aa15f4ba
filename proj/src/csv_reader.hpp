#pragma once

// Internal RFC 4180 reader shared by the World Bank and table parsers.

#include <istream>
#include <string>
#include <vector>

#include "ammet/errors.hpp"

namespace ammet::detail {

struct CsvRow {
    std::size_t line = 0;
    std::vector<std::string> fields;
};

// RFC 4180 reader: quoted fields may hold commas, doubled quotes and line breaks.
class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    bool next(CsvRow& row) {
        row.fields.clear();
        if (in_.peek() == std::char_traits<char>::eof()) return false;
        row.line = line_;
        std::string field;
        bool quoted = false;
        bool was_quoted = false;
        std::size_t quote_line = line_;
        char c = 0;
        while (in_.get(c)) {
            if (quoted) {
                if (c == '"') {
                    if (in_.peek() == '"') {
                        in_.get(c);
                        field += '"';
                    } else {
                        quoted = false;
                    }
                } else {
                    if (c == '\n') ++line_;
                    field += c;
                }
                continue;
            }
            if (c == '"') {
                if (!field.empty() || was_quoted) {
                    throw ParseError(line_, row.fields.size() + 1, "stray quote inside field");
                }
                quoted = was_quoted = true;
                quote_line = line_;
            } else if (c == ',') {
                row.fields.push_back(std::move(field));
                field.clear();
                was_quoted = false;
            } else if (c == '\n') {
                ++line_;
                break;
            } else if (c != '\r') {
                field += c;
            }
        }
        if (quoted) throw ParseError(quote_line, row.fields.size() + 1, "unterminated quoted field");
        row.fields.push_back(std::move(field));
        return true;
    }

private:
    std::istream& in_;
    std::size_t line_ = 1;
};

}  // namespace ammet::detail
