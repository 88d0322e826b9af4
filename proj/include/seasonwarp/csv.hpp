#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace seasonwarp::csv {

struct Record {
    std::size_t line = 0;  ///< 1-based line on which the record starts
    std::vector<std::string> fields;
};

/// RFC-4180 reader: quoted fields, doubled quotes, embedded newlines, CRLF or
/// LF endings and a leading UTF-8 BOM. Blank lines are skipped. Throws
/// ParseError on an unterminated quote or stray characters after a closing
/// quote.
[[nodiscard]] std::vector<Record> parse(std::string_view text);

/// Quotes `field` only when it contains a comma, quote, CR or LF.
[[nodiscard]] std::string escape(std::string_view field);

/// Joins escaped fields with commas and terminates the row with "\n".
[[nodiscard]] std::string row(std::initializer_list<std::string_view> fields);
[[nodiscard]] std::string row(const std::vector<std::string>& fields);

}  // namespace seasonwarp::csv
