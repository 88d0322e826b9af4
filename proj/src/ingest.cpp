#include "seasonwarp/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "seasonwarp/csv.hpp"
#include "seasonwarp/error.hpp"

namespace seasonwarp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

WeekKey parse_date(std::string_view raw, DateFormat format, std::size_t line) {
    const std::string_view s = trim(raw);
    std::optional<int> y, m, d;
    if (format == DateFormat::Iso) {
        if (s.size() == 10 && s[4] == '-' && s[7] == '-') {
            y = parse_int(s.substr(0, 4));
            m = parse_int(s.substr(5, 2));
            d = parse_int(s.substr(8, 2));
        }
    } else if (s.size() == 10 && s[2] == '/' && s[5] == '/') {
        d = parse_int(s.substr(0, 2));
        m = parse_int(s.substr(3, 2));
        y = parse_int(s.substr(6, 4));
    }
    if (!y || !m || !d || *m < 1 || *d < 1) {
        throw ParseError(line, "cannot parse date '" + std::string(s) + "' (expected " +
                                   (format == DateFormat::Iso ? "YYYY-MM-DD" : "DD/MM/YYYY") + ")");
    }
    try {
        return iso_week_of(*y, static_cast<unsigned>(*m), static_cast<unsigned>(*d));
    } catch (const InvalidInputError& e) {
        throw ParseError(line, e.what());
    }
}

std::optional<double> parse_value(std::string_view raw, std::string_view column, std::size_t line) {
    const std::string_view s = trim(raw);
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw ParseError(line, "column '" + std::string(column) + "': '" + std::string(s) +
                                   "' is not a number");
    }
    if (v < 0.0) {
        throw ParseError(line, "column '" + std::string(column) + "' must be non-negative");
    }
    return v;
}

std::size_t column_index(const csv::Record& header, const std::string& name) {
    const auto it = std::find_if(header.fields.begin(), header.fields.end(),
                                 [&](const std::string& f) { return trim(f) == name; });
    if (it == header.fields.end()) {
        throw SchemaError("column '" + name + "' not found in header");
    }
    return static_cast<std::size_t>(it - header.fields.begin());
}

}  // namespace

std::vector<WeeklyObservation> parse_market_csv(std::string_view text, const CsvSchema& schema) {
    const auto records = csv::parse(text);
    if (records.empty()) throw SchemaError("input has no header row");

    const auto& header = records.front();
    const std::size_t date_col = column_index(header, schema.date_column);
    const std::size_t arrivals_col = column_index(header, schema.arrivals_column);
    const std::size_t price_col = column_index(header, schema.price_column);
    const std::size_t needed = std::max({date_col, arrivals_col, price_col}) + 1;

    std::vector<WeeklyObservation> out;
    out.reserve(records.size() - 1);
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.fields.size() < needed) {
            throw ParseError(rec.line, "expected at least " + std::to_string(needed) +
                                           " fields, found " + std::to_string(rec.fields.size()));
        }
        out.push_back(WeeklyObservation{
            parse_date(rec.fields[date_col], schema.date_format, rec.line),
            parse_value(rec.fields[arrivals_col], schema.arrivals_column, rec.line),
            parse_value(rec.fields[price_col], schema.price_column, rec.line),
        });
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path.string() + "'");
    return std::move(buf).str();
}

std::vector<WeeklyObservation> read_market_csv(const std::filesystem::path& path,
                                               const CsvSchema& schema) {
    const std::string text = read_text_file(path);
    try {
        return parse_market_csv(text, schema);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.detail(), path.string());
    }
}

}  // namespace seasonwarp
