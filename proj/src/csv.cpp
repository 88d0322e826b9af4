#include "seasonwarp/csv.hpp"

#include "seasonwarp/error.hpp"

namespace seasonwarp::csv {

std::vector<Record> parse(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    std::vector<Record> records;
    Record current;
    std::string field;
    std::size_t line = 1;
    std::size_t pos = 0;
    bool record_started = false;

    auto finish_field = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
    };
    auto finish_record = [&] {
        finish_field();
        const bool blank = current.fields.size() == 1 && current.fields.front().empty();
        if (!blank) records.push_back(std::move(current));
        current = Record{};
        record_started = false;
    };

    while (pos < text.size()) {
        if (!record_started) {
            current.line = line;
            record_started = true;
        }
        const char c = text[pos];
        if (c == '"' && field.empty()) {
            const std::size_t quote_line = line;
            ++pos;
            bool closed = false;
            while (pos < text.size()) {
                const char q = text[pos];
                if (q == '"') {
                    if (pos + 1 < text.size() && text[pos + 1] == '"') {
                        field.push_back('"');
                        pos += 2;
                        continue;
                    }
                    ++pos;
                    closed = true;
                    break;
                }
                if (q == '\n') ++line;
                field.push_back(q);
                ++pos;
            }
            if (!closed) throw ParseError(quote_line, "unterminated quoted field");
            if (pos < text.size() && text[pos] != ',' && text[pos] != '\n' && text[pos] != '\r') {
                throw ParseError(line, "unexpected character after closing quote");
            }
            continue;
        }
        if (c == ',') {
            finish_field();
            ++pos;
        } else if (c == '\r' || c == '\n') {
            finish_record();
            pos += (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') ? 2 : 1;
            ++line;
        } else {
            field.push_back(c);
            ++pos;
        }
    }
    if (record_started) finish_record();
    return records;
}

std::string escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

namespace {

template <typename Range>
std::string join_row(const Range& fields) {
    std::string out;
    bool first = true;
    for (const auto& f : fields) {
        if (!first) out.push_back(',');
        out += escape(f);
        first = false;
    }
    out.push_back('\n');
    return out;
}

}  // namespace

std::string row(std::initializer_list<std::string_view> fields) { return join_row(fields); }

std::string row(const std::vector<std::string>& fields) { return join_row(fields); }

}  // namespace seasonwarp::csv
