#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "seasonwarp/series.hpp"

namespace seasonwarp {

enum class DateFormat {
    Iso,          ///< YYYY-MM-DD
    DayMonthYear  ///< DD/MM/YYYY
};

/// Column mapping for market CSV input.
struct CsvSchema {
    std::string date_column = "date";
    std::string arrivals_column = "arrivals";
    std::string price_column = "modal_price";
    DateFormat date_format = DateFormat::Iso;
};

/// Parses a market CSV with a header row. Each data row becomes one
/// observation keyed by the ISO week of its date; blank value cells leave
/// that variable absent. Throws SchemaError for unknown columns and
/// ParseError (with the line number) for malformed rows.
[[nodiscard]] std::vector<WeeklyObservation> parse_market_csv(std::string_view text,
                                                              const CsvSchema& schema = {});

/// Reads the whole file and forwards to parse_market_csv. Throws IoError.
[[nodiscard]] std::vector<WeeklyObservation> read_market_csv(const std::filesystem::path& path,
                                                             const CsvSchema& schema = {});

[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);

}  // namespace seasonwarp
