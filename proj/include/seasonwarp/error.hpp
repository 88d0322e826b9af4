#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seasonwarp/calendar.hpp"

namespace seasonwarp {

/// Base class of everything the library throws. The CLI maps any `Error` to
/// exit code 2 (data or I/O problem).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value that cannot be interpreted at all (invalid calendar date, NaN, ...).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// Dataset-level invariant violated, e.g. two observations for the same week.
class DataIntegrityError : public Error {
public:
    using Error::Error;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class DegenerateVarianceError : public DomainError {
public:
    using DomainError::DomainError;
};

class NumericalDegeneracyError : public Error {
public:
    using Error::Error;
};

/// Raised when a Sakoe-Chiba band excludes every boundary-to-boundary path.
class NoValidPathError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed CSV content; `line()` is the 1-based physical line of the record.
/// The message reads "line N: detail" or "source:N: detail".
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& detail, const std::string& source = {})
        : Error((source.empty() ? "line " : source + ":") + std::to_string(line) + ": " + detail),
          line_(line),
          detail_(detail) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

/// A requested ISO year is not densely covered; carries the missing weeks.
class IncompleteYearError : public Error {
public:
    IncompleteYearError(int iso_year, std::vector<WeekKey> missing);

    [[nodiscard]] int iso_year() const noexcept { return iso_year_; }
    [[nodiscard]] const std::vector<WeekKey>& missing() const noexcept { return missing_; }

private:
    int iso_year_;
    std::vector<WeekKey> missing_;
};

}  // namespace seasonwarp
