#include <doctest.h>

#include <cmath>
#include <string>

#include "helpers.hpp"
#include "seasonwarp/csv.hpp"
#include "seasonwarp/error.hpp"
#include "seasonwarp/ingest.hpp"
#include "seasonwarp/series.hpp"

using namespace seasonwarp;

TEST_CASE("csv reader handles quotes, CRLF, BOM and blank lines") {
    const auto rows = csv::parse("\xEF\xBB\xBF" "a,b\r\n\"x, y\",\"he said \"\"hi\"\"\"\r\n\r\n1,\n");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].fields == std::vector<std::string>{"a", "b"});
    CHECK(rows[1].fields == std::vector<std::string>{"x, y", "he said \"hi\""});
    CHECK(rows[2].fields == std::vector<std::string>{"1", ""});
    CHECK(rows[2].line == 4);
    CHECK_THROWS_AS(csv::parse("a,\"b\n"), ParseError);
}

TEST_CASE("csv escape round-trips through the reader") {
    const std::vector<std::string> fields{"plain", "com,ma", "quo\"te", "new\nline", ""};
    const auto rows = csv::parse(csv::row(fields));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].fields == fields);
}

TEST_CASE("market csv: ISO dates, blank cells and column mapping") {
    const auto obs = parse_market_csv(
        "date,arrivals,modal_price\n2022-03-06,100,1500\n2022-03-13,,1600\n2022-03-20,90,\n");
    REQUIRE(obs.size() == 3);
    CHECK(obs[0].week == WeekKey{2022, 9});
    CHECK(*obs[0].arrivals == 100.0);
    CHECK_FALSE(obs[1].arrivals.has_value());
    CHECK_FALSE(obs[2].modal_price.has_value());

    CsvSchema schema;
    schema.date_column = "Week";
    schema.arrivals_column = "Qty";
    schema.price_column = "Price";
    schema.date_format = DateFormat::DayMonthYear;
    const auto mapped = parse_market_csv("Price,Week,Qty\n12,06/03/2022,7\n", schema);
    REQUIRE(mapped.size() == 1);
    CHECK(mapped[0].week == WeekKey{2022, 9});
    CHECK(*mapped[0].arrivals == 7.0);
    CHECK(*mapped[0].modal_price == 12.0);
}

TEST_CASE("market csv errors carry line numbers") {
    CHECK_THROWS_AS((void)parse_market_csv("when,arrivals,modal_price\n"), SchemaError);
    try {
        (void)parse_market_csv("date,arrivals,modal_price\n2022-03-06,1,2\n2022-13-01,1,2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS((void)parse_market_csv("date,arrivals,modal_price\n2022-03-06,abc,2\n"), ParseError);
    CHECK_THROWS_AS((void)parse_market_csv("date,arrivals,modal_price\n2022-03-06,-1,2\n"), ParseError);
    CHECK_THROWS_AS((void)read_market_csv("/nonexistent/x.csv"), IoError);
}

TEST_CASE("read_market_csv names the file in parse errors") {
    testing::TempDir dir("ingest");
    testing::spit(dir / "bad.csv", "date,arrivals,modal_price\nnot-a-date,1,2\n");
    try {
        (void)read_market_csv(dir / "bad.csv");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("bad.csv:2:") != std::string::npos);
    }
}

TEST_CASE("build_weekly_series sorts, skips absent values, rejects duplicates") {
    std::vector<WeeklyObservation> obs{
        {{2022, 3}, 5.0, 50.0},
        {{2022, 1}, 3.0, std::nullopt},
        {{2022, 2}, std::nullopt, 40.0},
    };
    const auto arrivals = build_weekly_series(obs, Variable::Arrivals);
    REQUIRE(arrivals.size() == 2);
    CHECK(arrivals.points()[0].week == WeekKey{2022, 1});
    CHECK(arrivals.values() == std::vector<double>{3.0, 5.0});
    CHECK_FALSE(arrivals.is_dense());
    CHECK(arrivals.span_weeks() == 3);

    obs.push_back({{2022, 1}, 1.0, 1.0});
    CHECK_THROWS_AS((void)build_weekly_series(obs, Variable::Arrivals), DataIntegrityError);
}

TEST_CASE("slice_year and complete_years") {
    std::vector<double> v(52 + 53 + 10, 1.0);
    const auto s = testing::dense_series(v, {2019, 1});
    CHECK(complete_years(s) == std::vector<int>{2019, 2020});
    CHECK(slice_year(s, 2020).values.size() == 53);
    try {
        (void)slice_year(s, 2021);
        FAIL("expected IncompleteYearError");
    } catch (const IncompleteYearError& e) {
        CHECK(e.iso_year() == 2021);
        CHECK(e.missing().size() == 42);
    }
}

TEST_CASE("log_diff") {
    const std::vector<double> v{1.0, std::exp(1.0), std::exp(3.0)};
    const auto d = log_diff(v);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == doctest::Approx(1.0));
    CHECK(d[1] == doctest::Approx(2.0));
    CHECK_THROWS_AS((void)log_diff(std::vector<double>{1.0}), InsufficientDataError);
    CHECK_THROWS_AS((void)log_diff(std::vector<double>{1.0, 0.0}), DomainError);
}
