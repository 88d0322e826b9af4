#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "seasonwarp/calendar.hpp"

namespace seasonwarp {

struct FixtureOptions {
    std::uint64_t seed = 42;
    int first_year = 2010;  ///< ISO years, inclusive
    int last_year = 2024;
    std::size_t gap_count = 6;
    std::size_t spike_count = 4;
};

/// A synthetic weekly market dataset shaped like a volatile perishable
/// commodity: two arrival peaks (weeks 5-15 and 40-48), prices moving
/// inversely, lognormal shocks and a few isolated price spikes.
struct Fixture {
    std::string csv;                   ///< date,arrivals,modal_price
    std::vector<WeekKey> gap_weeks;    ///< weeks left without values
    std::vector<WeekKey> spike_weeks;  ///< weeks with injected price spikes
};

/// Deterministic for a given seed and standard library.
[[nodiscard]] Fixture generate_fixture(const FixtureOptions& options = {});

}  // namespace seasonwarp
