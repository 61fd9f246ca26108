#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "coeffkit/relations.hpp"

namespace coeffkit::verify {

/// One disagreement between the closed form and the oracle.
struct Mismatch {
    std::uint64_t power = 0;
    std::uint64_t row = 0;
    std::uint64_t pos = 0;
    std::uint64_t closed_value = 0;
    std::uint64_t oracle_value = 0;

    bool operator==(const Mismatch&) const = default;
};

struct Options {
    std::vector<std::uint64_t> powers = {2, 3, 4};
    std::uint64_t max_row = 200;
    unsigned workers = 1;
    relations::G4Form g4_form = relations::G4Form::full;
};

struct Report {
    Options options;
    std::vector<Mismatch> mismatches; // ordered by (power, row, pos)
    std::chrono::nanoseconds elapsed{0};

    bool ok() const { return mismatches.empty(); }
};

/// Compares unique_row_closed against unique_row_oracle for every requested
/// (power, row). Rows may be distributed over a worker pool; the report is
/// ordered by (power, row) regardless of scheduling.
Report run(const Options& options);

} // namespace coeffkit::verify
