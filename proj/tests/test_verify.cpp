#include <doctest.h>

#include <cstdint>
#include <tuple>
#include <vector>

#include "coeffkit/relations.hpp"
#include "coeffkit/verify.hpp"

using namespace coeffkit;

TEST_CASE("closed forms match the oracle over a clean sweep") {
    verify::Options options;
    options.powers = {2, 3, 4};
    options.max_row = 60;
    const verify::Report report = verify::run(options);
    CHECK(report.ok());
    CHECK(report.mismatches.empty());
    CHECK(report.elapsed.count() > 0);
}

TEST_CASE("single-power sweeps") {
    verify::Options options;
    options.powers = {4};
    options.max_row = 1;
    CHECK(verify::run(options).ok());

    options.powers = {2};
    options.max_row = 500;
    CHECK(verify::run(options).ok());
}

TEST_CASE("the edge-free power-4 form is flagged against the oracle") {
    verify::Options options;
    options.powers = {4};
    options.max_row = 2;
    options.g4_form = relations::G4Form::increment_only;
    const verify::Report report = verify::run(options);

    CHECK_FALSE(report.ok());
    // Row 1 disagrees at its only position, row 2 at all three; the middle of
    // row 2 is the canonical witness: dropped edge term, 2 instead of 6.
    REQUIRE(report.mismatches.size() == 4);
    const verify::Mismatch witness{4, 2, 2, 2, 6};
    CHECK(report.mismatches[2] == witness);

    // Each mismatch in a row differs by the same dropped edge value.
    for (const auto& mm : report.mismatches)
        CHECK(mm.oracle_value - mm.closed_value == relations::g4_edge(mm.row));
}

TEST_CASE("mismatch order is deterministic regardless of worker count") {
    verify::Options serial;
    serial.powers = {3, 4};
    serial.max_row = 25;
    serial.g4_form = relations::G4Form::increment_only;

    verify::Options pooled = serial;
    pooled.workers = 4;

    const auto serial_report = verify::run(serial);
    const auto pooled_report = verify::run(pooled);
    CHECK_FALSE(serial_report.ok());
    CHECK(serial_report.mismatches == pooled_report.mismatches);

    for (std::size_t i = 1; i < serial_report.mismatches.size(); ++i) {
        const auto& prev = serial_report.mismatches[i - 1];
        const auto& next = serial_report.mismatches[i];
        const auto prev_key = std::tuple{prev.power, prev.row, prev.pos};
        const auto next_key = std::tuple{next.power, next.row, next.pos};
        CHECK(prev_key < next_key);
    }
}

TEST_CASE("worker pools agree with serial runs on clean sweeps") {
    verify::Options serial;
    serial.powers = {2, 3, 4};
    serial.max_row = 40;

    verify::Options pooled = serial;
    pooled.workers = 3;

    CHECK(verify::run(serial).ok());
    CHECK(verify::run(pooled).ok());
}
