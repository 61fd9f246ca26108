#pragma once

#include <cstdint>
#include <set>

#include "coeffkit/types.hpp"

namespace coeffkit::oracle {

// Ground-truth coefficient computation by exhaustive integer convolution,
// independent of every closed form in coeffkit::relations. Works for any
// power >= 1, not just the powers with closed forms.

/// Exact coefficients of (x^degree+...+1)^power via repeated sliding-window
/// convolution with the all-ones base. Length power*degree + 1.
CoefficientVector expand_power_sum(const PatternSpec& spec);

/// Number of ways to write `target` as an ordered sum of `power` parts, each
/// in [0, degree], by inclusion-exclusion over stars and bars. Equals
/// expand_power_sum(spec)[target] but shares no code path with it.
std::uint64_t bounded_composition_count(const PatternSpec& spec, std::uint64_t target);

/// Row `row` of the unique-coefficient triangle read off the expansion: with
/// d = row-1, the central block of (x^d+...+1)^power covering degrees
/// d..(power-1)*d. Block length is (power-2)*d + 1.
UniqueRow unique_row_oracle(std::uint64_t power, std::uint64_t row);

/// Coefficient values present in the expansion with degree parameter row-1
/// but absent from every expansion with a smaller degree parameter of the
/// same power.
std::set<std::uint64_t> first_occurrence_values(std::uint64_t power, std::uint64_t row);

} // namespace coeffkit::oracle
