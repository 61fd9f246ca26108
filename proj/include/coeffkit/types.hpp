#pragma once

#include <cstdint>
#include <vector>

namespace coeffkit {

/// Dense expansion coefficients, exact and nonnegative; index = degree.
using CoefficientVector = std::vector<std::uint64_t>;

/// One expansion (x^degree + x^(degree-1) + ... + 1)^power. The base
/// polynomial has degree+1 terms, all with coefficient 1.
struct PatternSpec {
    std::uint64_t degree = 0;
    std::uint64_t power = 1;
};

/// Address of one value in a unique-coefficient triangle: 1-based position
/// `pos` within row `row` of the triangle for `power`. Row `row` has
/// (power-2)*(row-1)+1 entries.
struct RelationQuery {
    std::uint64_t power = 2;
    std::uint64_t row = 1;
    std::uint64_t pos = 1;
};

/// One full triangle row; `values` is palindromic and strictly positive.
struct UniqueRow {
    std::uint64_t power = 2;
    std::uint64_t row = 1;
    std::vector<std::uint64_t> values;
};

} // namespace coeffkit
