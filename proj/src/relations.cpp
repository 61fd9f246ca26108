#include "coeffkit/relations.hpp"

#include <string>

#include "coeffkit/checked.hpp"
#include "coeffkit/errors.hpp"

namespace coeffkit::relations {
namespace {

constexpr std::uint64_t kMaxRowEntries = std::uint64_t{1} << 26;

void require_power_in_range(std::uint64_t power) {
    if (power < 2 || power > 4)
        throw DomainError("power must be 2, 3, or 4; got " + std::to_string(power));
}

void require_row_positive(std::uint64_t row) {
    if (row < 1)
        throw DomainError("row index must be >= 1");
}

void require_pos_in_row(std::uint64_t pos, std::uint64_t limit, std::uint64_t row) {
    if (pos < 1 || pos > limit)
        throw PositionError("position " + std::to_string(pos) + " outside [1, " +
                            std::to_string(limit) + "] in row " + std::to_string(row));
}

} // namespace

std::uint64_t row_width(std::uint64_t power, std::uint64_t row) {
    require_power_in_range(power);
    require_row_positive(row);
    return checked::add(checked::mul(power - 2, row - 1), 1);
}

std::uint64_t g2(std::uint64_t row) {
    require_row_positive(row);
    return row;
}

std::uint64_t g3_edge(std::uint64_t row) {
    require_row_positive(row);
    return checked::triangular(row);
}

std::uint64_t g3(std::uint64_t row, std::uint64_t pos) {
    require_row_positive(row);
    require_pos_in_row(pos, row, row);
    // pos*(row+1-pos) + row(row-1)/2, the halved form of the quadratic.
    const std::uint64_t cross = checked::mul(pos, checked::add(row, 1) - pos);
    return checked::add(cross, checked::triangular(row - 1));
}

std::uint64_t g4_edge(std::uint64_t row) {
    require_row_positive(row);
    return checked::tetrahedral(row);
}

std::uint64_t g4_increment(std::uint64_t row, std::uint64_t pos) {
    require_row_positive(row);
    require_pos_in_row(pos, row, row);
    // bracket = row(row+1) + pos*(row-pos) - pos, nonnegative for pos <= row.
    const std::uint64_t bracket =
        checked::sub(checked::add(checked::mul(row, checked::add(row, 1)),
                                  checked::mul(pos, row - pos)),
                     pos);
    // (pos-1)*bracket is always even; halve whichever factor is even first
    // so the checked multiply only rejects true 64-bit overflow.
    if ((pos - 1) % 2 == 0)
        return checked::mul((pos - 1) / 2, bracket);
    return checked::mul(pos - 1, checked::exact_div(bracket, 2));
}

std::uint64_t g4(std::uint64_t row, std::uint64_t pos) {
    return checked::add(g4_edge(row), g4_increment(row, pos));
}

std::uint64_t unique_value(const RelationQuery& q, G4Form form) {
    return unique_value(q.power, q.row, q.pos, form);
}

std::uint64_t unique_value(std::uint64_t power, std::uint64_t row, std::uint64_t pos,
                           G4Form form) {
    const std::uint64_t width = row_width(power, row);
    require_pos_in_row(pos, width, row);
    try {
        switch (power) {
        case 2:
            return g2(row);
        case 3:
            return g3(row, pos);
        default: {
            // Palindrome fold: positions past the midpoint mirror back
            // (2*row - pos, written subtraction-first to stay in range).
            const std::uint64_t folded = pos > row ? row - (pos - row) : pos;
            return form == G4Form::full ? g4(row, folded) : g4_increment(row, folded);
        }
        }
    } catch (const OverflowError& e) {
        throw OverflowError("overflow evaluating l=" + std::to_string(power) +
                            " r=" + std::to_string(row) + " k=" + std::to_string(pos) +
                            ": " + e.what());
    }
}

UniqueRow unique_row_closed(std::uint64_t power, std::uint64_t row, G4Form form) {
    const std::uint64_t width = row_width(power, row);
    if (width > kMaxRowEntries)
        throw DomainError("row " + std::to_string(row) + " is too wide to materialize");
    UniqueRow out{power, row, {}};
    out.values.reserve(width);
    for (std::uint64_t pos = 1; pos <= width; ++pos)
        out.values.push_back(unique_value(power, row, pos, form));
    return out;
}

CoefficientVector expand_closed(const PatternSpec& spec) {
    require_power_in_range(spec.power);
    const std::uint64_t top_degree = checked::mul(spec.power, spec.degree);
    const std::uint64_t length = checked::add(top_degree, 1);
    if (length > kMaxRowEntries)
        throw DomainError("expansion too large to materialize");

    CoefficientVector out(length);
    for (std::uint64_t m = 0; m <= top_degree / 2; ++m) {
        // Below the central block every coefficient is a stabilized value,
        // which is exactly the left-edge diagonal of the triangle.
        const std::uint64_t value =
            m < spec.degree ? unique_value(spec.power, m + 1, 1)
                            : unique_value(spec.power, spec.degree + 1, m - spec.degree + 1);
        out[m] = value;
        out[top_degree - m] = value;
    }
    return out;
}

} // namespace coeffkit::relations
