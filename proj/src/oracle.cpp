#include "coeffkit/oracle.hpp"

#include <string>

#include "coeffkit/checked.hpp"
#include "coeffkit/errors.hpp"

namespace coeffkit::oracle {
namespace {

constexpr std::uint64_t kMaxCoefficients = std::uint64_t{1} << 26;

void require_valid(const PatternSpec& spec) {
    if (spec.power < 1)
        throw DomainError("power must be >= 1");
}

} // namespace

CoefficientVector expand_power_sum(const PatternSpec& spec) {
    require_valid(spec);
    const std::uint64_t terms = checked::add(spec.degree, 1);
    const std::uint64_t length = checked::add(checked::mul(spec.power, spec.degree), 1);
    if (length > kMaxCoefficients)
        throw DomainError("expansion of length " + std::to_string(length) +
                          " exceeds the memory budget");

    CoefficientVector current(terms, 1);
    for (std::uint64_t step = 2; step <= spec.power; ++step) {
        // Convolve with the all-ones base: each output coefficient is a
        // sliding-window sum of `terms` consecutive inputs.
        CoefficientVector next(current.size() + spec.degree);
        std::uint64_t window = 0;
        for (std::uint64_t m = 0; m < next.size(); ++m) {
            if (m < current.size())
                window = checked::add(window, current[m]);
            if (m >= terms)
                window -= current[m - terms]; // removing a value added earlier
            next[m] = window;
        }
        current = std::move(next);
    }
    return current;
}

std::uint64_t bounded_composition_count(const PatternSpec& spec, std::uint64_t target) {
    require_valid(spec);
    if (target > checked::mul(spec.power, spec.degree))
        throw DomainError("degree " + std::to_string(target) + " outside the expansion");

    // sum_j (-1)^j C(power, j) C(target - j(degree+1) + power - 1, power - 1)
    const std::uint64_t parts = checked::add(spec.degree, 1);
    __int128 total = 0;
    for (std::uint64_t j = 0; j <= spec.power; ++j) {
        if (j > target / parts) // j*parts > target, no more terms
            break;
        const std::uint64_t remaining = target - j * parts;
        const std::uint64_t ways = checked::mul(
            checked::binomial(spec.power, j),
            checked::binomial(checked::add(remaining, spec.power - 1), spec.power - 1));
        total += j % 2 == 0 ? static_cast<__int128>(ways) : -static_cast<__int128>(ways);
    }
    if (total < 0)
        throw std::logic_error("inclusion-exclusion produced a negative count");
    if (total > static_cast<__int128>(~std::uint64_t{0}))
        throw OverflowError("composition count exceeds 64 bits");
    return static_cast<std::uint64_t>(total);
}

UniqueRow unique_row_oracle(std::uint64_t power, std::uint64_t row) {
    if (power < 2)
        throw DomainError("unique rows are defined for power >= 2");
    if (row < 1)
        throw DomainError("row index must be >= 1");
    const std::uint64_t d = row - 1;
    const CoefficientVector expansion = expand_power_sum({d, power});
    const std::uint64_t lo = d;
    const std::uint64_t hi = checked::mul(power - 1, d);
    UniqueRow out{power, row, {}};
    out.values.assign(expansion.begin() + static_cast<std::ptrdiff_t>(lo),
                      expansion.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    return out;
}

std::set<std::uint64_t> first_occurrence_values(std::uint64_t power, std::uint64_t row) {
    if (power < 2)
        throw DomainError("unique rows are defined for power >= 2");
    if (row < 1)
        throw DomainError("row index must be >= 1");
    const std::uint64_t d = row - 1;
    const CoefficientVector expansion = expand_power_sum({d, power});
    std::set<std::uint64_t> fresh(expansion.begin(), expansion.end());
    for (std::uint64_t s = 0; s < d; ++s) {
        for (std::uint64_t value : expand_power_sum({s, power}))
            fresh.erase(value);
    }
    return fresh;
}

} // namespace coeffkit::oracle
