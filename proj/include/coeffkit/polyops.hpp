#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coeffkit/types.hpp"

namespace coeffkit::polyops {

/// Dense exact-integer polynomial; index = degree, coefficients may be
/// negative. Canonical form: no trailing zeros, the zero polynomial is {0}.
struct IntPolynomial {
    std::vector<std::int64_t> coefficients{0};

    /// Builds a canonical polynomial (strips trailing zeros).
    static IntPolynomial from_coefficients(std::vector<std::int64_t> values);

    std::uint64_t degree() const { return coefficients.size() - 1; }
    bool is_zero() const { return coefficients.size() == 1 && coefficients[0] == 0; }

    /// Coefficient of x^i, zero beyond the degree.
    std::int64_t at(std::uint64_t i) const {
        return i < coefficients.size() ? coefficients[i] : 0;
    }

    bool operator==(const IntPolynomial&) const = default;
};

/// Exact schoolbook product.
IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);

/// The all-ones polynomial x^degree + x^(degree-1) + ... + 1.
IntPolynomial power_sum_poly(std::uint64_t degree);

/// Coefficient of x^target in p * (x^degree+...+1)^power, combined as
/// sum_j p[j] * (expansion coefficient at target-j) without materializing
/// the product; the expansion coefficients come from the composition count.
std::int64_t coefficient_of_product(const IntPolynomial& p, const PatternSpec& spec,
                                    std::uint64_t target);

/// Text format shared with the CLI: comma-separated integers, ascending
/// degree ("1,2" is 1 + 2x). Throws DomainError naming the offending token.
IntPolynomial parse_polynomial(const std::string& text);
std::string format_polynomial(const IntPolynomial& p);

} // namespace coeffkit::polyops
