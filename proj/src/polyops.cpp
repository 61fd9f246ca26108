#include "coeffkit/polyops.hpp"

#include <charconv>
#include <limits>

#include "coeffkit/checked.hpp"
#include "coeffkit/errors.hpp"
#include "coeffkit/oracle.hpp"

namespace coeffkit::polyops {
namespace {

constexpr std::uint64_t kMaxCoefficients = std::uint64_t{1} << 26;

std::vector<std::int64_t> strip_trailing_zeros(std::vector<std::int64_t> values) {
    while (values.size() > 1 && values.back() == 0)
        values.pop_back();
    if (values.empty())
        values.push_back(0);
    return values;
}

std::string_view trimmed(std::string_view token) {
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t'))
        token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t'))
        token.remove_suffix(1);
    return token;
}

} // namespace

IntPolynomial IntPolynomial::from_coefficients(std::vector<std::int64_t> values) {
    IntPolynomial p;
    p.coefficients = strip_trailing_zeros(std::move(values));
    return p;
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero())
        return IntPolynomial{};
    std::vector<std::int64_t> out(a.coefficients.size() + b.coefficients.size() - 1, 0);
    for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
        for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
            out[i + j] = checked::add_signed(
                out[i + j], checked::mul_signed(a.coefficients[i], b.coefficients[j]));
        }
    }
    return IntPolynomial::from_coefficients(std::move(out));
}

IntPolynomial power_sum_poly(std::uint64_t degree) {
    const std::uint64_t terms = checked::add(degree, 1);
    if (terms > kMaxCoefficients)
        throw DomainError("polynomial too large to materialize");
    IntPolynomial p;
    p.coefficients.assign(terms, 1);
    return p;
}

std::int64_t coefficient_of_product(const IntPolynomial& p, const PatternSpec& spec,
                                    std::uint64_t target) {
    const std::uint64_t expansion_top = checked::mul(spec.power, spec.degree);
    const std::uint64_t product_top = checked::add(p.degree(), expansion_top);
    if (target > product_top)
        throw DomainError("degree " + std::to_string(target) + " outside the product");

    const std::uint64_t first = target > expansion_top ? target - expansion_top : 0;
    const std::uint64_t last = std::min<std::uint64_t>(p.degree(), target);
    __int128 total = 0;
    for (std::uint64_t j = first; j <= last; ++j) {
        const std::uint64_t expansion_coeff =
            oracle::bounded_composition_count(spec, target - j);
        // |i64| * u64 always fits in __int128; only the running sum is checked.
        const __int128 term =
            static_cast<__int128>(p.at(j)) * static_cast<__int128>(expansion_coeff);
        if (__builtin_add_overflow(total, term, &total))
            throw OverflowError("product coefficient accumulation exceeds 128 bits");
    }
    if (total > std::numeric_limits<std::int64_t>::max() ||
        total < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("product coefficient exceeds signed 64 bits");
    return static_cast<std::int64_t>(total);
}

IntPolynomial parse_polynomial(const std::string& text) {
    std::vector<std::int64_t> values;
    std::string_view rest = text;
    while (true) {
        const std::size_t comma = rest.find(',');
        const std::string_view token = trimmed(rest.substr(0, comma));
        std::int64_t value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || end != token.data() + token.size())
            throw DomainError("cannot parse polynomial coefficient '" + std::string(token) + "'");
        values.push_back(value);
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return IntPolynomial::from_coefficients(std::move(values));
}

std::string format_polynomial(const IntPolynomial& p) {
    std::string out;
    for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(p.coefficients[i]);
    }
    return out;
}

} // namespace coeffkit::polyops
