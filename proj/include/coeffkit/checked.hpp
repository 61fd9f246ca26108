#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "coeffkit/errors.hpp"

namespace coeffkit::checked {

// Fixed-width arithmetic that throws OverflowError instead of wrapping.
// Unsigned helpers serve the pattern/triangle modules; the *_signed pair
// serves polynomial arithmetic, which allows negative coefficients.

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("64-bit unsigned addition overflow");
    return out;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
    if (b > a)
        throw OverflowError("64-bit unsigned subtraction underflow");
    return a - b;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("64-bit unsigned multiplication overflow");
    return out;
}

/// Division that must leave no remainder. A nonzero remainder means a
/// caller's formula is wrong, not that the input is bad, so it is a
/// logic_error rather than a coeffkit::Error.
inline std::uint64_t exact_div(std::uint64_t a, std::uint64_t d) {
    if (d == 0 || a % d != 0)
        throw std::logic_error("inexact integer division");
    return a / d;
}

inline std::uint64_t pow(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exponent; ++i)
        out = mul(out, base);
    return out;
}

/// n(n+1)/2. The even factor is halved before multiplying, so the checked
/// multiply rejects exactly the values that do not fit in 64 bits.
inline std::uint64_t triangular(std::uint64_t n) {
    if (n == std::numeric_limits<std::uint64_t>::max())
        throw OverflowError("triangular number operand too large");
    return n % 2 == 0 ? mul(n / 2, n + 1) : mul(n, (n + 1) / 2);
}

/// n(n+1)(n+2)/6. The /3 and /2 are folded into individual factors (one of
/// the three is divisible by 3; an even factor remains afterwards), again so
/// overflow is raised iff the true value exceeds 64 bits.
inline std::uint64_t tetrahedral(std::uint64_t n) {
    if (n >= std::numeric_limits<std::uint64_t>::max() - 1)
        throw OverflowError("tetrahedral number operand too large");
    std::uint64_t f[3] = {n, n + 1, n + 2};
    std::uint64_t& by_three = f[(3 - n % 3) % 3];
    by_three = exact_div(by_three, 3);
    for (auto& v : f) {
        if (v % 2 == 0) {
            v /= 2;
            break;
        }
    }
    return mul(mul(f[0], f[1]), f[2]);
}

/// C(n, k) by the stepwise product form; every intermediate division is
/// exact. Returns 0 for k > n. The running value after step i is
/// C(n-k+i, i), which never exceeds the final coefficient, so checking it
/// against the 64-bit ceiling rejects exactly the coefficients that do not
/// fit; the pre-division product lives in 128 bits.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    if (n - k < k)
        k = n - k;
    unsigned __int128 out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const unsigned __int128 product = out * (n - k + i);
        if (product % i != 0)
            throw std::logic_error("inexact binomial step");
        out = product / i;
        if (out > std::numeric_limits<std::uint64_t>::max())
            throw OverflowError("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(out);
}

inline std::int64_t add_signed(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("64-bit signed addition overflow");
    return out;
}

inline std::int64_t mul_signed(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("64-bit signed multiplication overflow");
    return out;
}

} // namespace coeffkit::checked
