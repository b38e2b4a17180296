#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace ftqc {

using count_t = std::uint64_t;

// Snaps values that sit within sub-ulp noise of an integer back onto that
// integer, so that ceil() of an algebraically exact quotient (e.g. 27500
// divided by 2.75/2.25) does not round up spuriously.
inline double snap_integer(double x) {
    const double r = std::round(x);
    if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) {
        return r;
    }
    return x;
}

inline count_t ceil_count(double x) {
    if (std::isnan(x) || x < 0.0) {
        throw std::domain_error("ceil_count: negative or non-finite value");
    }
    const double c = std::ceil(snap_integer(x));
    if (c >= 1.8e19) {
        throw std::overflow_error("ceil_count: value exceeds 64-bit count range");
    }
    return static_cast<count_t>(c);
}

inline count_t checked_add(count_t a, count_t b) {
    count_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("count addition overflows 64 bits");
    }
    return r;
}

inline count_t checked_mul(count_t a, count_t b) {
    count_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("count multiplication overflows 64 bits");
    }
    return r;
}

}  // namespace ftqc
