#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <stdexcept>

namespace k4links {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

inline Int pow2(unsigned long k) {
    Int r(1);
    return r << k;
}

inline bool is_integer(const Rat& q) {
    return denominator(q) == 1;
}

/// Throws unless q is a nonnegative integer; used at counting-series boundaries.
inline Int require_count(const Rat& q, const char* what, std::size_t index) {
    if (!is_integer(q) || q < 0) {
        throw std::runtime_error(std::string(what) + ": coefficient at index " +
                                 std::to_string(index) + " is not a nonnegative integer");
    }
    return numerator(q);
}

} // namespace k4links
