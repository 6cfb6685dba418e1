#pragma once

#include "k4links/rational.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace k4links {

/// Working precision: 60 decimal digits; Newton tolerance 1e-50; constants
/// reported at up to 50 digits.
inline constexpr unsigned kRealDigits = 60;

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<kRealDigits>>;

inline Real newton_tolerance() {
    return pow(Real(10), -50);
}

inline Real to_real(const Int& x) { return x.convert_to<Real>(); }

inline Real to_real(const Rat& q) {
    return to_real(numerator(q)) / to_real(denominator(q));
}

inline Real pi_real() { return boost::math::constants::pi<Real>(); }

/// Gamma at negative half-integers and general arguments (reflection handled
/// by boost.math).
inline Real gamma_real(const Real& x) { return boost::math::tgamma(x); }

} // namespace k4links
