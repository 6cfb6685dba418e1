#pragma once

#include "k4links/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace k4links {

/// Truncated formal power series with exact rational coefficients.
///
/// A series of order N stores coefficients for z^0..z^N. Binary operations
/// truncate to the minimum order of the operands. Values are immutable in
/// spirit: every operation returns a fresh series, so instances can be shared
/// freely across threads.
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}

    explicit TruncSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.emplace_back(0);
    }

    static TruncSeries zero(std::size_t order) { return TruncSeries(order); }

    static TruncSeries one(std::size_t order) {
        TruncSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    static TruncSeries monomial(const Rat& c, std::size_t k, std::size_t order) {
        TruncSeries s(order);
        if (k <= order) s.coeffs_[k] = c;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const Rat& operator[](std::size_t i) const { return coeffs_[i]; }

    Rat& at(std::size_t i) { return coeffs_[i]; }

    const std::vector<Rat>& coeffs() const { return coeffs_; }

    /// Index of the first nonzero coefficient; order()+1 when the series is 0.
    std::size_t valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return i;
        return coeffs_.size();
    }

    bool is_zero() const { return valuation() > order(); }

    TruncSeries truncated(std::size_t new_order) const {
        TruncSeries s(new_order);
        const std::size_t m = std::min(new_order, order());
        for (std::size_t i = 0; i <= m; ++i) s.coeffs_[i] = coeffs_[i];
        return s;
    }

    bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

private:
    std::vector<Rat> coeffs_;
};

inline TruncSeries add(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) r.at(i) = a[i] + b[i];
    return r;
}

inline TruncSeries sub(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) r.at(i) = a[i] - b[i];
    return r;
}

inline TruncSeries negate(const TruncSeries& a) {
    TruncSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) r.at(i) = -a[i];
    return r;
}

inline TruncSeries scale(const Rat& c, const TruncSeries& a) {
    TruncSeries r(a.order());
    if (c == 0) return r;
    for (std::size_t i = 0; i <= a.order(); ++i) r.at(i) = c * a[i];
    return r;
}

inline TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncSeries r(n);
    Rat tmp;
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b[j] == 0) continue;
            tmp = a[i];
            tmp *= b[j];
            r.at(i + j) += tmp;
        }
    }
    return r;
}

/// Quotient q with q*b = a through the common truncation.
/// Requires valuation(b) <= valuation(a) and b nonzero. The result has order
/// min(order a, order b) - valuation(b): beyond that the quotient is not
/// determined by the given coefficients.
inline TruncSeries div(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t vb = b.valuation();
    if (vb > b.order())
        throw std::invalid_argument("div: division by the zero series");
    if (a.valuation() < vb)
        throw std::invalid_argument("div: valuation of numerator below valuation of denominator");
    const std::size_t common = std::min(a.order(), b.order());
    const std::size_t n = common - vb;
    std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().begin() + common + 1);
    TruncSeries q(n);
    for (std::size_t i = 0; i <= n; ++i) {
        Rat c = rem[i + vb] / b[vb];
        q.at(i) = c;
        if (c == 0) continue;
        for (std::size_t j = vb; j <= b.order() && i + j <= common; ++j) {
            if (b[j] != 0) rem[i + j] -= c * b[j];
        }
    }
    return q;
}

/// outer(inner(z)); inner must have zero constant term.
inline TruncSeries compose(const TruncSeries& outer, const TruncSeries& inner) {
    if (inner[0] != 0)
        throw std::invalid_argument("compose: inner series has nonzero constant term");
    const std::size_t n = std::min(outer.order(), inner.order());
    const std::size_t v = inner.valuation();
    // outer coefficients beyond n/v cannot reach order <= n
    const std::size_t top = v > n ? 0 : std::min(outer.order(), n / std::max<std::size_t>(v, 1));
    TruncSeries r(n);
    const TruncSeries in = inner.truncated(n);
    for (std::size_t k = top + 1; k-- > 0;) {
        r = mul(r, in);
        r.at(0) += outer[k];
    }
    return r;
}

/// exp(a) for a with zero constant term, via the differential recurrence
/// e_n = (1/n) sum_{j=1..n} j a_j e_{n-j}.
inline TruncSeries exp_series(const TruncSeries& a) {
    if (a[0] != 0)
        throw std::invalid_argument("exp_series: nonzero constant term");
    const std::size_t n = a.order();
    TruncSeries e(n);
    e.at(0) = 1;
    Rat tmp;
    for (std::size_t m = 1; m <= n; ++m) {
        Rat s(0);
        for (std::size_t j = 1; j <= m; ++j) {
            if (a[j] == 0 || e[m - j] == 0) continue;
            tmp = a[j];
            tmp *= static_cast<long>(j);
            tmp *= e[m - j];
            s += tmp;
        }
        s /= static_cast<long>(m);
        e.at(m) = s;
    }
    return e;
}

/// a(z^k), truncated to the original order.
inline TruncSeries power_substitute(const TruncSeries& a, std::size_t k) {
    if (k < 1) throw std::invalid_argument("power_substitute: k must be >= 1");
    if (k == 1) return a;
    TruncSeries r(a.order());
    for (std::size_t i = 0; i * k <= a.order(); ++i) r.at(i * k) = a[i];
    return r;
}

/// Multiset construction: exp(sum_{k>=1} a(z^k)/k). Terms with k > order
/// contribute nothing at or below the truncation order (valuation >= 1).
inline TruncSeries pleth_exp(const TruncSeries& a) {
    if (a[0] != 0)
        throw std::invalid_argument("pleth_exp: nonzero constant term");
    const std::size_t n = a.order();
    TruncSeries acc(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const Rat inv_k(1, static_cast<long>(k));
        for (std::size_t j = 1; j * k <= n; ++j) {
            if (a[j] != 0) acc.at(j * k) += a[j] * inv_k;
        }
    }
    return exp_series(acc);
}

inline TruncSeries pow_int(const TruncSeries& a, unsigned e) {
    TruncSeries r = TruncSeries::one(a.order());
    TruncSeries b = a;
    while (e) {
        if (e & 1u) r = mul(r, b);
        if (e >>= 1u) b = mul(b, b);
    }
    return r;
}

/// Coefficients as nonnegative integers; throws on the first violation.
inline std::vector<Int> counting_coefficients(const TruncSeries& a, const char* what) {
    std::vector<Int> out(a.order() + 1);
    for (std::size_t i = 0; i <= a.order(); ++i) out[i] = require_count(a[i], what, i);
    return out;
}

inline std::string to_string(const TruncSeries& a) {
    std::string s;
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += a[i].str();
        if (i > 0) s += " z^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

} // namespace k4links
