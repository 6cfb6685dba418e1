#pragma once

#include "k4links/grammar.hpp"
#include "k4links/series.hpp"

#include <cstddef>
#include <stdexcept>

namespace k4links {

/// E(z) = z^2 + 2 z^4/(1-z^2): the edge-label series (one label of size 2,
/// two of each even size >= 4).
inline TruncSeries build_E(std::size_t n) {
    TruncSeries e(n);
    if (n >= 2) e.at(2) = 1;
    for (std::size_t k = 4; k <= n; k += 2) e.at(k) = 2;
    return e;
}

/// Kbar(z) = 2 z^3/(1-z^2): prime torus knots, two chiralities per odd size >= 3.
inline TruncSeries build_Kbar(std::size_t n) {
    TruncSeries k(n);
    for (std::size_t i = 3; i <= n; i += 2) k.at(i) = 2;
    return k;
}

/// K(z): multisets of prime torus knots.
inline TruncSeries build_K(std::size_t n) {
    return pleth_exp(build_Kbar(n));
}

/// F(z) = f(z) exp(sum_{k>=1} F(z^k)/k) with f = E*K, solved as a one-unknown
/// fixpoint; the right-hand side gains two coefficients per pass (f has
/// valuation 2), so the solver ramps its working order accordingly.
inline TruncSeries build_F(std::size_t n) {
    const TruncSeries f = mul(build_E(n), build_K(n));
    GrammarSystem sys;
    sys.order = n;
    sys.names = {"F"};
    sys.rules = {[f](const std::vector<TruncSeries>& u) {
        return mul(f, pleth_exp(u[0]));
    }};
    return solve_fixpoint(sys, FixpointOptions{.order_gain_per_pass = 2})[0];
}

namespace detail {
inline TruncSeries lbar_from(const TruncSeries& F, const TruncSeries& E) {
    // F/E + (E/2)(-F^2/E^2 + F(z^2)/E(z^2)), assembled from T. = F/E so the
    // two quotients stay at full order.
    const std::size_t n = F.order();
    TruncSeries t = div(F, E).truncated(n);
    TruncSeries tz2 = power_substitute(t, 2);
    TruncSeries halfE = scale(Rat(1, 2), E);
    TruncSeries lbar = add(t, mul(halfE, sub(tz2, mul(t, t))));
    counting_coefficients(lbar, "Lbar");
    return lbar;
}
} // namespace detail

/// Lbar(z): non-split link types, via the dissymmetry combination.
inline TruncSeries build_Lbar(std::size_t n) {
    // padding keeps the F/E quotient exact through order n
    const std::size_t m = n + 2;
    return detail::lbar_from(build_F(m), build_E(m)).truncated(n);
}

/// Lhat(z): multisets of nontrivial Lbar objects.
inline TruncSeries build_Lhat(std::size_t n) {
    TruncSeries lbar = build_Lbar(n);
    lbar.at(0) = 0;
    TruncSeries lhat = pleth_exp(lbar);
    counting_coefficients(lhat, "Lhat");
    return lhat;
}

/// L(z) = Lhat(z^2)/(1-z) - 1: all link types counted by minimal-diagram edges.
inline TruncSeries build_L(std::size_t n) {
    const TruncSeries lhat = build_Lhat(n); // only coefficients up to n/2 survive z -> z^2
    TruncSeries l(n);
    Rat run(0);
    for (std::size_t i = 0; i <= n; ++i) {
        if (i % 2 == 0) run += lhat[i / 2];
        l.at(i) = run;
    }
    l.at(0) -= 1;
    counting_coefficients(l, "L");
    return l;
}

/// All link-type series at one truncation order.
struct LinkSeriesBundle {
    std::size_t order;
    TruncSeries E, Kbar, K, F, T_pointed, Lbar, Lhat, L;
};

inline LinkSeriesBundle build_link_series(std::size_t n) {
    const std::size_t m = n + 2;
    TruncSeries Fm = build_F(m);
    TruncSeries Em = build_E(m);
    LinkSeriesBundle b{n,
                       build_E(n),
                       build_Kbar(n),
                       build_K(n),
                       Fm.truncated(n),
                       TruncSeries::zero(n),
                       TruncSeries::zero(n),
                       TruncSeries::zero(n),
                       TruncSeries::zero(n)};
    b.T_pointed = div(Fm, Em).truncated(n);
    b.Lbar = detail::lbar_from(Fm, Em).truncated(n);
    TruncSeries lb = b.Lbar;
    lb.at(0) = 0;
    b.Lhat = pleth_exp(lb);
    counting_coefficients(b.Lhat, "Lhat");
    TruncSeries l(n);
    Rat run(0);
    for (std::size_t i = 0; i <= n; ++i) {
        if (i % 2 == 0) run += b.Lhat[i / 2];
        l.at(i) = run;
    }
    l.at(0) -= 1;
    counting_coefficients(l, "L");
    b.L = l;

    // even/odd equality [z^{2m}]L = [z^{2m+1}]L for m >= 1
    for (std::size_t m2 = 2; m2 + 1 <= n; m2 += 2) {
        if (b.L[m2] != b.L[m2 + 1])
            throw std::runtime_error("LinkSeriesBundle: even/odd equality of L violated");
    }
    return b;
}

/// Coefficients of prod_{k>=1} (1+z^k)^2 through order n: partitions into
/// distinct parts with two types of each part. Incremental multiplication;
/// factor k only touches coefficients >= k.
inline std::vector<Int> distinct_parts_counts(std::size_t n) {
    std::vector<Int> g(n + 1);
    g[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        for (int rep = 0; rep < 2; ++rep) {
            for (std::size_t i = n - k + 1; i-- > 0;) {
                if (g[i] != 0) g[i + k] += g[i];
            }
        }
    }
    return g;
}

inline TruncSeries distinct_parts_squared(std::size_t n) {
    std::vector<Int> g = distinct_parts_counts(n);
    TruncSeries s(n);
    for (std::size_t i = 0; i <= n; ++i) s.at(i) = Rat(g[i]);
    return s;
}

} // namespace k4links
