#pragma once

#include "k4links/grammar.hpp"
#include "k4links/series.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k4links {

enum class MapFamily { all, minimal, unknot };

inline const char* family_name(MapFamily f) {
    switch (f) {
        case MapFamily::all: return "all";
        case MapFamily::minimal: return "minimal";
        case MapFamily::unknot: return "unknot";
    }
    return "?";
}

/// T_r(z) = z^r sum_{m>=0} C(2m+r, m) z^{2m}, exact binomials.
inline TruncSeries build_Tr(unsigned r, std::size_t n) {
    if (r != 1 && r != 3) throw std::invalid_argument("build_Tr: r must be 1 or 3");
    TruncSeries t(n);
    for (std::size_t m = 0; 2 * m + r <= n; ++m)
        t.at(2 * m + r) = Rat(binomial(2 * m + r, m));
    return t;
}

/// Solution of one rooted-diagram grammar system.
struct MapGrammarSolution {
    MapFamily family;
    std::size_t order;
    std::vector<std::string> names;
    std::vector<TruncSeries> unknowns;
    TruncSeries plus_series; // root-edge-counting, crossing-weighted variant

    const TruncSeries& operator[](const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return unknowns[i];
        throw std::invalid_argument("MapGrammarSolution: unknown name " + name);
    }
};

namespace detail {

inline void check_odd_support(const TruncSeries& m, const char* what) {
    for (std::size_t i = 0; i <= m.order(); i += 2)
        if (m[i] != 0)
            throw std::runtime_error(std::string(what) + ": even-exponent coefficient found");
}

inline void check_equal(const TruncSeries& a, const TruncSeries& b, const char* what) {
    if (a != b) throw std::runtime_error(std::string(what) + ": symmetric pair differs");
}

} // namespace detail

/// All rooted K4-minor-free 4-regular maps; z marks non-root edges.
/// plus_series[n] = 2^{n/2} [z^{n-1}] M for even n (crossing choices times
/// the root-edge shift).
inline MapGrammarSolution solve_all(std::size_t n) {
    enum { M, U, S, P, F };
    GrammarSystem sys;
    sys.order = n;
    sys.names = {"M", "U", "S", "P", "F"};
    auto z = [n](std::size_t k) { return TruncSeries::monomial(Rat(1), k, n); };
    sys.rules = {
        [](const std::vector<TruncSeries>& u) {
            return add(add(u[U], u[S]), add(u[P], u[F]));
        },
        [z](const std::vector<TruncSeries>& u) {
            return add(scale(2, mul(z(2), u[M])), scale(2, z(1)));
        },
        [z](const std::vector<TruncSeries>& u) {
            return mul(mul(z(1), sub(u[M], u[S])), u[M]);
        },
        [z, n](const std::vector<TruncSeries>& u) {
            TruncSeries opz = add(TruncSeries::one(n), mul(z(1), u[M]));
            return add(mul(z(3), pow_int(opz, 3)), mul(z(1), mul(u[F], u[M])));
        },
        [z](const std::vector<TruncSeries>& u) {
            TruncSeries w = add(z(1), mul(z(2), u[M]));
            TruncSeries w2 = mul(w, w);
            return mul(w2, add(u[F], scale(2, mul(z(1), w2))));
        },
    };
    auto sol = solve_fixpoint(sys, FixpointOptions{.order_gain_per_pass = 1});
    detail::check_odd_support(sol[M], "solve_all");
    TruncSeries plus(n);
    for (std::size_t k = 2; k <= n; k += 2)
        plus.at(k) = Rat(pow2(k / 2)) * sol[M][k - 1];
    counting_coefficients(plus, "Mplus");
    return {MapFamily::all, n, sys.names, std::move(sol), std::move(plus)};
}

/// Minimal rooted diagrams; crossings encoded by the grammar itself,
/// plus_series = z*M1.
inline MapGrammarSolution solve_minimal(std::size_t n) {
    enum { M, Mpp, Mpm, Mmp, Mmm, Spp, Spm, Smp, Smm, Ppm, Pmp, Fpm, Fmp };
    GrammarSystem sys;
    sys.order = n;
    sys.names = {"M1",  "M++", "M+-", "M-+", "M--", "S++", "S+-",
                 "S-+", "S--", "P+-", "P-+", "F+-", "F-+"};
    auto z = [n](std::size_t k) { return TruncSeries::monomial(Rat(1), k, n); };
    auto series_rule = [z](int ma, int mb, int mc, int md, int sa, int sb) {
        // z (M_a + M_b)(M_c + M_d - S_a - S_b)
        return [=](const std::vector<TruncSeries>& u) {
            return mul(mul(z(1), add(u[ma], u[mb])),
                       sub(add(u[mc], u[md]), add(u[sa], u[sb])));
        };
    };
    auto parallel_rule = [z, n](int f) {
        return [=](const std::vector<TruncSeries>& u) {
            TruncSeries opz = add(TruncSeries::one(n), mul(z(1), u[M]));
            return add(mul(z(3), pow_int(opz, 3)), mul(z(1), mul(u[f], u[M])));
        };
    };
    auto chain_rule = [z](int f) {
        return [=](const std::vector<TruncSeries>& u) {
            TruncSeries w = add(z(1), mul(z(2), u[M]));
            TruncSeries w2 = mul(w, w);
            return mul(w2, add(u[f], scale(2, mul(z(1), w2))));
        };
    };
    sys.rules.resize(13);
    sys.rules[M] = [](const std::vector<TruncSeries>& u) {
        return add(add(u[Mpp], u[Mpm]), add(u[Mmp], u[Mmm]));
    };
    sys.rules[Mmp] = [](const std::vector<TruncSeries>& u) {
        return add(add(u[Smp], u[Pmp]), u[Fmp]);
    };
    sys.rules[Mpm] = [](const std::vector<TruncSeries>& u) {
        return add(add(u[Spm], u[Ppm]), u[Fpm]);
    };
    sys.rules[Mpp] = [](const std::vector<TruncSeries>& u) { return u[Spp]; };
    sys.rules[Mmm] = [](const std::vector<TruncSeries>& u) { return u[Smm]; };
    sys.rules[Pmp] = parallel_rule(Fmp);
    sys.rules[Ppm] = parallel_rule(Fpm);
    sys.rules[Spp] = series_rule(Mmp, Mpp, Mpp, Mpm, Spp, Spm);
    sys.rules[Smm] = series_rule(Mmm, Mpm, Mmm, Mmp, Smm, Smp);
    sys.rules[Smp] = series_rule(Mpp, Mmp, Mmm, Mmp, Smm, Smp);
    sys.rules[Spm] = series_rule(Mmm, Mpm, Mpp, Mpm, Spp, Spm);
    sys.rules[Fmp] = chain_rule(Fmp);
    sys.rules[Fpm] = chain_rule(Fpm);

    auto sol = solve_fixpoint(sys, FixpointOptions{.order_gain_per_pass = 1});
    detail::check_odd_support(sol[M], "solve_minimal");
    detail::check_equal(sol[Mmp], sol[Mpm], "solve_minimal M-+/M+-");
    detail::check_equal(sol[Fmp], sol[Fpm], "solve_minimal F-+/F+-");
    detail::check_equal(sol[Mpp], sol[Mmm], "solve_minimal M++/M--");
    detail::check_equal(sol[Spp], sol[Smm], "solve_minimal S++/S--");
    TruncSeries plus(n);
    for (std::size_t k = 1; k <= n; ++k) plus.at(k) = sol[M][k - 1];
    counting_coefficients(plus, "M1plus");
    return {MapFamily::minimal, n, sys.names, std::move(sol), std::move(plus)};
}

/// Rooted diagrams of the unknot; plus_series = z*M2. The loop classes
/// (written L+/L- where they enter M-+/M+-) coincide with U+/U-; each is
/// 2z + 2z^2 M2 so that the pasted submap's two host loop maps are counted
/// (validated against the elimination identity and the direct enumeration).
inline MapGrammarSolution solve_unknot(std::size_t n) {
    enum { M, Mpp, Mpm, Mmp, Mmm, Spp, Spm, Smp, Smm,
           Ppp, Ppm, Pmp, Pmm, Fpp, Fpm, Fmp, Fmm, Up, Um };
    GrammarSystem sys;
    sys.order = n;
    sys.names = {"M2",  "M++", "M+-", "M-+", "M--", "S++", "S+-", "S-+", "S--",
                 "P++", "P+-", "P-+", "P--", "F++", "F+-", "F-+", "F--", "U+", "U-"};
    auto z = [n](std::size_t k) { return TruncSeries::monomial(Rat(1), k, n); };
    const TruncSeries T1 = build_Tr(1, n);
    const TruncSeries T3 = build_Tr(3, n);
    auto series_rule = [z](int ma, int mb, int mc, int md, int sa, int sb) {
        return [=](const std::vector<TruncSeries>& u) {
            return mul(mul(z(1), add(u[ma], u[mb])),
                       sub(add(u[mc], u[md]), add(u[sa], u[sb])));
        };
    };
    auto loop_rule = [z](const std::vector<TruncSeries>& u) {
        return add(scale(2, z(1)), scale(2, mul(z(2), u[M])));
    };
    auto parallel_rule = [z](int f) {
        return [=](const std::vector<TruncSeries>& u) {
            return mul(z(1), mul(u[f], u[M]));
        };
    };
    auto chain_outer = [z](const std::vector<TruncSeries>& u, const TruncSeries& t) {
        TruncSeries w = add(z(1), mul(z(2), u[M]));
        TruncSeries w2 = mul(w, w);
        return mul(mul(z(1), w2), compose(t, w2));
    };
    sys.rules.resize(19);
    sys.rules[M] = [](const std::vector<TruncSeries>& u) {
        return add(add(u[Mpp], u[Mpm]), add(u[Mmp], u[Mmm]));
    };
    sys.rules[Mpp] = [](const std::vector<TruncSeries>& u) {
        return add(u[Spp], add(u[Ppp], u[Fpp]));
    };
    sys.rules[Mmp] = [](const std::vector<TruncSeries>& u) {
        return add(add(u[Smp], u[Pmp]), add(u[Fmp], u[Up]));
    };
    sys.rules[Mpm] = [](const std::vector<TruncSeries>& u) {
        return add(add(u[Spm], u[Ppm]), add(u[Fpm], u[Um]));
    };
    sys.rules[Mmm] = [](const std::vector<TruncSeries>& u) {
        return add(u[Smm], add(u[Pmm], u[Fmm]));
    };
    sys.rules[Up] = loop_rule;
    sys.rules[Um] = loop_rule;
    sys.rules[Ppp] = parallel_rule(Fpp);
    sys.rules[Ppm] = parallel_rule(Fpm);
    sys.rules[Pmp] = parallel_rule(Fmp);
    sys.rules[Pmm] = parallel_rule(Fmm);
    sys.rules[Spp] = series_rule(Mmp, Mpp, Mpp, Mpm, Spp, Spm);
    sys.rules[Smp] = series_rule(Mpp, Mmp, Mmm, Mmp, Smm, Smp);
    sys.rules[Spm] = series_rule(Mmm, Mpm, Mpp, Mpm, Spp, Spm);
    sys.rules[Smm] = series_rule(Mmm, Mpm, Mmm, Mmp, Smm, Smp);
    sys.rules[Fmp] = [chain_outer, T1](const std::vector<TruncSeries>& u) {
        return scale(4, chain_outer(u, T1));
    };
    sys.rules[Fpm] = sys.rules[Fmp];
    sys.rules[Fpp] = [chain_outer, T1, T3](const std::vector<TruncSeries>& u) {
        return scale(2, add(chain_outer(u, T1), chain_outer(u, T3)));
    };
    sys.rules[Fmm] = sys.rules[Fpp];

    auto sol = solve_fixpoint(sys, FixpointOptions{.order_gain_per_pass = 1});
    detail::check_odd_support(sol[M], "solve_unknot");
    detail::check_equal(sol[Mmp], sol[Mpm], "solve_unknot M-+/M+-");
    detail::check_equal(sol[Fmp], sol[Fpm], "solve_unknot F-+/F+-");
    detail::check_equal(sol[Fpp], sol[Fmm], "solve_unknot F++/F--");
    detail::check_equal(sol[Mpp], sol[Mmm], "solve_unknot M++/M--");
    TruncSeries plus(n);
    for (std::size_t k = 1; k <= n; ++k) plus.at(k) = sol[M][k - 1];
    counting_coefficients(plus, "M2plus");
    return {MapFamily::unknot, n, sys.names, std::move(sol), std::move(plus)};
}

inline MapGrammarSolution solve_family(MapFamily f, std::size_t n) {
    switch (f) {
        case MapFamily::all: return solve_all(n);
        case MapFamily::minimal: return solve_minimal(n);
        case MapFamily::unknot: return solve_unknot(n);
    }
    throw std::invalid_argument("solve_family: bad family");
}

/// One monomial c * z^i * y^j * t of an elimination polynomial, where t is
/// 1, t1 or t3.
struct ElimTerm {
    long coeff;
    unsigned zdeg;
    unsigned ydeg;
    int tvar; // 0 none, 1 -> t1, 3 -> t3
};

inline const std::vector<ElimTerm>& elimination_terms(MapFamily f) {
    static const std::vector<ElimTerm> p_all = {
        {1, 11, 6, 0}, {6, 10, 5, 0},  {15, 9, 4, 0}, {-1, 7, 4, 0}, {20, 8, 3, 0},
        {-4, 6, 3, 0}, {15, 7, 2, 0},  {1, 4, 3, 0},  {-6, 5, 2, 0}, {6, 6, 1, 0},
        {4, 3, 2, 0},  {-4, 4, 1, 0},  {1, 5, 0, 0},  {5, 2, 1, 0},  {-1, 3, 0, 0},
        {-1, 0, 1, 0}, {2, 1, 0, 0}};
    static const std::vector<ElimTerm> p_minimal = {
        {2, 11, 6, 0}, {12, 10, 5, 0}, {30, 9, 4, 0}, {2, 7, 4, 0}, {40, 8, 3, 0},
        {8, 6, 3, 0},  {30, 7, 2, 0},  {1, 4, 3, 0},  {12, 5, 2, 0}, {12, 6, 1, 0},
        {2, 3, 2, 0},  {8, 4, 1, 0},   {2, 5, 0, 0},  {1, 2, 1, 0},  {2, 3, 0, 0},
        {-1, 0, 1, 0}};
    static const std::vector<ElimTerm> p_unknot = {
        {12, 7, 4, 1}, {4, 7, 4, 3},  {48, 6, 3, 1}, {16, 6, 3, 3}, {72, 5, 2, 1},
        {24, 5, 2, 3}, {48, 4, 1, 1}, {16, 4, 1, 3}, {12, 3, 0, 1}, {4, 3, 0, 3},
        {4, 3, 2, 0},  {8, 2, 1, 0},  {4, 1, 0, 0},  {-1, 0, 1, 0}};
    switch (f) {
        case MapFamily::all: return p_all;
        case MapFamily::minimal: return p_minimal;
        case MapFamily::unknot: return p_unknot;
    }
    throw std::invalid_argument("elimination_terms: bad family");
}

struct EliminationCheck {
    bool ok;
    std::size_t verified_order;
    std::optional<std::size_t> first_bad_exponent;
};

/// Substitutes the solved series (and, for the unknot family, T1/T3 at
/// (z+z^2 M2)^2) into the elimination polynomial; the result must vanish
/// identically mod z^{N+1}.
inline EliminationCheck check_elimination(const MapGrammarSolution& sol) {
    const std::size_t n = sol.order;
    const TruncSeries& y = sol.unknowns[0];
    TruncSeries t1 = TruncSeries::zero(n), t3 = TruncSeries::zero(n);
    if (sol.family == MapFamily::unknot) {
        TruncSeries w = add(TruncSeries::monomial(Rat(1), 1, n),
                            mul(TruncSeries::monomial(Rat(1), 2, n), y));
        TruncSeries w2 = mul(w, w);
        t1 = compose(build_Tr(1, n), w2);
        t3 = compose(build_Tr(3, n), w2);
    }
    // powers of y on demand
    std::vector<TruncSeries> ypow{TruncSeries::one(n)};
    auto ypower = [&](unsigned j) -> const TruncSeries& {
        while (ypow.size() <= j) ypow.push_back(mul(ypow.back(), y));
        return ypow[j];
    };
    TruncSeries acc(n);
    for (const ElimTerm& t : elimination_terms(sol.family)) {
        TruncSeries term = scale(Rat(t.coeff),
                                 mul(TruncSeries::monomial(Rat(1), t.zdeg, n), ypower(t.ydeg)));
        if (t.tvar == 1) term = mul(term, t1);
        if (t.tvar == 3) term = mul(term, t3);
        acc = add(acc, term);
    }
    for (std::size_t i = 0; i <= n; ++i)
        if (acc[i] != 0) return {false, n, i};
    return {true, n, std::nullopt};
}

} // namespace k4links
