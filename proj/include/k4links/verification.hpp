#pragma once

#include "k4links/diagram_oracle.hpp"
#include "k4links/link_series.hpp"
#include "k4links/map_series.hpp"
#include "k4links/singularity.hpp"
#include "k4links/tree_oracle.hpp"

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace k4links {

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

namespace detail {

inline void expect_coeffs(std::vector<Check>& out, const std::string& name,
                          const TruncSeries& s, const std::vector<long long>& expected) {
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (s[i] != Rat(expected[i])) {
            std::ostringstream d;
            d << "coefficient " << i << " is " << s[i] << ", expected " << expected[i];
            out.push_back({name, false, d.str()});
            return;
        }
    }
    out.push_back({name, true, ""});
}

inline std::string real_str(const Real& x, int digits = 12) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

} // namespace detail

/// The displayed expansions, coefficient by coefficient.
inline std::vector<Check> verify_printed_series() {
    std::vector<Check> out;
    detail::expect_coeffs(out, "series K through z^15", build_K(15),
                          {1, 0, 0, 2, 0, 2, 3, 2, 4, 6, 7, 8, 13, 14, 19, 26});
    detail::expect_coeffs(out, "series Lbar through z^12", build_Lbar(12),
                          {1, 0, 1, 2, 3, 4, 9, 12, 26, 40, 82, 136, 280});
    detail::expect_coeffs(out, "series Lhat through z^12", build_Lhat(12),
                          {1, 0, 1, 2, 4, 6, 16, 24, 56, 98, 208, 382, 805});
    detail::expect_coeffs(out, "series L through z^13", build_L(13),
                          {0, 1, 1, 1, 2, 2, 4, 4, 8, 8, 14, 14, 30, 30});
    detail::expect_coeffs(out, "series Mplus through z^14", solve_all(14).plus_series,
                          {0, 0, 4, 0, 36, 0, 432, 0, 5984, 0, 90112, 0, 1432576, 0, 23656960});
    detail::expect_coeffs(out, "series M1plus through z^20", solve_minimal(20).plus_series,
                          {0, 0, 0, 0, 2, 0, 4, 0, 20, 0, 84, 0, 372, 0, 1796, 0, 8516, 0,
                           42340, 0, 211332});
    detail::expect_coeffs(out, "series M2plus through z^16", solve_unknot(16).plus_series,
                          {0, 0, 4, 0, 32, 0, 332, 0, 3968, 0, 51688, 0, 712416, 0, 10214604,
                           0, 150776064});
    return out;
}

/// The three defining polynomials vanish on the solved series mod z^{order+1}.
inline std::vector<Check> verify_polynomials(std::size_t order = 64) {
    std::vector<Check> out;
    for (MapFamily f : {MapFamily::all, MapFamily::minimal, MapFamily::unknot}) {
        const EliminationCheck c = check_elimination(solve_family(f, order));
        std::ostringstream d;
        if (!c.ok) d << "first nonzero exponent " << *c.first_bad_exponent;
        out.push_back({std::string("elimination identity, family ") + family_name(f), c.ok,
                       d.str()});
    }
    return out;
}

/// (1-z)^2 prod (1+z^k)^2 = K(z), coefficientwise.
inline std::vector<Check> verify_partitions(std::size_t order = 500) {
    std::vector<Check> out;
    const TruncSeries K = build_K(order);
    const TruncSeries G = distinct_parts_squared(order);
    TruncSeries onemz(order);
    onemz.at(0) = 1;
    onemz.at(1) = -1;
    const TruncSeries lhs = mul(mul(onemz, onemz), G);
    for (std::size_t i = 0; i <= order; ++i) {
        if (lhs[i] != K[i]) {
            std::ostringstream d;
            d << "coefficient " << i << ": " << lhs[i] << " vs " << K[i];
            out.push_back({"partition identity", false, d.str()});
            return out;
        }
    }
    std::ostringstream d;
    d << "order " << order;
    out.push_back({"partition identity", true, d.str()});
    return out;
}

/// Singularity constants against the 5-digit reference values, relative
/// tolerance 1e-4.
inline std::vector<Check> verify_constants(const LinkAsymptotics* precomputed = nullptr) {
    std::vector<Check> out;
    auto rel_check = [&out](const std::string& name, const Real& got, const char* expect) {
        const Real want(expect);
        const bool ok = abs(got - want) <= abs(want) * pow(Real(10), -4);
        std::string d = "computed " + detail::real_str(got) + ", reference " + expect;
        out.push_back({name, ok, d});
    };

    LinkAsymptotics links = precomputed ? *precomputed : links_singularity();
    rel_check("links rho", links.rho, "0.44074");
    rel_check("Lbar c1", links.Lbar.expansion[3], "23.46469");
    rel_check("Lhat c2", links.Lhat.expansion[3], "58.99565");
    rel_check("Lbar transfer constant", links.Lbar.transfer_constant, "9.92890");
    rel_check("Lhat transfer constant", links.Lhat.transfer_constant, "24.96355");
    rel_check("L even constant", links.L_even_constant, "594.24035");
    rel_check("L odd constant", links.L_odd_constant, "394.50617");

    const KnotAsymptotics knots = knot_asymptotics(100);
    rel_check("knot constant", knots.c, "0.26275");
    rel_check("knot beta", knots.beta, "2.56509");

    const std::size_t hint_order = 64;
    const MapAsymptotics am = map_asymptotics(MapFamily::all, solve_all(hint_order).unknowns[0]);
    rel_check("map family all rho", am.data.rho, "0.31184");
    rel_check("map family all constant", am.constant, "-3.04531");
    const MapAsymptotics a1 =
        map_asymptotics(MapFamily::minimal, solve_minimal(hint_order).unknowns[0]);
    rel_check("map family minimal rho", a1.data.rho, "0.41456");
    rel_check("map family minimal constant", a1.constant, "-1.62846");
    const MapAsymptotics a2 =
        map_asymptotics(MapFamily::unknot, solve_unknot(hint_order).unknowns[0]);
    rel_check("map family unknot rho", a2.data.rho, "0.23626");
    rel_check("map family unknot constant", a2.constant, "-3.39943");
    return out;
}

/// Exhaustive rooted-diagram counts against the plus series, v vertices at
/// a time.
inline std::vector<Check> verify_oracle(int vmax) {
    std::vector<Check> out;
    const std::size_t order = static_cast<std::size_t>(2 * vmax);
    const TruncSeries mp = solve_all(order).plus_series;
    const TruncSeries m1p = solve_minimal(order).plus_series;
    const TruncSeries m2p = solve_unknot(order).plus_series;
    for (int v = 1; v <= vmax; ++v) {
        const OracleCounts c = count_rooted_diagrams(v);
        const std::size_t n = static_cast<std::size_t>(2 * v);
        auto one = [&](const char* what, const Int& got, const Rat& want) {
            std::ostringstream name;
            name << "oracle " << what << " diagrams, " << v << " vertices";
            std::ostringstream d;
            d << "count " << got << ", series " << want;
            out.push_back({name.str(), Rat(got) == want, d.str()});
        };
        one("all", c.all, mp[n]);
        one("minimal", c.minimal, m1p[n]);
        one("unknot", c.unknot, m2p[n]);
    }
    return out;
}

/// Labelled-tree isomorphism classes against the Lbar coefficients.
inline std::vector<Check> verify_trees(int nmax = 12) {
    std::vector<Check> out;
    const TruncSeries lbar = build_Lbar(static_cast<std::size_t>(nmax));
    for (int n = 2; n <= nmax; ++n) {
        const std::size_t got = enumerate_T_trees(n);
        std::ostringstream name, d;
        name << "tree classes of size " << n;
        d << "count " << got << ", series " << lbar[static_cast<std::size_t>(n)];
        out.push_back({name.str(), Rat(static_cast<unsigned long>(got)) ==
                                       lbar[static_cast<std::size_t>(n)],
                       d.str()});
    }
    return out;
}

/// Empirical convergence of the exact coefficients toward the asymptotic
/// forms.
inline std::vector<Check> verify_convergence(const LinkAsymptotics* precomputed = nullptr) {
    std::vector<Check> out;
    const KnotAsymptotics knots = knot_asymptotics(2000, {500, 2000});
    const Real r500 = knots.ratios[0].second;
    const Real r2000 = knots.ratios[1].second;
    {
        const bool ok = abs(r2000 - 1) <= Real("0.10") && abs(r2000 - 1) < abs(r500 - 1);
        std::string d = "ratio(500) = " + detail::real_str(r500, 6) +
                        ", ratio(2000) = " + detail::real_str(r2000, 6);
        out.push_back({"knot coefficient ratio convergence", ok, d});
    }
    {
        LinkAsymptotics links = precomputed ? *precomputed : links_singularity();
        const std::size_t n = 300;
        const TruncSeries lbar = build_Lbar(n);
        const Real pred = links.Lbar.transfer_constant * pow(Real(n), Real(-2.5)) *
                          pow(links.rho, -static_cast<int>(n));
        const Real ratio = to_real(lbar[n]) / pred;
        const bool ok = abs(ratio - 1) <= Real("0.10");
        out.push_back({"Lbar coefficient ratio at n=300", ok,
                       "ratio = " + detail::real_str(ratio, 6)});
    }
    return out;
}

} // namespace k4links
