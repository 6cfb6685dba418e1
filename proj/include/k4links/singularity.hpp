#pragma once

#include "k4links/jet.hpp"
#include "k4links/link_series.hpp"
#include "k4links/map_series.hpp"
#include "k4links/real.hpp"
#include "k4links/series.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k4links {

/// Shape of a coefficient asymptotic c * n^{poly_exponent} * exp_base^n, with
/// optional parity restriction, per-size crossing factor and 1/(2n) unrooting
/// prefactor.
struct GrowthDescription {
    Real poly_exponent;
    Real exp_base;
    int period = 1;
    Real crossing_base = Real(1);
    bool unrooted_prefactor = false;
    Real secondary_constant = Real(0); // odd-index constant when both parities occur
    std::string note;
};

/// Dominant-singularity data of one generating function branch y(z):
/// location rho, value, singular exponent alpha, Z-expansion coefficients
/// (Z = sqrt(1 - z/rho)) and the transfer constant f_{2k+1}/Gamma(-alpha).
struct SingularData {
    Real rho;
    Real y_at_rho;
    int alpha_num = 1;
    int alpha_den = 2;
    std::vector<Real> expansion;
    Real transfer_constant;
    GrowthDescription growth;
};

/// Bivariate polynomial with exact rational coefficients, evaluated with all
/// partials up to second order.
struct Poly2 {
    std::vector<ElimTerm> terms;

    Jet2 eval(const Real& z, const Real& y) const {
        Jet2 acc = Jet2::constant(Real(0));
        const Jet2 jz = Jet2::var_z(z);
        const Jet2 jy = Jet2::var_y(y);
        for (const ElimTerm& t : terms) {
            if (t.tvar != 0)
                throw std::invalid_argument("Poly2: t-variables not allowed here");
            acc = acc + pow_int(jz, t.zdeg) * pow_int(jy, t.ydeg) * Real(t.coeff);
        }
        return acc;
    }
};

using BivarFn = std::function<Jet2(const Real&, const Real&)>;

namespace detail {

/// Seed estimates from the exact series of the branch: the singularity from
/// same-parity coefficient ratios, the branch value from a partial sum plus
/// a crude tail allowance.
inline std::pair<Real, Real> seed_from_hint(const TruncSeries& hint) {
    std::size_t n2 = hint.order() + 1, n1 = 0;
    for (std::size_t i = hint.order() + 1; i-- > 0;) {
        if (hint[i] != 0) {
            if (n2 > hint.order()) {
                n2 = i;
            } else if ((n2 - i) % 2 == 0) {
                n1 = i;
                break;
            }
        }
    }
    if (n2 > hint.order() || n1 == 0)
        throw std::invalid_argument("seed_from_hint: hint series too short");
    const Real ratio = to_real(hint[n1]) / to_real(hint[n2]);
    const Real step = Real(n2 - n1);
    Real rho0 = pow(ratio, 1 / step);
    Real partial = 0;
    for (std::size_t i = hint.order() + 1; i-- > 0;)
        partial = partial * rho0 + to_real(hint[i]);
    const Real tail = to_real(hint[n2]) * pow(rho0, static_cast<int>(n2)) *
                      sqrt(Real(n2)) * 2;
    return {rho0, partial + tail};
}

inline Real partial_sum_at(const TruncSeries& s, const Real& x) {
    Real acc = 0;
    for (std::size_t i = s.order() + 1; i-- > 0;) acc = acc * x + to_real(s[i]);
    return acc;
}

} // namespace detail

/// Solves {p = 0, p_y = 0} by damped two-variable Newton seeded from the
/// exact series of the branch, and expands the square-root singularity:
/// y = s - gamma Z + O(Z^2) with gamma = sqrt(2 rho p_z / p_yy).
inline SingularData algebraic_singularity(const BivarFn& fn, const TruncSeries& branch_hint) {
    auto [z, y] = detail::seed_from_hint(branch_hint);
    const Real tol = newton_tolerance();
    bool converged = false;
    for (int it = 0; it < 300 && !converged; ++it) {
        Jet2 p = fn(z, y);
        // residual (p, p_y), Jacobian [[p_z, p_y], [p_zy, p_yy]]
        const Real r0 = p.v, r1 = p.y;
        const Real det = p.z * p.yy - p.y * p.zy;
        if (det == 0) throw std::runtime_error("algebraic_singularity: singular Jacobian");
        Real dz = (-r0 * p.yy + r1 * p.y) / det;
        Real dy = (-p.z * r1 + p.zy * r0) / det;
        const Real res_before = abs(r0) + abs(r1);
        Real lambda = 1;
        for (int halvings = 0; halvings < 40; ++halvings) {
            const Real zn = z + lambda * dz, yn = y + lambda * dy;
            bool ok = zn > 0 && zn < 1;
            if (ok) {
                try {
                    Jet2 pn = fn(zn, yn);
                    ok = abs(pn.v) + abs(pn.y) <= res_before || res_before < tol;
                } catch (const std::domain_error&) {
                    ok = false;
                }
            }
            if (ok) {
                z = zn;
                y = yn;
                break;
            }
            lambda /= 2;
        }
        converged = abs(lambda * dz) + abs(lambda * dy) < tol;
    }
    if (!converged)
        throw std::runtime_error("algebraic_singularity: Newton did not converge");

    Jet2 p = fn(z, y);
    if (abs(p.v) + abs(p.y) > pow(Real(10), -(static_cast<int>(kRealDigits) - 10)))
        throw std::runtime_error("algebraic_singularity: residual above tolerance");
    if (!(z > 0 && z < 1) || !(y > 0))
        throw std::runtime_error("algebraic_singularity: root outside the admissible region");
    // wrong-branch detection: the partial sums of the hint increase to y(rho)
    const Real partial = detail::partial_sum_at(branch_hint, z);
    if (partial > y * (1 + pow(Real(10), -30)) || y > 2 * partial + 1)
        throw std::runtime_error("algebraic_singularity: branch value inconsistent with series");

    const Real ratio = 2 * z * p.z / p.yy;
    if (!(ratio > 0))
        throw std::runtime_error("algebraic_singularity: fold has wrong orientation");
    const Real gamma = sqrt(ratio);

    SingularData out;
    out.rho = z;
    out.y_at_rho = y;
    out.alpha_num = 1;
    out.alpha_den = 2;
    out.expansion = {y, -gamma};
    out.transfer_constant = -gamma / gamma_real(Real(-0.5));
    out.growth.poly_exponent = Real(-3) / 2;
    out.growth.exp_base = 1 / z;
    return out;
}

inline SingularData algebraic_singularity(const Poly2& p, const TruncSeries& branch_hint) {
    return algebraic_singularity(
        [&p](const Real& z, const Real& y) { return p.eval(z, y); }, branch_hint);
}

/// T_r evaluated through its algebraic closed form: with B the Catalan
/// series B(w) = (1 - sqrt(1-4w))/(2w), T_r(x) = x^r B(x^2)^r / sqrt(1-4x^2).
inline Jet2 torus_split_closed_form(unsigned r, const Jet2& x) {
    const Jet2 x2 = x * x;
    const Jet2 s = sqrt(Jet2::constant(Real(1)) + x2 * Real(-4));
    const Jet2 b = (Jet2::constant(Real(1)) - s) / (x2 * Real(2));
    return pow_int(x, r) * pow_int(b, r) / s;
}

/// The unknot family's defining function: the elimination polynomial with t1
/// and t3 replaced by their closed forms at (z + z^2 y)^2.
inline Jet2 unknot_defining_function(const Real& zv, const Real& yv) {
    const Jet2 z = Jet2::var_z(zv);
    const Jet2 y = Jet2::var_y(yv);
    const Jet2 w = z + z * z * y;
    const Jet2 t1 = torus_split_closed_form(1, w);
    const Jet2 t3 = torus_split_closed_form(3, w);
    Jet2 acc = Jet2::constant(Real(0));
    for (const ElimTerm& t : elimination_terms(MapFamily::unknot)) {
        Jet2 term = pow_int(z, t.zdeg) * pow_int(y, t.ydeg) * Real(t.coeff);
        if (t.tvar == 1) term = term * t1;
        if (t.tvar == 3) term = term * t3;
        acc = acc + term;
    }
    return acc;
}

/// Asymptotics of one rooted-diagram family's plus series. For even n,
/// [z^n]plus ~ (constant/Gamma(-1/2)) n^{-3/2} crossing^n base^n; the
/// constant folds in the root-edge shift and the two conjugate singularities.
struct MapAsymptotics {
    MapFamily family;
    SingularData data;
    Real constant;
    GrowthDescription growth;
};

inline MapAsymptotics map_asymptotics(MapFamily f, const TruncSeries& branch_hint) {
    SingularData d;
    if (f == MapFamily::unknot) {
        d = algebraic_singularity(
            [](const Real& z, const Real& y) { return unknot_defining_function(z, y); },
            branch_hint);
    } else {
        d = algebraic_singularity(Poly2{elimination_terms(f)}, branch_hint);
    }
    MapAsymptotics out;
    out.family = f;
    out.data = d;
    out.constant = 2 * d.rho * d.expansion[1];
    out.growth.poly_exponent = Real(-3) / 2;
    out.growth.exp_base = 1 / d.rho;
    out.growth.period = 2;
    out.growth.crossing_base = f == MapFamily::all ? sqrt(Real(2)) : Real(1);
    out.growth.note = "even sizes only";
    return out;
}

/// Unrooted diagram counts: the rooted asymptotic divided by 2n; the
/// constants are unchanged.
inline MapAsymptotics unrooted_constants(MapFamily f, const TruncSeries& branch_hint) {
    MapAsymptotics a = map_asymptotics(f, branch_hint);
    a.growth.unrooted_prefactor = true;
    a.growth.note = "even sizes only; divide the rooted form by 2n";
    return a;
}

/// Singularity data for the link-type series Lbar, Lhat and L.
struct LinkAsymptotics {
    Real rho; // common singularity of Lbar and Lhat; L is singular at sqrt(rho)
    SingularData F, Lbar, Lhat, L;
    Real L_even_constant, L_odd_constant;
};

namespace detail {

/// xi at a jet argument: xi(z) = f(z) exp(sum_{k>=2} F(z^k)/k) with f = E*K.
/// The k-tail stops when a term drops below the Newton tolerance divided by
/// 100 (|z|^k shrinks geometrically).
inline Jet xi_jet(const Jet& z, const TruncSeries& f, const TruncSeries& F) {
    Jet fv = eval_series(f, z);
    Jet s(z.order());
    const Real cut = newton_tolerance() / 100;
    for (std::size_t k = 2; k <= 500; ++k) {
        Jet t = eval_series(F, pow_int(z, k)) * (Real(1) / Real(static_cast<unsigned>(k)));
        s = s + t;
        if (abs(t[0]) < cut) break;
    }
    return fv * exp(s);
}

} // namespace detail

/// Full singularity analysis of the link-type generating functions. The
/// exact series are used at an order where every evaluated tail is far below
/// the Newton tolerance (coeffic't growth rho^{-n} against arguments <= rho^2,
/// and subexponential growth of f against the argument rho).
inline LinkAsymptotics links_singularity(std::size_t series_order = 320) {
    const LinkSeriesBundle bundle = build_link_series(series_order);
    const TruncSeries f = mul(bundle.E, bundle.K);

    // rho solves xi(rho) e = 1, i.e. log xi + 1 = 0 (F(rho) = 1 at the fold).
    Real rho = to_real(bundle.F[series_order - 1]) / to_real(bundle.F[series_order]);
    {
        const Real tol = newton_tolerance();
        bool converged = false;
        for (int it = 0; it < 100 && !converged; ++it) {
            Jet z = Jet::variable(rho, 1);
            Jet xi = detail::xi_jet(z, f, bundle.F);
            const Real g = log(xi[0]) + 1;
            const Real gp = xi[1] / xi[0];
            const Real step = g / gp;
            rho -= step;
            converged = abs(step) < tol;
        }
        if (!converged)
            throw std::runtime_error("links_singularity: Newton on rho did not converge");
    }

    // Singular expansion of F at rho in Z = sqrt(1 - z/rho): F solves
    // Phi(z, y) = y - xi(z) e^y = 0 with Phi_y = 0 at the fold, F(rho) = 1.
    constexpr std::size_t kOrd = 6;
    Jet zj(kOrd);
    zj.at(0) = rho;
    zj.at(2) = -rho;
    const Jet xij = detail::xi_jet(zj, f, bundle.F);
    const Real xi_prime = -xij[2] / rho;
    const Real phi_z = -xi_prime * exp(Real(1));
    const Real phi_yy = -1; // -xi(rho) e^{F(rho)} = -1
    std::vector<Real> y(kOrd + 1, Real(0));
    y[0] = 1;
    y[1] = -sqrt(2 * rho * phi_z / phi_yy);
    auto phi = [&](const std::vector<Real>& coeffs) {
        Jet yj(kOrd);
        for (std::size_t i = 0; i <= kOrd; ++i) yj.at(i) = coeffs[i];
        return yj - xij * exp(yj);
    };
    for (std::size_t k = 2; k < kOrd; ++k) {
        Jet r = phi(y);
        y[k] = -r[k + 1] / (phi_yy * y[1]);
    }
    {
        Jet r = phi(y);
        Real worst = 0;
        for (std::size_t i = 0; i <= kOrd; ++i) worst = std::max(worst, abs(r[i]));
        if (worst > pow(Real(10), -(static_cast<int>(kRealDigits) - 12)))
            throw std::runtime_error("links_singularity: expansion residual too large");
    }

    Jet Fj(kOrd);
    for (std::size_t i = 0; i <= kOrd; ++i) Fj.at(i) = y[i];

    // Lbar via the dissymmetry combination; Lhat as the multiset of
    // nontrivial Lbar objects, its second factor analytic at rho.
    const Jet Ej = eval_series(bundle.E, zj);
    const Jet Td = Fj / Ej;
    const Jet Td2 = eval_series(bundle.T_pointed, zj * zj);
    const Jet Lbar_j = Td + Ej * (Real(1) / 2) * (Td2 - Td * Td);
    Jet tail(kOrd);
    {
        const Real cut = newton_tolerance() / 100;
        for (std::size_t k = 2; k <= 500; ++k) {
            Jet t = (eval_series(bundle.Lbar, pow_int(zj, k)) - Real(1)) *
                    (Real(1) / Real(static_cast<unsigned>(k)));
            tail = tail + t;
            if (abs(t[0]) < cut) break;
        }
    }
    const Jet Lhat_j = exp(Lbar_j - Real(1)) * exp(tail);

    const Real gamma32 = gamma_real(Real(-1.5));
    auto make = [&](const Jet& j, const char* which) {
        if (abs(j[1]) > pow(Real(10), -(static_cast<int>(kRealDigits) - 20)))
            throw std::runtime_error(std::string("links_singularity: Z^1 coefficient of ") +
                                     which + " does not vanish");
        SingularData d;
        d.rho = rho;
        d.y_at_rho = j[0];
        d.alpha_num = 3;
        d.alpha_den = 2;
        d.expansion = {j[0], j[1], j[2], j[3], j[4]};
        d.transfer_constant = j[3] / gamma32;
        d.growth.poly_exponent = Real(-5) / 2;
        d.growth.exp_base = 1 / rho;
        return d;
    };

    LinkAsymptotics out;
    out.rho = rho;
    out.F.rho = rho;
    out.F.y_at_rho = y[0];
    out.F.alpha_num = 1;
    out.F.alpha_den = 2;
    out.F.expansion.assign(y.begin(), y.begin() + 5);
    out.F.transfer_constant = y[1] / gamma_real(Real(-0.5));
    out.F.growth.poly_exponent = Real(-3) / 2;
    out.F.growth.exp_base = 1 / rho;
    out.Lbar = make(Lbar_j, "Lbar");
    out.Lhat = make(Lhat_j, "Lhat");

    // L(z) = Lhat(z^2)/(1-z) - 1: singular at +-sqrt(rho); even part carries
    // 2^{3/2} Lhat_3 / (1-rho) at each, doubled on the even subsequence.
    const Real lhat3 = Lhat_j[3];
    const Real f3 = pow(Real(2), Real(1.5)) * lhat3 / (1 - rho);
    out.L_even_constant = 2 * f3;
    out.L_odd_constant = out.L_even_constant * sqrt(rho);
    SingularData L;
    L.rho = sqrt(rho);
    L.y_at_rho = Lhat_j[0] / (1 - sqrt(rho)) - 1;
    L.alpha_num = 3;
    L.alpha_den = 2;
    L.expansion = {L.y_at_rho, Real(0), Real(0), f3};
    L.transfer_constant = out.L_even_constant / gamma32;
    L.growth.poly_exponent = Real(-5) / 2;
    L.growth.exp_base = 1 / sqrt(rho);
    L.growth.period = 2;
    L.growth.secondary_constant = out.L_odd_constant / gamma32;
    L.growth.note = "even and odd sizes carry distinct constants";
    out.L = L;
    return out;
}

/// Closed-form knot asymptotics plus an empirical ratio table computed from
/// the exact distinct-parts product.
struct KnotAsymptotics {
    Real c, alpha, beta;
    std::vector<std::pair<std::size_t, Real>> ratios;
};

inline KnotAsymptotics knot_asymptotics(std::size_t n_max,
                                        std::vector<std::size_t> checkpoints = {}) {
    if (n_max < 100) throw std::invalid_argument("knot_asymptotics: n_max must be >= 100");
    KnotAsymptotics out;
    const Real pi = pi_real();
    out.c = pi * pi / 4 * pow(Real(6), Real(-1.25));
    out.alpha = Real(-7) / 4;
    out.beta = sqrt(2 * pi * pi / 3);
    if (checkpoints.empty()) {
        for (std::size_t n = 100; n <= n_max; n *= 2) checkpoints.push_back(n);
        if (checkpoints.back() != n_max) checkpoints.push_back(n_max);
    }
    const std::vector<Int> p = distinct_parts_counts(n_max);
    for (std::size_t n : checkpoints) {
        if (n < 2 || n > n_max) continue;
        const Int kn = p[n] - 2 * p[n - 1] + p[n - 2];
        const Real pred = out.c * pow(Real(n), out.alpha) * exp(out.beta * sqrt(Real(n)));
        out.ratios.emplace_back(n, to_real(kn) / pred);
    }
    return out;
}

} // namespace k4links
