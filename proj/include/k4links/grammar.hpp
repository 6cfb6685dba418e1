#pragma once

#include "k4links/series.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k4links {

/// A system of series-valued unknowns with one update rule per unknown.
///
/// Rules must gain at least one correct coefficient per pass: every rule
/// evaluated at the all-zero assignment must have valuation >= 1. That is
/// checked before solving and guarantees termination within order+1 passes.
struct GrammarSystem {
    std::size_t order;
    std::vector<std::string> names;
    std::vector<std::function<TruncSeries(const std::vector<TruncSeries>&)>> rules;
};

struct FixpointOptions {
    /// Coefficients gained per pass; used to ramp the working truncation
    /// order so early passes do not spend time on coefficients that cannot
    /// yet be correct. 0 disables the ramp.
    std::size_t order_gain_per_pass = 0;
};

inline std::vector<TruncSeries> solve_fixpoint(const GrammarSystem& sys,
                                               FixpointOptions opts = {}) {
    const std::size_t n = sys.order;
    if (sys.rules.size() != sys.names.size())
        throw std::invalid_argument("solve_fixpoint: names/rules size mismatch");

    std::vector<TruncSeries> zero_state(sys.rules.size(), TruncSeries::zero(n));
    for (std::size_t i = 0; i < sys.rules.size(); ++i) {
        TruncSeries r = sys.rules[i](zero_state);
        if (r[0] != 0)
            throw std::invalid_argument("solve_fixpoint: rule for '" + sys.names[i] +
                                        "' has valuation 0 at the zero assignment");
    }

    std::vector<TruncSeries> state = zero_state;
    const std::size_t gain = opts.order_gain_per_pass;
    const std::size_t ramp_passes = gain ? (n + gain - 1) / gain : 0;
    const std::size_t max_passes = ramp_passes + n + 2;

    for (std::size_t pass = 0; pass < max_passes; ++pass) {
        const std::size_t work_order =
            gain ? std::min(n, gain * (pass + 1) + 1) : n;
        std::vector<TruncSeries> next;
        next.reserve(state.size());
        bool full = work_order == n;
        bool changed = false;
        for (std::size_t i = 0; i < sys.rules.size(); ++i) {
            TruncSeries r = sys.rules[i](state);
            if (r.order() < n)
                throw std::invalid_argument("solve_fixpoint: rule for '" + sys.names[i] +
                                            "' produced a series of insufficient order");
            if (r.order() > n) r = r.truncated(n);
            if (!full) {
                for (std::size_t j = work_order + 1; j <= n; ++j) r.at(j) = 0;
            }
            if (r != state[i]) changed = true;
            next.push_back(std::move(r));
        }
        state = std::move(next);
        if (full && !changed) return state;
    }
    throw std::runtime_error("solve_fixpoint: no stabilization after " +
                             std::to_string(max_passes) +
                             " passes (ill-formed system)");
}

} // namespace k4links
