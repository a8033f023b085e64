// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "gdc/signal.hpp"

#include <algorithm>
#include <cmath>

#include "gdc/combinadic.hpp"
#include "gdc/errors.hpp"

namespace gdc
{

dimming_plan resolve_plan(unsigned n_t, unsigned t, unsigned p, double eta, unsigned n_s)
{
    if (n_t == 0 || t == 0 || p == 0)
        throw config_error("resolve_plan: N_t, T, P must be positive");
    if (!(eta > 0.0) || !(eta <= 1.0))
        throw config_error("resolve_plan: dimming target must lie in (0, 1]");
    const unsigned cells = n_t * t;
    if (n_s == 0 || n_s > cells)
        throw config_error("resolve_plan: N_S must lie in [1, N_t*T]");

    const double eta_e = eta * static_cast<double>(cells) / static_cast<double>(n_s);
    if (eta_e > 1.0 + 1e-12)
        throw infeasible_error("resolve_plan: N_S too small to reach the dimming target");

    // Never allocate more pattern bits than the codebook can index, and
    // never more than the word has.
    const std::uint64_t z_count = binomial(cells, n_s);
    unsigned p1 = 0;
    while (p1 < p && (std::uint64_t{1} << (p1 + 1)) <= z_count)
        ++p1;

    dimming_plan plan;
    plan.n_s = n_s;
    plan.p1 = p1;
    plan.p2 = p - p1;
    plan.m = 1u << plan.p2;
    plan.eta_e = std::min(eta_e, 1.0);
    return plan;
}

ns_range eligible_ns_range(unsigned n_t, unsigned t, double eta)
{
    if (n_t == 0 || t == 0)
        throw config_error("eligible_ns_range: N_t and T must be positive");
    if (!(eta > 0.0) || !(eta <= 1.0))
        throw config_error("eligible_ns_range: dimming target must lie in (0, 1]");
    const unsigned cells = n_t * t;
    // eta * cells may be integral up to roundoff; nudge below before the
    // ceiling so exact products do not lose their own N_S.
    auto lo = static_cast<unsigned>(std::ceil(eta * cells - 1e-9));
    ns_range r;
    r.lo = std::max(1u, lo);
    r.hi = cells;
    return r;
}

constellation optimal_constellation(double eta_e, unsigned m, double i_low, double i_high)
{
    if (!(i_high > i_low))
        throw config_error("optimal_constellation: need i_high > i_low");
    if (m == 0 || (m & (m - 1)) != 0)
        throw config_error("optimal_constellation: PAM order must be a power of two");
    if (!(eta_e > 0.0) || eta_e > 1.0 + 1e-12)
        throw config_error("optimal_constellation: eta_e must lie in (0, 1]");
    eta_e = std::min(eta_e, 1.0);

    const double mean = i_low + eta_e * (i_high - i_low);

    constellation c;
    c.mean = mean;
    if (m == 1)
    {
        // Single level: the mean itself, no spacing to optimise.
        c.spacing = 0.0;
        c.levels = {mean};
        return c;
    }

    // Equiprobable levels i_base + lambda*k, k = 1..M, have mean
    // i_base + lambda*(M+1)/2. Growing lambda stops when either the lowest
    // level hits i_low or the highest hits i_high, whichever is nearer to
    // the mean. At full drive (eta_e = 1) the range collapses and all
    // levels sit at i_high.
    const double lambda =
        2.0 * std::min(mean - i_low, i_high - mean) / static_cast<double>(m - 1);
    const double base = mean - lambda * static_cast<double>(m + 1) / 2.0;
    c.spacing = lambda;
    c.levels.resize(m);
    for (unsigned k = 1; k <= m; ++k)
        c.levels[k - 1] = lambda * static_cast<double>(k) + base;
    return c;
}

} // namespace gdc
