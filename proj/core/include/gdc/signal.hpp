// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <vector>

namespace gdc
{

// How a P-bit word and a dimming target split across the two signal
// dimensions: p1 bits choose the activation pattern, p2 bits choose one of
// M = 2^p2 intensity levels, and eta_e is the per-cell dimming factor that
// the level set must realise on average.
struct dimming_plan
{
    unsigned n_s = 0;
    unsigned p1 = 0;
    unsigned p2 = 0;
    unsigned m = 1;       // PAM order, 2^p2
    double eta_e = 0.0;   // electrical dimming of active cells, in (0, 1]
};

// p1 is the pattern-index capacity floor(log2 C(N_t*T, N_S)), capped at P
// (a codebook never needs more than 2^P patterns); eta_e follows from the
// identity eta = (N_S / (N_t*T)) * eta_e.
// Throws infeasible_error when eta_e would exceed 1 (the requested dimming
// cannot be reached with N_S active cells), config_error on bad domains.
dimming_plan resolve_plan(unsigned n_t, unsigned t, unsigned p, double eta, unsigned n_s);

// Active-cell counts able to reach the target dimming level:
// ceil(eta * N_t * T) .. N_t * T, with a small epsilon guard so integral
// products do not round up spuriously.
struct ns_range
{
    unsigned lo = 0;
    unsigned hi = 0;
};
ns_range eligible_ns_range(unsigned n_t, unsigned t, double eta);

// Uniformly spaced M-ary intensity levels inside the LED dynamic range
// [i_low, i_high], with mean fixed by eta_e. The spacing is the largest
// permitted by whichever range edge the mean sits closer to, which is the
// error-rate optimal choice for equiprobable levels.
struct constellation
{
    std::vector<double> levels; // ascending, size M
    double spacing = 0.0;       // lambda, distance between adjacent levels
    double mean = 0.0;          // average drive current, i_low + eta_e*(i_high - i_low)
};

constellation optimal_constellation(double eta_e, unsigned m, double i_low, double i_high);

} // namespace gdc
