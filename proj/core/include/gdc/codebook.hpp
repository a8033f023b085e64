// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "gdc/combinadic.hpp"

namespace gdc
{

// One on-off activation pattern of an N_t x T space-time matrix with
// exactly N_S active cells. Cells are numbered row-major: cell c drives
// LED c / T during slot c % T.
struct activation_pattern
{
    std::uint64_t z = 0;               // combinadic rank of the cell set
    std::vector<unsigned> cells;       // active cells, strictly descending
    std::vector<unsigned> led_counts;  // active slots per LED, length N_t
};

enum class selection_method
{
    sequential,
    incremental,
    exhaustive,
};

// An ordered set of 2^p1 activation patterns. Pattern order (ascending z)
// defines the bit labelling used by the modulator.
struct codebook
{
    unsigned n_t = 0;
    unsigned t = 0;
    unsigned n_s = 0;
    unsigned p1 = 0;
    selection_method method = selection_method::sequential;
    std::vector<activation_pattern> patterns;
    std::vector<std::uint64_t> led_totals; // per-LED activations summed over patterns

    std::size_t size() const { return patterns.size(); }
};

const char *selection_method_name(selection_method m);
selection_method selection_method_from_name(const std::string &name);

// All C(N_t*T, N_S) patterns in ascending rank order.
std::vector<activation_pattern> enumerate_patterns(unsigned n_t, unsigned t, unsigned n_s);

// Dense 0/1 matrix view of a pattern.
Eigen::MatrixXd pattern_matrix(const activation_pattern &p, unsigned n_t, unsigned t);

// First 2^p1 patterns in rank order. Fast but indifferent to how evenly
// the LEDs end up used.
codebook select_sequential(unsigned n_t, unsigned t, unsigned n_s, unsigned p1);

// Greedy balanced selection: per-LED quota fill over the rank-ordered
// pattern list, then add/remove compensation until exactly 2^p1 patterns
// remain. Aims to equalise how often each LED is lit across the codebook.
codebook select_incremental(unsigned n_t, unsigned t, unsigned n_s, unsigned p1);

// True variance-minimising search over all pattern subsets of size 2^p1.
// Only viable for toy instances; throws resource_error if the subset count
// exceeds max_subsets.
codebook select_exhaustive(unsigned n_t, unsigned t, unsigned n_s, unsigned p1,
                           std::uint64_t max_subsets = 1000000);

codebook select_patterns(selection_method m, unsigned n_t, unsigned t, unsigned n_s, unsigned p1,
                         std::uint64_t exhaustive_cap = 1000000);

// Probability that each LED is lit in a uniformly random (pattern, slot)
// cell of the codebook: led_totals[n] / (2^p1 * T).
std::vector<double> activation_probability(const codebook &cb);

// Population variance of the per-LED activation totals; the balance
// objective the incremental and exhaustive selectors target.
double led_total_variance(const codebook &cb);

} // namespace gdc
