// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "gdc/codebook.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gdc/errors.hpp"

namespace gdc
{

namespace
{

void validate_dimensions(unsigned n_t, unsigned t, unsigned n_s, unsigned p1)
{
    if (n_t == 0 || t == 0)
        throw config_error("pattern selection: N_t and T must be positive");
    if (n_s == 0 || n_s > n_t * t)
        throw config_error("pattern selection: N_S must lie in [1, N_t*T]");
    const std::uint64_t z_count = binomial(n_t * t, n_s);
    if (p1 >= 64 || (std::uint64_t{1} << p1) > z_count)
        throw config_error("pattern selection: 2^p1 exceeds the pattern count");
}

codebook finalize(unsigned n_t, unsigned t, unsigned n_s, unsigned p1, selection_method m,
                  std::vector<activation_pattern> patterns)
{
    std::sort(patterns.begin(), patterns.end(),
              [](const activation_pattern &a, const activation_pattern &b) { return a.z < b.z; });
    codebook cb;
    cb.n_t = n_t;
    cb.t = t;
    cb.n_s = n_s;
    cb.p1 = p1;
    cb.method = m;
    cb.led_totals.assign(n_t, 0);
    for (const auto &p : patterns)
        for (unsigned n = 0; n < n_t; ++n)
            cb.led_totals[n] += p.led_counts[n];
    cb.patterns = std::move(patterns);
    return cb;
}

activation_pattern make_pattern(std::uint64_t z, unsigned n_t, unsigned t, unsigned n_s)
{
    activation_pattern p;
    p.z = z;
    p.cells = combinadic_decode(z, n_s);
    p.led_counts.assign(n_t, 0);
    for (unsigned c : p.cells)
        ++p.led_counts[c / t];
    return p;
}

} // namespace

const char *selection_method_name(selection_method m)
{
    switch (m)
    {
    case selection_method::sequential:
        return "sequential";
    case selection_method::incremental:
        return "incremental";
    case selection_method::exhaustive:
        return "exhaustive";
    }
    return "unknown";
}

selection_method selection_method_from_name(const std::string &name)
{
    if (name == "sequential")
        return selection_method::sequential;
    if (name == "incremental")
        return selection_method::incremental;
    if (name == "exhaustive")
        return selection_method::exhaustive;
    throw config_error("unknown pattern selection method '" + name + "'");
}

std::vector<activation_pattern> enumerate_patterns(unsigned n_t, unsigned t, unsigned n_s)
{
    const std::uint64_t z_count = binomial(n_t * t, n_s);
    if (z_count > (std::uint64_t{1} << 27))
        throw resource_error("enumerate_patterns: pattern space too large to materialise");
    std::vector<activation_pattern> out;
    out.reserve(z_count);
    for (std::uint64_t z = 0; z < z_count; ++z)
        out.push_back(make_pattern(z, n_t, t, n_s));
    return out;
}

Eigen::MatrixXd pattern_matrix(const activation_pattern &p, unsigned n_t, unsigned t)
{
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n_t, t);
    for (unsigned c : p.cells)
        k(c / t, c % t) = 1.0;
    return k;
}

codebook select_sequential(unsigned n_t, unsigned t, unsigned n_s, unsigned p1)
{
    validate_dimensions(n_t, t, n_s, p1);
    const std::uint64_t k = std::uint64_t{1} << p1;
    std::vector<activation_pattern> patterns;
    patterns.reserve(k);
    for (std::uint64_t z = 0; z < k; ++z)
        patterns.push_back(make_pattern(z, n_t, t, n_s));
    return finalize(n_t, t, n_s, p1, selection_method::sequential, std::move(patterns));
}

codebook select_incremental(unsigned n_t, unsigned t, unsigned n_s, unsigned p1)
{
    validate_dimensions(n_t, t, n_s, p1);
    const std::uint64_t k = std::uint64_t{1} << p1;
    const auto all = enumerate_patterns(n_t, t, n_s);
    const std::uint64_t z_count = all.size();

    // Per-LED share of the total activation budget, rounded up.
    const std::uint64_t quota = (k * n_s + n_t - 1) / n_t;

    std::vector<bool> selected(z_count, false);
    std::vector<std::uint64_t> totals(n_t, 0);
    std::uint64_t n_selected = 0;

    auto add = [&](std::uint64_t z) {
        selected[z] = true;
        ++n_selected;
        for (unsigned n = 0; n < n_t; ++n)
            totals[n] += all[z].led_counts[n];
    };
    auto remove = [&](std::uint64_t z) {
        selected[z] = false;
        --n_selected;
        for (unsigned n = 0; n < n_t; ++n)
            totals[n] -= all[z].led_counts[n];
    };

    // Fill each LED towards its quota in rank order. A pattern is taken as
    // soon as it lights the LED under focus without pushing that LED past
    // its quota; its contribution to every other LED is booked immediately.
    for (unsigned n = 0; n < n_t; ++n)
        for (std::uint64_t z = 0; z < z_count; ++z)
        {
            if (selected[z])
                continue;
            const unsigned u = all[z].led_counts[n];
            if (u == 0)
                continue;
            if (totals[n] + u <= quota)
                add(z);
        }

    // Quota rounding rarely lands on exactly 2^p1 patterns, so top up the
    // weakest LED (or shed load from the strongest) until the size is right.
    // Ties go to the lowest LED index and the lowest pattern rank.
    while (n_selected < k)
    {
        unsigned weakest = 0;
        for (unsigned n = 1; n < n_t; ++n)
            if (totals[n] < totals[weakest])
                weakest = n;
        std::uint64_t best = z_count;
        for (std::uint64_t z = 0; z < z_count; ++z)
        {
            if (selected[z])
                continue;
            if (best == z_count || all[z].led_counts[weakest] > all[best].led_counts[weakest])
                best = z;
        }
        if (best == z_count)
            throw numeric_error("select_incremental: ran out of candidate patterns");
        add(best);
    }
    while (n_selected > k)
    {
        unsigned strongest = 0;
        for (unsigned n = 1; n < n_t; ++n)
            if (totals[n] > totals[strongest])
                strongest = n;
        std::uint64_t best = z_count;
        for (std::uint64_t z = 0; z < z_count; ++z)
        {
            if (!selected[z])
                continue;
            if (best == z_count || all[z].led_counts[strongest] > all[best].led_counts[strongest])
                best = z;
        }
        remove(best);
    }

    std::vector<activation_pattern> patterns;
    patterns.reserve(k);
    for (std::uint64_t z = 0; z < z_count; ++z)
        if (selected[z])
            patterns.push_back(all[z]);
    return finalize(n_t, t, n_s, p1, selection_method::incremental, std::move(patterns));
}

codebook select_exhaustive(unsigned n_t, unsigned t, unsigned n_s, unsigned p1,
                           std::uint64_t max_subsets)
{
    validate_dimensions(n_t, t, n_s, p1);
    const std::uint64_t k = std::uint64_t{1} << p1;
    const auto all = enumerate_patterns(n_t, t, n_s);
    const std::uint64_t z_count = all.size();

    if (z_count > std::numeric_limits<unsigned>::max() ||
        binomial(static_cast<unsigned>(z_count), static_cast<unsigned>(k)) > max_subsets)
        throw resource_error("select_exhaustive: subset count exceeds the configured cap");

    // March through all k-subsets in colex order via the standard
    // next-combination update, tracking the per-LED totals incrementally.
    std::vector<std::uint64_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);

    auto variance_of = [&](const std::vector<std::uint64_t> &subset) {
        std::vector<std::uint64_t> totals(n_t, 0);
        for (std::uint64_t z : subset)
            for (unsigned n = 0; n < n_t; ++n)
                totals[n] += all[z].led_counts[n];
        double mean = 0.0;
        for (auto v : totals)
            mean += static_cast<double>(v);
        mean /= static_cast<double>(n_t);
        double var = 0.0;
        for (auto v : totals)
        {
            const double d = static_cast<double>(v) - mean;
            var += d * d;
        }
        return var / static_cast<double>(n_t);
    };

    std::vector<std::uint64_t> best_pick = pick;
    double best_var = variance_of(pick);
    while (true)
    {
        // Advance to the next combination in lexicographic order.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == z_count - k + (i - 1))
            --i;
        if (i == 0)
            break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;

        const double var = variance_of(pick);
        if (var < best_var)
        {
            best_var = var;
            best_pick = pick;
        }
    }

    std::vector<activation_pattern> patterns;
    patterns.reserve(k);
    for (std::uint64_t z : best_pick)
        patterns.push_back(all[z]);
    return finalize(n_t, t, n_s, p1, selection_method::exhaustive, std::move(patterns));
}

codebook select_patterns(selection_method m, unsigned n_t, unsigned t, unsigned n_s, unsigned p1,
                         std::uint64_t exhaustive_cap)
{
    switch (m)
    {
    case selection_method::sequential:
        return select_sequential(n_t, t, n_s, p1);
    case selection_method::incremental:
        return select_incremental(n_t, t, n_s, p1);
    case selection_method::exhaustive:
        return select_exhaustive(n_t, t, n_s, p1, exhaustive_cap);
    }
    throw config_error("select_patterns: unknown method");
}

std::vector<double> activation_probability(const codebook &cb)
{
    const double denom = static_cast<double>(cb.size()) * static_cast<double>(cb.t);
    std::vector<double> probs(cb.n_t, 0.0);
    for (unsigned n = 0; n < cb.n_t; ++n)
        probs[n] = static_cast<double>(cb.led_totals[n]) / denom;
    return probs;
}

double led_total_variance(const codebook &cb)
{
    double mean = 0.0;
    for (auto v : cb.led_totals)
        mean += static_cast<double>(v);
    mean /= static_cast<double>(cb.n_t);
    double var = 0.0;
    for (auto v : cb.led_totals)
    {
        const double d = static_cast<double>(v) - mean;
        var += d * d;
    }
    return var / static_cast<double>(cb.n_t);
}

} // namespace gdc
