// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "gdc/metrics.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "gdc/errors.hpp"

namespace gdc
{

namespace
{

// Active rows per column of a pattern, the sparse view every Gram-matrix
// path works from.
std::vector<std::vector<unsigned>> columns_of(const activation_pattern &p, unsigned t)
{
    std::vector<std::vector<unsigned>> cols(t);
    for (unsigned c : p.cells)
        cols[c % t].push_back(c / t);
    return cols;
}

// (1_A - 1_B)^T G (1_A - 1_B) over the active-row index sets of one column.
double column_form(const Eigen::MatrixXd &g, const std::vector<unsigned> &a,
                   const std::vector<unsigned> &b)
{
    double s = 0.0;
    for (unsigned i : a)
        for (unsigned j : a)
            s += g(i, j);
    for (unsigned i : b)
        for (unsigned j : b)
            s += g(i, j);
    for (unsigned i : a)
        for (unsigned j : b)
            s -= 2.0 * g(i, j);
    return s;
}

double min_gram_eigenvalue(const Eigen::MatrixXd &h)
{
    const Eigen::MatrixXd g = h.transpose() * h;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    if (es.info() != Eigen::Success)
        throw numeric_error("mfd1_bound: Gram eigendecomposition failed");
    return es.eigenvalues().minCoeff();
}

} // namespace

double qfunc(double x)
{
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double pairwise_distance(const Eigen::MatrixXd &h, const Eigen::MatrixXd &s,
                         const Eigen::MatrixXd &e)
{
    return (h * (s - e)).squaredNorm();
}

cpep_scale cpep_scale_from_int(int denominator)
{
    if (denominator == 4)
        return cpep_scale::ml_scaled;
    if (denominator == 2)
        return cpep_scale::half_scaled;
    throw config_error("cpep scale must be 2 or 4");
}

int cpep_scale_to_int(cpep_scale s)
{
    return s == cpep_scale::ml_scaled ? 4 : 2;
}

double cpep(double distance_sq, double n0, cpep_scale scale)
{
    if (!(n0 > 0.0))
        throw config_error("cpep: noise variance must be positive");
    const double denom = (scale == cpep_scale::ml_scaled ? 4.0 : 2.0) * n0;
    return qfunc(std::sqrt(distance_sq / denom));
}

double union_bound(const Eigen::MatrixXd &h, const codebook &cb, const constellation &cons,
                   double n0, cpep_scale scale, std::uint64_t pair_cap)
{
    const std::uint64_t m = cons.levels.size();
    const std::uint64_t n_words = cb.size() * m;
    const unsigned p = cb.p1 + static_cast<unsigned>(std::countr_zero(m));
    if (n_words * (n_words - 1) > pair_cap)
        throw resource_error("union_bound: symbol pair count exceeds the configured cap");

    // Received candidates in label order: pattern bits high, level bits low.
    std::vector<Eigen::MatrixXd> r;
    r.reserve(n_words);
    for (const auto &pat : cb.patterns)
    {
        const Eigen::MatrixXd hk = h * pattern_matrix(pat, cb.n_t, cb.t);
        for (std::uint64_t lvl = 0; lvl < m; ++lvl)
            r.push_back(hk * cons.levels[lvl]);
    }

    double total = 0.0;
    for (std::uint64_t i = 0; i < n_words; ++i)
        for (std::uint64_t j = i + 1; j < n_words; ++j)
        {
            const double d2 = (r[i] - r[j]).squaredNorm();
            const auto ham = static_cast<double>(std::popcount(i ^ j));
            total += 2.0 * cpep(d2, n0, scale) * ham;
        }
    return total / (static_cast<double>(n_words) * static_cast<double>(p));
}

free_distance_report free_distance_brute(const Eigen::MatrixXd &h, const codebook &cb,
                                         const constellation &cons, std::uint64_t pair_cap)
{
    const std::uint64_t k = cb.size();
    if (k * (k - 1) > pair_cap)
        throw resource_error("free_distance_brute: pattern pair count exceeds the cap");

    free_distance_report rep;
    rep.method = "brute";

    std::vector<Eigen::MatrixXd> hk;
    hk.reserve(k);
    for (const auto &pat : cb.patterns)
        hk.push_back(h * pattern_matrix(pat, cb.n_t, cb.t));

    // Pattern confusions at a shared level scale with the level, so the
    // smallest level is the binding one.
    const double s1 = cons.levels.front();
    for (std::uint64_t i = 0; i < k; ++i)
        for (std::uint64_t j = i + 1; j < k; ++j)
        {
            const double d = (hk[i] - hk[j]).squaredNorm() * s1 * s1;
            rep.d1 = std::min(rep.d1, d);
        }

    // Level confusions on a shared pattern are tightest between adjacent
    // levels, one spacing apart.
    if (cons.levels.size() > 1)
        for (std::uint64_t i = 0; i < k; ++i)
        {
            const double d = hk[i].squaredNorm() * cons.spacing * cons.spacing;
            rep.d2 = std::min(rep.d2, d);
        }

    rep.d_free = std::min(rep.d1, rep.d2);
    return rep;
}

free_distance_report mfd1_bound(const Eigen::MatrixXd &h, const codebook &cb,
                                const constellation &cons)
{
    free_distance_report rep;
    rep.method = "mfd1";

    const double lam_min = min_gram_eigenvalue(h);

    // ||K_z - K_w||_F^2 is the symmetric difference of the two cell sets.
    // Patterns have equal weight, so it is 2 * (N_S - |overlap|); the
    // minimum over pairs only needs the largest overlap.
    const std::uint64_t k = cb.size();
    if (k > 1)
    {
        unsigned max_overlap = 0;
        for (std::uint64_t i = 0; i < k; ++i)
            for (std::uint64_t j = i + 1; j < k; ++j)
            {
                unsigned overlap = 0;
                // Cell lists are strictly descending, intersect by merge.
                const auto &a = cb.patterns[i].cells;
                const auto &b = cb.patterns[j].cells;
                std::size_t x = 0, y = 0;
                while (x < a.size() && y < b.size())
                {
                    if (a[x] == b[y])
                    {
                        ++overlap;
                        ++x;
                        ++y;
                    }
                    else if (a[x] > b[y])
                        ++x;
                    else
                        ++y;
                }
                max_overlap = std::max(max_overlap, overlap);
            }
        const double min_diff = 2.0 * static_cast<double>(cb.n_s - max_overlap);
        const double s1 = cons.levels.front();
        rep.d1 = lam_min * min_diff * s1 * s1;
    }

    if (cons.levels.size() > 1)
        rep.d2 = lam_min * static_cast<double>(cb.n_s) * cons.spacing * cons.spacing;

    rep.d_free = std::min(rep.d1, rep.d2);
    return rep;
}

free_distance_report mfd2_distance(const Eigen::MatrixXd &h, const codebook &cb,
                                   const constellation &cons)
{
    free_distance_report rep;
    rep.method = "mfd2";

    const Eigen::MatrixXd g = h.transpose() * h;

    std::vector<std::vector<std::vector<unsigned>>> cols;
    cols.reserve(cb.size());
    for (const auto &pat : cb.patterns)
        cols.push_back(columns_of(pat, cb.t));

    const std::uint64_t k = cb.size();
    if (k > 1)
    {
        const double s1 = cons.levels.front();
        double min_form = std::numeric_limits<double>::infinity();
        for (std::uint64_t i = 0; i < k; ++i)
            for (std::uint64_t j = i + 1; j < k; ++j)
            {
                double form = 0.0;
                for (unsigned c = 0; c < cb.t; ++c)
                    form += column_form(g, cols[i][c], cols[j][c]);
                min_form = std::min(min_form, form);
            }
        rep.d1 = min_form * s1 * s1;
    }

    if (cons.levels.size() > 1)
    {
        static const std::vector<unsigned> empty;
        double min_energy = std::numeric_limits<double>::infinity();
        for (std::uint64_t i = 0; i < k; ++i)
        {
            double energy = 0.0;
            for (unsigned c = 0; c < cb.t; ++c)
                energy += column_form(g, cols[i][c], empty);
            min_energy = std::min(min_energy, energy);
        }
        rep.d2 = min_energy * cons.spacing * cons.spacing;
    }

    rep.d_free = std::min(rep.d1, rep.d2);
    return rep;
}

pair_distance_table build_pair_distance_table(const Eigen::MatrixXd &h)
{
    const Eigen::Index n_t = h.cols();
    const Eigen::MatrixXd g = h.transpose() * h;
    pair_distance_table tab;
    tab.same_column.resize(n_t, n_t);
    tab.cross_column.resize(n_t, n_t);
    for (Eigen::Index i = 0; i < n_t; ++i)
        for (Eigen::Index j = 0; j < n_t; ++j)
        {
            tab.same_column(i, j) = g(i, i) + g(j, j) - 2.0 * g(i, j);
            tab.cross_column(i, j) = g(i, i) + g(j, j);
        }
    return tab;
}

ns_selection select_ns_mber(const Eigen::MatrixXd &h, double eta, unsigned p, unsigned n_t,
                            unsigned t, double i_low, double i_high, double n0,
                            selection_method selector, cpep_scale scale, std::uint64_t pair_cap)
{
    const ns_range range = eligible_ns_range(n_t, t, eta);
    ns_selection sel;
    double best = std::numeric_limits<double>::infinity();
    for (unsigned n_s = range.lo; n_s <= range.hi; ++n_s)
    {
        const dimming_plan plan = resolve_plan(n_t, t, p, eta, n_s);
        const codebook cb = select_patterns(selector, n_t, t, n_s, plan.p1);
        const constellation cons = optimal_constellation(plan.eta_e, plan.m, i_low, i_high);

        ns_table_row row;
        row.n_s = n_s;
        row.p1 = plan.p1;
        row.m = plan.m;
        row.eta_e = plan.eta_e;
        const free_distance_report fd = mfd2_distance(h, cb, cons);
        row.d1 = fd.d1;
        row.d2 = fd.d2;
        row.d_free = fd.d_free;
        row.bound = union_bound(h, cb, cons, n0, scale, pair_cap);
        sel.table.push_back(row);

        if (row.bound < best)
        {
            best = row.bound;
            sel.n_s = n_s;
        }
    }
    return sel;
}

ns_selection select_ns_mfd(const Eigen::MatrixXd &h, double eta, unsigned p, unsigned n_t,
                           unsigned t, double i_low, double i_high, fd_method method,
                           selection_method selector)
{
    const ns_range range = eligible_ns_range(n_t, t, eta);
    ns_selection sel;
    double best = -std::numeric_limits<double>::infinity();
    for (unsigned n_s = range.lo; n_s <= range.hi; ++n_s)
    {
        const dimming_plan plan = resolve_plan(n_t, t, p, eta, n_s);
        const codebook cb = select_patterns(selector, n_t, t, n_s, plan.p1);
        const constellation cons = optimal_constellation(plan.eta_e, plan.m, i_low, i_high);

        const free_distance_report fd =
            method == fd_method::mfd1 ? mfd1_bound(h, cb, cons) : mfd2_distance(h, cb, cons);

        ns_table_row row;
        row.n_s = n_s;
        row.p1 = plan.p1;
        row.m = plan.m;
        row.eta_e = plan.eta_e;
        row.d1 = fd.d1;
        row.d2 = fd.d2;
        row.d_free = fd.d_free;
        row.bound = 0.0;
        sel.table.push_back(row);

        if (fd.d_free > best)
        {
            best = fd.d_free;
            sel.n_s = n_s;
        }
    }
    return sel;
}

flop_estimate flop_estimates(unsigned n_t, unsigned n_r, unsigned t, unsigned n_s, unsigned p,
                             unsigned p1)
{
    const double nt = n_t, nr = n_r, tt = t, ns = n_s;
    const double k = std::ldexp(1.0, static_cast<int>(p1)); // 2^p1
    const double w = std::ldexp(1.0, static_cast<int>(p));  // 2^P

    // One pairwise CPEP argument: scale two symbol matrices, multiply by
    // the channel, and take a squared Frobenius distance.
    const double scale_cost = 2.0 * nt * tt;
    const double mult_cost = 2.0 * nt * nr * tt - nr * tt + nt * tt;
    const double dist_cost = 2.0 * nr * nr * (tt - 1.0);
    const double pair_cost = scale_cost + mult_cost + dist_cost;

    // A pattern distance: subtract patterns, channel-multiply, accumulate a
    // squared norm plus the per-column Q-function bookkeeping.
    const double norm_cost = 2.0 * nr * tt * tt + 13.0 * tt * tt;
    const double d1_cost = mult_cost + norm_cost;
    const double d2_cost = (2.0 * nt * nr * tt - nr * tt) + norm_cost;

    flop_estimate est;
    est.mber = (w * w - w) * pair_cost;
    est.mfd1 = k * (k - 1.0) * d1_cost + k * d2_cost;
    // Gram matrix once, then per selected pattern a sparse quadratic form
    // touching only active-cell index pairs.
    est.mfd2 = nt * nt * 12.0 + k * 2.0 * (2.0 * ns * ns - 2.0 * ns);
    return est;
}

} // namespace gdc
