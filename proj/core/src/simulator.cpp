// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "gdc/simulator.hpp"

#include <bit>
#include <cmath>

#include "gdc/errors.hpp"

namespace gdc
{

namespace
{

unsigned level_bits(const constellation &cons)
{
    const auto m = static_cast<std::uint64_t>(cons.levels.size());
    return static_cast<unsigned>(std::countr_zero(m));
}

} // namespace

Eigen::MatrixXd modulate(std::uint64_t word, const codebook &cb, const constellation &cons)
{
    const unsigned p2 = level_bits(cons);
    const std::uint64_t pos = word >> p2;
    const std::uint64_t lvl = word & ((std::uint64_t{1} << p2) - 1);
    if (pos >= cb.size())
        throw config_error("modulate: word outside the codebook range");
    return pattern_matrix(cb.patterns[pos], cb.n_t, cb.t) * cons.levels[lvl];
}

Eigen::MatrixXd transmit(const Eigen::MatrixXd &s, const Eigen::MatrixXd &h, double n0,
                         rng &noise)
{
    const double sigma = std::sqrt(n0);
    Eigen::MatrixXd y = h * s;
    for (Eigen::Index c = 0; c < y.cols(); ++c)
        for (Eigen::Index r = 0; r < y.rows(); ++r)
            y(r, c) += sigma * noise.next_gaussian();
    return y;
}

detection ml_detect(const Eigen::MatrixXd &y, const Eigen::MatrixXd &h, const codebook &cb,
                    const constellation &cons)
{
    detection best;
    double best_score = std::numeric_limits<double>::infinity();
    for (std::uint32_t zi = 0; zi < cb.size(); ++zi)
    {
        const Eigen::MatrixXd hk = h * pattern_matrix(cb.patterns[zi], cb.n_t, cb.t);
        for (std::uint32_t mi = 0; mi < cons.levels.size(); ++mi)
        {
            const double score = (y - hk * cons.levels[mi]).squaredNorm();
            if (score < best_score)
            {
                best_score = score;
                best.pattern_index = zi;
                best.level_index = mi;
            }
        }
    }
    return best;
}

ml_detector::ml_detector(const Eigen::MatrixXd &h, const codebook &cb, const constellation &cons)
{
    m_ = static_cast<unsigned>(cons.levels.size());
    candidates_.reserve(cb.size() * m_);
    self_energy_.reserve(cb.size() * m_);
    double energy_sum = 0.0;
    for (const auto &pat : cb.patterns)
    {
        const Eigen::MatrixXd hk = h * pattern_matrix(pat, cb.n_t, cb.t);
        for (unsigned mi = 0; mi < m_; ++mi)
        {
            candidates_.push_back(hk * cons.levels[mi]);
            self_energy_.push_back(candidates_.back().squaredNorm());
            energy_sum += self_energy_.back();
        }
    }
    const double samples = static_cast<double>(h.rows()) * static_cast<double>(cb.t);
    mean_energy_ = energy_sum / (static_cast<double>(candidates_.size()) * samples);
}

detection ml_detector::detect(const Eigen::MatrixXd &y) const
{
    // argmin ||Y - R_i||^2 = argmin ||R_i||^2 - 2 <Y, R_i>; the strict
    // comparison over the label-ordered scan reproduces ml_detect's
    // smallest-label tie handling.
    std::size_t best = 0;
    double best_score = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < candidates_.size(); ++i)
    {
        const double score = self_energy_[i] - 2.0 * y.cwiseProduct(candidates_[i]).sum();
        if (score < best_score)
        {
            best_score = score;
            best = i;
        }
    }
    detection d;
    d.pattern_index = static_cast<std::uint32_t>(best / m_);
    d.level_index = static_cast<std::uint32_t>(best % m_);
    return d;
}

double snr_to_n0(double snr_db, const Eigen::MatrixXd &h, const codebook &cb,
                 const constellation &cons)
{
    const ml_detector det(h, cb, cons);
    return det.mean_symbol_energy() * std::pow(10.0, -snr_db / 10.0);
}

std::vector<ber_point> ber_monte_carlo(const Eigen::MatrixXd &h, const codebook &cb,
                                       const constellation &cons,
                                       const std::vector<double> &snr_db_list,
                                       const stop_rule &stop, std::uint64_t seed)
{
    const ml_detector det(h, cb, cons);
    const unsigned p2 = level_bits(cons);
    const unsigned p = cb.p1 + p2;
    const std::uint64_t n_words = cb.size() << p2;

    std::vector<ber_point> out;
    out.reserve(snr_db_list.size());
    for (double snr_db : snr_db_list)
    {
        const double n0 = det.mean_symbol_energy() * std::pow(10.0, -snr_db / 10.0);
        rng stream(derive_subseed(seed, subseed_tag(snr_db)));

        ber_point pt;
        pt.snr_db = snr_db;
        std::uint64_t matrices = 0;
        double err_sq = 0.0;
        while (pt.bit_errors < stop.min_bit_errors && matrices < stop.max_matrices)
        {
            const std::uint64_t word = stream.next_below(n_words);
            const Eigen::MatrixXd y = transmit(modulate(word, cb, cons), h, n0, stream);
            const std::uint64_t decided = det.detect(y).word(p2);
            const int wrong = std::popcount(word ^ decided);
            pt.bit_errors += static_cast<std::uint64_t>(wrong);
            err_sq += static_cast<double>(wrong) * static_cast<double>(wrong);
            pt.bits += p;
            ++matrices;
        }
        pt.ber = pt.bits ? static_cast<double>(pt.bit_errors) / static_cast<double>(pt.bits)
                         : 0.0;
        if (matrices > 0)
        {
            // Bit errors arrive in per-matrix clusters, so the uncertainty
            // comes from the sample variance of the per-matrix error count,
            // not from a per-bit binomial model (which understates it).
            const double m = static_cast<double>(matrices);
            const double mean = static_cast<double>(pt.bit_errors) / m;
            const double var = std::max(err_sq / m - mean * mean, 0.0);
            pt.std_error = std::sqrt(var / m) / static_cast<double>(p);
        }
        pt.upper_bound_only = (pt.bit_errors == 0);
        out.push_back(pt);
    }
    return out;
}

double measured_dimming(const codebook &cb, const constellation &cons, double i_low,
                        double i_high, std::uint64_t n_matrices, std::uint64_t seed)
{
    if (!(i_high > i_low))
        throw config_error("measured_dimming: need i_high > i_low");
    const unsigned p2 = level_bits(cons);
    const std::uint64_t n_words = cb.size() << p2;
    const double cells = static_cast<double>(cb.n_t) * static_cast<double>(cb.t);

    rng stream(seed);
    double acc = 0.0;
    for (std::uint64_t i = 0; i < n_matrices; ++i)
    {
        const std::uint64_t word = stream.next_below(n_words);
        const std::uint64_t lvl = word & ((std::uint64_t{1} << p2) - 1);
        // Only active cells emit; each contributes its normalised drive.
        const double per_cell = (cons.levels[lvl] - i_low) / (i_high - i_low);
        acc += per_cell * static_cast<double>(cb.n_s) / cells;
    }
    return acc / static_cast<double>(n_matrices);
}

rate_search_result max_rate_search(const Eigen::MatrixXd &h, double eta, double snr_db,
                                   const rate_search_options &opt, std::uint64_t seed)
{
    rate_search_result result;
    for (unsigned p = 1; p <= opt.p_cap; ++p)
    {
        unsigned n_s = 0;
        if (opt.use_mber)
        {
            // The picker compares candidates at a fixed operating noise
            // level, anchored to the full-activation configuration.
            const codebook ref = select_sequential(opt.n_t, opt.t, opt.n_t * opt.t, 0);
            const constellation ref_cons =
                optimal_constellation(eta, 1u << p, opt.i_low, opt.i_high);
            const double n0_sel = snr_to_n0(opt.selection_snr_db, h, ref, ref_cons);
            n_s = select_ns_mber(h, eta, p, opt.n_t, opt.t, opt.i_low, opt.i_high, n0_sel,
                                 opt.selector, opt.scale, opt.pair_cap)
                      .n_s;
        }
        else
        {
            n_s = select_ns_mfd(h, eta, p, opt.n_t, opt.t, opt.i_low, opt.i_high, opt.fd,
                                opt.selector)
                      .n_s;
        }

        const dimming_plan plan = resolve_plan(opt.n_t, opt.t, p, eta, n_s);
        const codebook cb = select_patterns(opt.selector, opt.n_t, opt.t, n_s, plan.p1);
        const constellation cons =
            optimal_constellation(plan.eta_e, plan.m, opt.i_low, opt.i_high);

        const auto points =
            ber_monte_carlo(h, cb, cons, {snr_db}, opt.stop, derive_subseed(seed, p));
        if (points.front().ber > opt.ber_target)
            break;
        result.p = p;
        result.n_s = n_s;
        result.ber = points.front().ber;
        result.met_target = true;
    }
    return result;
}

} // namespace gdc
