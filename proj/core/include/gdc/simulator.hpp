// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "gdc/codebook.hpp"
#include "gdc/metrics.hpp"
#include "gdc/rng.hpp"
#include "gdc/signal.hpp"

namespace gdc
{

// Space-time symbol matrix for a P-bit word: the high p1 bits pick the
// codebook pattern, the low p2 bits pick the intensity level.
Eigen::MatrixXd modulate(std::uint64_t word, const codebook &cb, const constellation &cons);

struct detection
{
    std::uint32_t pattern_index = 0;
    std::uint32_t level_index = 0;

    std::uint64_t word(unsigned p2) const
    {
        return (static_cast<std::uint64_t>(pattern_index) << p2) | level_index;
    }
};

// Y = H S + W with i.i.d. zero-mean Gaussian noise of variance n0.
Eigen::MatrixXd transmit(const Eigen::MatrixXd &s, const Eigen::MatrixXd &h, double n0,
                         rng &noise);

// Plain exhaustive ML detection; reference implementation, ties go to the
// smallest (pattern, level) pair.
detection ml_detect(const Eigen::MatrixXd &y, const Eigen::MatrixXd &h, const codebook &cb,
                    const constellation &cons);

// Detector with precomputed candidate outputs. Scoring uses
// ||Y - R_i||^2 = ||Y||^2 - 2<Y, R_i> + ||R_i||^2, dropping the common
// ||Y||^2 term; candidates are scanned in label order so equal scores
// resolve to the smallest label, matching ml_detect exactly.
class ml_detector
{
  public:
    ml_detector(const Eigen::MatrixXd &h, const codebook &cb, const constellation &cons);

    detection detect(const Eigen::MatrixXd &y) const;

    // Average received symbol energy per PD per slot across all candidates.
    double mean_symbol_energy() const { return mean_energy_; }

    const Eigen::MatrixXd &candidate(std::size_t i) const { return candidates_[i]; }
    std::size_t candidate_count() const { return candidates_.size(); }

  private:
    std::vector<Eigen::MatrixXd> candidates_; // R_i = H K_z s_m, label order
    std::vector<double> self_energy_;         // ||R_i||^2
    unsigned m_ = 1;
    double mean_energy_ = 0.0;
};

// Noise variance realising a target received SNR for this configuration:
// N_0 = E_s * 10^(-snr_db/10), with E_s the candidate-average received
// energy per PD per slot. The reproduced curves keep their shape under any
// monotone SNR convention; this one is explicit so absolute dB positions
// are interpretable.
double snr_to_n0(double snr_db, const Eigen::MatrixXd &h, const codebook &cb,
                 const constellation &cons);

struct stop_rule
{
    std::uint64_t min_bit_errors = 200;
    std::uint64_t max_matrices = 10000000;
};

struct ber_point
{
    double snr_db = 0.0;
    double ber = 0.0;
    std::uint64_t bit_errors = 0;
    std::uint64_t bits = 0;
    double std_error = 0.0;   // standard error from the per-matrix error count variance
    bool upper_bound_only = false; // no errors observed before the matrix cap
};

// Monte Carlo bit error rate over an SNR grid. Each point draws its own
// sub-seeded stream, so the curve is reproducible point-by-point.
std::vector<ber_point> ber_monte_carlo(const Eigen::MatrixXd &h, const codebook &cb,
                                       const constellation &cons,
                                       const std::vector<double> &snr_db_list,
                                       const stop_rule &stop, std::uint64_t seed);

// Average emitted optical power over random words, normalised so that
// i_low maps to 0 and i_high to 1; silent cells emit 0. Converges to the
// configured dimming target.
double measured_dimming(const codebook &cb, const constellation &cons, double i_low,
                        double i_high, std::uint64_t n_matrices, std::uint64_t seed);

struct rate_search_result
{
    unsigned p = 0;          // largest rate meeting the target, 0 if none
    unsigned n_s = 0;        // active-cell count chosen at that rate
    double ber = 0.0;        // simulated BER of the qualifying point
    bool met_target = false;
};

struct rate_search_options
{
    unsigned n_t = 0;
    unsigned t = 0;
    double i_low = 0.0;
    double i_high = 1.0;
    double ber_target = 5e-4;
    unsigned p_cap = 12;
    selection_method selector = selection_method::incremental;
    bool use_mber = true;            // false switches to the free-distance picker
    fd_method fd = fd_method::mfd2;
    double selection_snr_db = 30.0;  // operating point for the MBER picker
    cpep_scale scale = cpep_scale::ml_scaled;
    std::uint64_t pair_cap = (1ull << 26);
    stop_rule stop;
};

// Largest P whose best N_S configuration meets the BER target at the given
// SNR: scans P upward and stops at the first rate that fails.
rate_search_result max_rate_search(const Eigen::MatrixXd &h, double eta, double snr_db,
                                   const rate_search_options &opt, std::uint64_t seed);

} // namespace gdc
