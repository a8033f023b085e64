// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gdc/codebook.hpp"
#include "gdc/signal.hpp"

namespace gdc
{

// Gaussian tail probability Q(x).
double qfunc(double x);

// ||H (S - E)||_F^2 for two space-time symbol matrices.
double pairwise_distance(const Eigen::MatrixXd &h, const Eigen::MatrixXd &s,
                         const Eigen::MatrixXd &e);

// Noise-scale convention for the pairwise error probability.
// ml_scaled (the default) is Q(sqrt(d^2 / (4 N_0))), the exact pairwise ML
// error under per-sample variance N_0; half_scaled, Q(sqrt(d^2 / (2 N_0))),
// is retained as a switch because published curves sometimes use it.
enum class cpep_scale
{
    ml_scaled,   // 4 N_0
    half_scaled, // 2 N_0
};

cpep_scale cpep_scale_from_int(int denominator); // accepts 2 or 4
int cpep_scale_to_int(cpep_scale s);

// Pairwise error probability for a squared received distance.
double cpep(double distance_sq, double n0, cpep_scale scale = cpep_scale::ml_scaled);

// Union upper bound on bit error rate: average over all ordered pairs of
// the 2^P symbol matrices of cpep * (Hamming distance of the labels),
// divided by P. Labels are the natural binary words (pattern index in the
// high p1 bits, level index in the low p2 bits).
// Throws resource_error when the ordered-pair count exceeds pair_cap.
double union_bound(const Eigen::MatrixXd &h, const codebook &cb, const constellation &cons,
                   double n0, cpep_scale scale = cpep_scale::ml_scaled,
                   std::uint64_t pair_cap = (std::uint64_t{1} << 26));

// Smallest received squared distance split by error type:
// d1 covers pattern-only confusions, d2 level-only confusions. Mixed
// confusions are never smaller than both and are excluded by construction.
struct free_distance_report
{
    double d1 = std::numeric_limits<double>::infinity();
    double d2 = std::numeric_limits<double>::infinity();
    double d_free = std::numeric_limits<double>::infinity();
    std::string method; // "brute", "mfd1", "mfd2"
};

// Exhaustive minimisation over codebook pairs and level pairs.
free_distance_report free_distance_brute(const Eigen::MatrixXd &h, const codebook &cb,
                                         const constellation &cons,
                                         std::uint64_t pair_cap = (std::uint64_t{1} << 26));

// Rayleigh-Ritz lower bound: ||H J||_F^2 >= lambda_min(H^T H) * ||J||_F^2,
// so only the smallest Gram eigenvalue and Hamming geometry of the
// codebook are needed. Cheap, sound, and loose.
free_distance_report mfd1_bound(const Eigen::MatrixXd &h, const codebook &cb,
                                const constellation &cons);

// Exact free distance computed through the Gram matrix G = H^T H: each
// column contributes a small quadratic form over its active rows, so the
// channel geometry is folded once into N_t^2 numbers and reused across all
// pattern pairs. Equals free_distance_brute.
free_distance_report mfd2_distance(const Eigen::MatrixXd &h, const codebook &cb,
                                   const constellation &cons);

// Per-row-pair received distances of single-cell confusions, the reusable
// lookup mfd2_distance is built from: two patterns that differ in rows
// (r1, r2) of the same column are ||h_r1 - h_r2||^2 apart; in different
// columns, ||h_r1||^2 + ||h_r2||^2.
struct pair_distance_table
{
    Eigen::MatrixXd same_column;
    Eigen::MatrixXd cross_column;
};
pair_distance_table build_pair_distance_table(const Eigen::MatrixXd &h);

// One evaluated operating point of the N_S scan.
struct ns_table_row
{
    unsigned n_s = 0;
    unsigned p1 = 0;
    unsigned m = 1;
    double eta_e = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double d_free = 0.0;
    double bound = 0.0; // union bound (mber scan only, else 0)
};

struct ns_selection
{
    unsigned n_s = 0;
    std::vector<ns_table_row> table;
};

// Scan all eligible N_S and pick the union-bound minimiser (ties toward
// smaller N_S). n0 fixes the operating noise level of the comparison.
ns_selection select_ns_mber(const Eigen::MatrixXd &h, double eta, unsigned p, unsigned n_t,
                            unsigned t, double i_low, double i_high, double n0,
                            selection_method selector = selection_method::incremental,
                            cpep_scale scale = cpep_scale::ml_scaled,
                            std::uint64_t pair_cap = (std::uint64_t{1} << 26));

enum class fd_method
{
    mfd1,
    mfd2,
};

// Scan all eligible N_S and pick the free-distance maximiser (ties toward
// smaller N_S), using either the mfd1 bound or the exact mfd2 distance.
ns_selection select_ns_mfd(const Eigen::MatrixXd &h, double eta, unsigned p, unsigned n_t,
                           unsigned t, double i_low, double i_high, fd_method method,
                           selection_method selector = selection_method::incremental);

// Closed-form floating-point operation counts of the three N_S-selection
// strategies, for complexity comparisons. Doubles because the counts
// explode combinatorially.
struct flop_estimate
{
    double mber = 0.0;
    double mfd1 = 0.0;
    double mfd2 = 0.0;
};
flop_estimate flop_estimates(unsigned n_t, unsigned n_r, unsigned t, unsigned n_s, unsigned p,
                             unsigned p1);

} // namespace gdc
