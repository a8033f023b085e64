// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gdc/channel.hpp"
#include "gdc/codebook.hpp"
#include "gdc/metrics.hpp"
#include "gdc/simulator.hpp"

namespace gdc
{

// How the operating N_S is chosen: by the union-bound minimum or by one of
// the two free-distance maximisers.
enum class picker_method
{
    mber,
    mfd1,
    mfd2,
};

const char *picker_method_name(picker_method m);
picker_method picker_method_from_name(const std::string &name);

// Experiment description parsed from a key=value file with [section]
// headers. Defaults reproduce the reference four-LED room so a minimal
// config file can override just the sweep it cares about.
struct experiment_config
{
    // [geometry]
    room_geometry room;

    // [system]
    unsigned n_t = 4;
    unsigned t = 2;
    unsigned p = 8;
    double i_low = 0.1;
    double i_high = 2.0;

    // [sweep]
    std::vector<double> dimming_levels;  // ber sweep
    std::vector<double> eta_grid;        // uidr sweep
    std::vector<double> rate_eta_grid;   // rate sweep
    std::vector<double> snr_db;
    selection_method selector = selection_method::incremental;
    std::vector<picker_method> methods;  // ns pickers swept by ber/rate
    cpep_scale scale = cpep_scale::ml_scaled;
    double selection_snr_db = 30.0;
    std::uint64_t min_errors = 200;
    std::uint64_t max_matrices = 10000000;
    double ber_target = 5e-4;
    unsigned p_cap = 12;
    std::vector<unsigned> t_values;
    double ns_eta = 0.5;
    unsigned ns_p = 9;
    double rate_snr_db = 30.0;
    std::uint64_t pair_cap = (1ull << 26);
    std::uint64_t exhaustive_cap = 1000000;

    // [output]
    unsigned grid_nx = 50;
    unsigned grid_ny = 50;
    double grid_x_max = 4.0;
    double grid_y_max = 4.0;
    double grid_z = 0.75;
    double illum_eta = 0.2;
};

// Parse a config file. Unknown sections or keys are errors, as are
// malformed values; an empty path yields the defaults.
experiment_config load_config(const std::string &path);
experiment_config parse_config(const std::string &text);

// Stable 64-bit digest of the parsed configuration, recorded in output
// headers so result files are traceable to their inputs.
std::uint64_t config_digest(const experiment_config &cfg);

} // namespace gdc
