// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <string>

#include "gdc/config.hpp"

namespace gdc
{

// Canned experiment drivers behind the command line tool. Each one runs a
// sweep described by the config, writes one or more CSV files into
// out_dir, and logs a line per output to stdout.

// Dimming sweep: per target level, the chosen cell count plus uniformity
// of the incremental, sequential, and equal-probability illumination.
void run_uidr_sweep(const experiment_config &cfg, const std::string &out_dir,
                    std::uint64_t seed);

// Spatial illuminance fields at one dimming level, for both pattern
// selection orders, one CSV per field.
void run_illuminance_map(const experiment_config &cfg, const std::string &out_dir,
                         std::uint64_t seed);

// Monte Carlo BER curves with matching analytic union bounds, one file
// covering every configured dimming level.
void run_ber_sweep(const experiment_config &cfg, const std::string &out_dir,
                   std::uint64_t seed);

// Design-space table over the eligible cell counts: free distances, the
// analytic bound at the operating SNR, and the search cost of each picker.
void run_ns_sweep(const experiment_config &cfg, const std::string &out_dir,
                  std::uint64_t seed);

// Highest spectral efficiency meeting the BER target per dimming level.
void run_rate_sweep(const experiment_config &cfg, const std::string &out_dir,
                    std::uint64_t seed);

} // namespace gdc
