// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace gdc
{

// Invalid or inconsistent user input (bad config keys, malformed values,
// out-of-range parameters). Maps to CLI exit code 2.
class config_error : public std::runtime_error
{
  public:
    explicit config_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Parameters are well-formed but no feasible operating point exists
// (e.g. no eligible active-cell count for the requested dimming target).
// Maps to CLI exit code 3.
class infeasible_error : public std::runtime_error
{
  public:
    explicit infeasible_error(const std::string &msg) : std::runtime_error(msg) {}
};

// A computation would exceed a configured resource cap (pair-enumeration
// limits, exhaustive-search limits). Maps to CLI exit code 4.
class resource_error : public std::runtime_error
{
  public:
    explicit resource_error(const std::string &msg) : std::runtime_error(msg) {}
};

// A numeric routine failed to converge or produced an invalid result.
class numeric_error : public std::runtime_error
{
  public:
    explicit numeric_error(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace gdc
