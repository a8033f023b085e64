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

namespace gdc
{

// Minimal CSV emitter with deterministic number formatting, so identical
// runs produce byte-identical files. Comment lines start with '#' and
// carry provenance (tool version, config digest, seed).
class csv_writer
{
  public:
    void comment(const std::string &text);
    void header(const std::vector<std::string> &columns);
    void row(const std::vector<std::string> &cells);

    const std::string &text() const { return text_; }
    void save(const std::string &path) const;

  private:
    std::string text_;
};

// Shortest round-trip-safe decimal form of a double ("0.35", "3.84e-05").
std::string format_number(double value);
std::string format_number(std::uint64_t value);

} // namespace gdc
