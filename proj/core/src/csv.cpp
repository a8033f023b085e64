// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "gdc/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace gdc
{

void csv_writer::comment(const std::string &text)
{
    text_ += "# ";
    text_ += text;
    text_ += '\n';
}

void csv_writer::header(const std::vector<std::string> &columns)
{
    row(columns);
}

void csv_writer::row(const std::vector<std::string> &cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i)
    {
        if (i)
            text_ += ',';
        text_ += cells[i];
    }
    text_ += '\n';
}

void csv_writer::save(const std::string &path) const
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("csv: cannot open '" + path + "' for writing");
    out.write(text_.data(), static_cast<std::streamsize>(text_.size()));
    if (!out)
        throw std::runtime_error("csv: short write to '" + path + "'");
}

std::string format_number(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return {buf, res.ptr};
}

std::string format_number(std::uint64_t value)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return {buf, res.ptr};
}

} // namespace gdc
