// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "gdc/config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gdc/errors.hpp"

namespace gdc
{

namespace
{

std::string trim(const std::string &s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true)
    {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

double parse_double(const std::string &key, const std::string &value)
{
    errno = 0;
    char *end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end != value.c_str() + value.size() || value.empty() || errno == ERANGE)
        throw config_error("config: bad numeric value for '" + key + "': " + value);
    return v;
}

std::uint64_t parse_u64(const std::string &key, const std::string &value)
{
    errno = 0;
    char *end = nullptr;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (end != value.c_str() + value.size() || value.empty() || errno == ERANGE)
        throw config_error("config: bad integer value for '" + key + "': " + value);
    return v;
}

unsigned parse_unsigned(const std::string &key, const std::string &value)
{
    const std::uint64_t v = parse_u64(key, value);
    if (v > 0xFFFFFFFFull)
        throw config_error("config: value out of range for '" + key + "': " + value);
    return static_cast<unsigned>(v);
}

std::vector<double> parse_double_list(const std::string &key, const std::string &value)
{
    std::vector<double> out;
    for (const auto &item : split(value, ','))
        out.push_back(parse_double(key, item));
    return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string &key, const std::string &value)
{
    std::vector<unsigned> out;
    for (const auto &item : split(value, ','))
        out.push_back(parse_unsigned(key, item));
    return out;
}

std::vector<vec3> parse_positions(const std::string &key, const std::string &value)
{
    std::vector<vec3> out;
    for (const auto &triple : split(value, ';'))
    {
        const auto coords = split(triple, ',');
        if (coords.size() != 3)
            throw config_error("config: '" + key + "' expects x,y,z triples joined by ';'");
        out.push_back({parse_double(key, coords[0]), parse_double(key, coords[1]),
                       parse_double(key, coords[2])});
    }
    return out;
}

experiment_config default_config()
{
    experiment_config cfg;
    // Reference room: a 4 m x 4 m x 2.5 m cell with four ceiling LEDs over
    // a compact photodiode array at desk height.
    cfg.room.leds = {
        {{1.0, 1.0, 2.5}, 60.0}, {{1.0, 3.0, 2.5}, 60.0},
        {{3.0, 1.0, 2.5}, 60.0}, {{3.0, 3.0, 2.5}, 60.0}};
    cfg.room.pds = {
        {{1.9, 1.9, 0.75}, 40.0, 1e-4, 1.5}, {{1.9, 2.1, 0.75}, 40.0, 1e-4, 1.5},
        {{2.1, 1.9, 0.75}, 40.0, 1e-4, 1.5}, {{2.1, 2.1, 0.75}, 40.0, 1e-4, 1.5}};
    cfg.dimming_levels = {0.35, 0.5, 0.65, 0.8};
    for (int k = 1; k <= 19; ++k)
        cfg.eta_grid.push_back(static_cast<double>(k) / 20.0);
    for (int k = 1; k <= 9; ++k)
        cfg.rate_eta_grid.push_back(static_cast<double>(k) / 10.0);
    cfg.snr_db = {16.0, 20.0, 24.0, 28.0, 32.0};
    cfg.methods = {picker_method::mber, picker_method::mfd1, picker_method::mfd2};
    cfg.t_values = {2, 3};
    return cfg;
}

struct geometry_overrides
{
    std::vector<vec3> led_positions;
    std::vector<vec3> pd_positions;
    double led_half_angle_deg = 60.0;
    double pd_fov_deg = 40.0;
    double pd_area_m2 = 1e-4;
    double pd_refractive_index = 1.5;
    bool any = false;
};

void apply_geometry(experiment_config &cfg, const geometry_overrides &geo)
{
    if (!geo.any)
        return;
    std::vector<vec3> led_pos = geo.led_positions;
    if (led_pos.empty())
        for (const auto &l : cfg.room.leds)
            led_pos.push_back(l.position);
    std::vector<vec3> pd_pos = geo.pd_positions;
    if (pd_pos.empty())
        for (const auto &p : cfg.room.pds)
            pd_pos.push_back(p.position);

    cfg.room.leds.clear();
    for (const auto &pos : led_pos)
        cfg.room.leds.push_back({pos, geo.led_half_angle_deg});
    cfg.room.pds.clear();
    for (const auto &pos : pd_pos)
        cfg.room.pds.push_back({pos, geo.pd_fov_deg, geo.pd_area_m2, geo.pd_refractive_index});
}

} // namespace

const char *picker_method_name(picker_method m)
{
    switch (m)
    {
    case picker_method::mber:
        return "mber";
    case picker_method::mfd1:
        return "mfd1";
    case picker_method::mfd2:
        return "mfd2";
    }
    return "unknown";
}

picker_method picker_method_from_name(const std::string &name)
{
    if (name == "mber")
        return picker_method::mber;
    if (name == "mfd1")
        return picker_method::mfd1;
    if (name == "mfd2")
        return picker_method::mfd2;
    throw config_error("method must be mber, mfd1, or mfd2");
}

experiment_config parse_config(const std::string &text)
{
    experiment_config cfg = default_config();
    geometry_overrides geo;

    std::string section;
    std::istringstream in(text);
    std::string line;
    unsigned line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;

        if (line.front() == '[')
        {
            if (line.back() != ']')
                throw config_error("config line " + std::to_string(line_no) +
                                   ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "geometry" && section != "system" && section != "sweep" &&
                section != "output")
                throw config_error("config: unknown section '" + section + "'");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(line_no) +
                               ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw config_error("config line " + std::to_string(line_no) + ": empty key");

        if (section == "geometry")
        {
            geo.any = true;
            if (key == "led_positions")
                geo.led_positions = parse_positions(key, value);
            else if (key == "pd_positions")
                geo.pd_positions = parse_positions(key, value);
            else if (key == "led_half_angle_deg")
                geo.led_half_angle_deg = parse_double(key, value);
            else if (key == "pd_fov_deg")
                geo.pd_fov_deg = parse_double(key, value);
            else if (key == "pd_area_m2")
                geo.pd_area_m2 = parse_double(key, value);
            else if (key == "pd_refractive_index")
                geo.pd_refractive_index = parse_double(key, value);
            else
                throw config_error("config: unknown key '" + key + "' in [geometry]");
        }
        else if (section == "system")
        {
            if (key == "n_t")
                cfg.n_t = parse_unsigned(key, value);
            else if (key == "t")
                cfg.t = parse_unsigned(key, value);
            else if (key == "p")
                cfg.p = parse_unsigned(key, value);
            else if (key == "i_low")
                cfg.i_low = parse_double(key, value);
            else if (key == "i_high")
                cfg.i_high = parse_double(key, value);
            else
                throw config_error("config: unknown key '" + key + "' in [system]");
        }
        else if (section == "sweep")
        {
            if (key == "dimming_levels")
                cfg.dimming_levels = parse_double_list(key, value);
            else if (key == "eta_grid")
                cfg.eta_grid = parse_double_list(key, value);
            else if (key == "rate_eta_grid")
                cfg.rate_eta_grid = parse_double_list(key, value);
            else if (key == "snr_db")
                cfg.snr_db = parse_double_list(key, value);
            else if (key == "selector")
                cfg.selector = selection_method_from_name(value);
            else if (key == "method")
            {
                if (value == "all")
                    cfg.methods = {picker_method::mber, picker_method::mfd1,
                                   picker_method::mfd2};
                else
                    cfg.methods = {picker_method_from_name(value)};
            }
            else if (key == "cpep_scale")
                cfg.scale = cpep_scale_from_int(static_cast<int>(parse_u64(key, value)));
            else if (key == "selection_snr_db")
                cfg.selection_snr_db = parse_double(key, value);
            else if (key == "min_errors")
                cfg.min_errors = parse_u64(key, value);
            else if (key == "max_matrices")
                cfg.max_matrices = parse_u64(key, value);
            else if (key == "ber_target")
                cfg.ber_target = parse_double(key, value);
            else if (key == "p_cap")
                cfg.p_cap = parse_unsigned(key, value);
            else if (key == "t_values")
                cfg.t_values = parse_unsigned_list(key, value);
            else if (key == "ns_eta")
                cfg.ns_eta = parse_double(key, value);
            else if (key == "ns_p")
                cfg.ns_p = parse_unsigned(key, value);
            else if (key == "rate_snr_db")
                cfg.rate_snr_db = parse_double(key, value);
            else if (key == "pair_cap_log2")
                cfg.pair_cap = std::uint64_t{1} << parse_unsigned(key, value);
            else if (key == "exhaustive_cap")
                cfg.exhaustive_cap = parse_u64(key, value);
            else
                throw config_error("config: unknown key '" + key + "' in [sweep]");
        }
        else if (section == "output")
        {
            if (key == "grid_nx")
                cfg.grid_nx = parse_unsigned(key, value);
            else if (key == "grid_ny")
                cfg.grid_ny = parse_unsigned(key, value);
            else if (key == "grid_x_max")
                cfg.grid_x_max = parse_double(key, value);
            else if (key == "grid_y_max")
                cfg.grid_y_max = parse_double(key, value);
            else if (key == "grid_z")
                cfg.grid_z = parse_double(key, value);
            else if (key == "illum_eta")
                cfg.illum_eta = parse_double(key, value);
            else
                throw config_error("config: unknown key '" + key + "' in [output]");
        }
        else
            throw config_error("config line " + std::to_string(line_no) +
                               ": key outside any [section]");
    }

    apply_geometry(cfg, geo);
    if (cfg.room.leds.size() != cfg.n_t)
        throw config_error("config: n_t does not match the LED list");
    return cfg;
}

experiment_config load_config(const std::string &path)
{
    if (path.empty())
        return parse_config("");
    std::ifstream in(path);
    if (!in)
        throw config_error("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::uint64_t config_digest(const experiment_config &cfg)
{
    // Canonical text form hashed with FNV-1a; stable across runs since all
    // numbers are printed with full precision.
    std::string s;
    char buf[64];
    auto put_d = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g|", v);
        s += buf;
    };
    auto put_u = [&](std::uint64_t v) {
        std::snprintf(buf, sizeof(buf), "%llu|", static_cast<unsigned long long>(v));
        s += buf;
    };

    for (const auto &l : cfg.room.leds)
    {
        put_d(l.position[0]);
        put_d(l.position[1]);
        put_d(l.position[2]);
        put_d(l.half_angle_deg);
    }
    for (const auto &p : cfg.room.pds)
    {
        put_d(p.position[0]);
        put_d(p.position[1]);
        put_d(p.position[2]);
        put_d(p.fov_deg);
        put_d(p.area_m2);
        put_d(p.refractive_index);
    }
    put_u(cfg.n_t);
    put_u(cfg.t);
    put_u(cfg.p);
    put_d(cfg.i_low);
    put_d(cfg.i_high);
    for (double v : cfg.dimming_levels)
        put_d(v);
    for (double v : cfg.eta_grid)
        put_d(v);
    for (double v : cfg.rate_eta_grid)
        put_d(v);
    for (double v : cfg.snr_db)
        put_d(v);
    s += selection_method_name(cfg.selector);
    s += '|';
    for (picker_method m : cfg.methods)
    {
        s += picker_method_name(m);
        s += '|';
    }
    put_u(static_cast<std::uint64_t>(cpep_scale_to_int(cfg.scale)));
    put_d(cfg.selection_snr_db);
    put_u(cfg.min_errors);
    put_u(cfg.max_matrices);
    put_d(cfg.ber_target);
    put_u(cfg.p_cap);
    for (unsigned v : cfg.t_values)
        put_u(v);
    put_d(cfg.ns_eta);
    put_u(cfg.ns_p);
    put_d(cfg.rate_snr_db);
    put_u(cfg.pair_cap);
    put_u(cfg.exhaustive_cap);
    put_u(cfg.grid_nx);
    put_u(cfg.grid_ny);
    put_d(cfg.grid_x_max);
    put_d(cfg.grid_y_max);
    put_d(cfg.grid_z);
    put_d(cfg.illum_eta);

    std::uint64_t hash = 0xCBF29CE484222325ull;
    for (unsigned char c : s)
    {
        hash ^= c;
        hash *= 0x100000001B3ull;
    }
    return hash;
}

} // namespace gdc
