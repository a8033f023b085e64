// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "gdc/errors.hpp"
#include "gdc/experiments.hpp"
#include "gdc/rng.hpp"
#include "gdc/version.hpp"

namespace
{

struct cli_options
{
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = gdc::default_seed;
    std::string method; // empty keeps the config's choice
    int cpep_scale = 0; // 0 keeps the config's choice
};

void add_common(CLI::App *cmd, cli_options &opt)
{
    cmd->add_option("--config", opt.config_path, "experiment config file (key=value)");
    cmd->add_option("--seed", opt.seed, "root seed for all random streams");
    cmd->add_option("--out", opt.out_dir, "output directory for CSV files");
    cmd->add_option("--method", opt.method, "N_S picker: mber, mfd1, mfd2, or all")
        ->check(CLI::IsMember({"mber", "mfd1", "mfd2", "all"}));
    cmd->add_option("--cpep-scale", opt.cpep_scale, "pairwise error noise scale: 2 or 4")
        ->check(CLI::IsMember({2, 4}));
}

gdc::experiment_config make_config(const cli_options &opt)
{
    gdc::experiment_config cfg = gdc::load_config(opt.config_path);
    if (!opt.method.empty())
    {
        if (opt.method == "all")
            cfg.methods = {gdc::picker_method::mber, gdc::picker_method::mfd1,
                           gdc::picker_method::mfd2};
        else
            cfg.methods = {gdc::picker_method_from_name(opt.method)};
    }
    if (opt.cpep_scale != 0)
        cfg.scale = gdc::cpep_scale_from_int(opt.cpep_scale);
    return cfg;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{std::string("gdc ") + gdc::version_string +
                 ": dimming-aware VLC link design and simulation sweeps"};
    app.require_subcommand(1);
    app.set_version_flag("--version", gdc::version_string);

    cli_options opt;
    CLI::App *uidr = app.add_subcommand("uidr", "illumination uniformity vs dimming level");
    CLI::App *illum = app.add_subcommand("illum", "spatial illuminance maps at one level");
    CLI::App *ber = app.add_subcommand("ber", "Monte Carlo BER curves with union bounds");
    CLI::App *ns = app.add_subcommand("ns", "design table over eligible active-cell counts");
    CLI::App *rate = app.add_subcommand("rate", "highest rate meeting the BER target");
    for (CLI::App *cmd : {uidr, illum, ber, ns, rate})
        add_common(cmd, opt);

    CLI11_PARSE(app, argc, argv);

    try
    {
        const gdc::experiment_config cfg = make_config(opt);
        if (uidr->parsed())
            gdc::run_uidr_sweep(cfg, opt.out_dir, opt.seed);
        else if (illum->parsed())
            gdc::run_illuminance_map(cfg, opt.out_dir, opt.seed);
        else if (ber->parsed())
            gdc::run_ber_sweep(cfg, opt.out_dir, opt.seed);
        else if (ns->parsed())
            gdc::run_ns_sweep(cfg, opt.out_dir, opt.seed);
        else if (rate->parsed())
            gdc::run_rate_sweep(cfg, opt.out_dir, opt.seed);
    }
    catch (const gdc::config_error &e)
    {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    }
    catch (const gdc::infeasible_error &e)
    {
        std::fprintf(stderr, "infeasible configuration: %s\n", e.what());
        return 3;
    }
    catch (const gdc::resource_error &e)
    {
        std::fprintf(stderr, "resource cap exceeded: %s\n", e.what());
        return 4;
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
