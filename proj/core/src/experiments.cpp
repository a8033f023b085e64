// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "gdc/experiments.hpp"

#include <cstdio>
#include <filesystem>

#include "gdc/csv.hpp"
#include "gdc/errors.hpp"
#include "gdc/illumination.hpp"
#include "gdc/parallel.hpp"
#include "gdc/version.hpp"

namespace gdc
{

namespace
{

std::string hex64(std::uint64_t v)
{
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

void stamp(csv_writer &csv, const experiment_config &cfg, const char *command,
           std::uint64_t seed)
{
    csv.comment(std::string("gdc ") + version_string);
    csv.comment(std::string("command: ") + command);
    csv.comment("config: " + hex64(config_digest(cfg)));
    csv.comment("seed: " + format_number(seed));
}

std::string out_path(const std::string &out_dir, const char *name)
{
    std::filesystem::create_directories(out_dir);
    return (std::filesystem::path(out_dir) / name).string();
}

void announce(const char *command, const std::string &path)
{
    std::printf("%s: wrote %s\n", command, path.c_str());
}

// Operating N_S for one dimming level under the configured picker. The
// union-bound picker compares candidates at a noise level anchored to the
// full-activation configuration, so every candidate sees the same N_0.
unsigned pick_ns(const Eigen::MatrixXd &h, const experiment_config &cfg, picker_method method,
                 double eta, unsigned p, unsigned t)
{
    if (method == picker_method::mber)
    {
        const codebook ref = select_sequential(cfg.n_t, t, cfg.n_t * t, 0);
        const constellation ref_cons =
            optimal_constellation(eta, 1u << p, cfg.i_low, cfg.i_high);
        const double n0 = snr_to_n0(cfg.selection_snr_db, h, ref, ref_cons);
        return select_ns_mber(h, eta, p, cfg.n_t, t, cfg.i_low, cfg.i_high, n0, cfg.selector,
                              cfg.scale, cfg.pair_cap)
            .n_s;
    }
    const fd_method fd = method == picker_method::mfd1 ? fd_method::mfd1 : fd_method::mfd2;
    return select_ns_mfd(h, eta, p, cfg.n_t, t, cfg.i_low, cfg.i_high, fd, cfg.selector).n_s;
}

} // namespace

void run_uidr_sweep(const experiment_config &cfg, const std::string &out_dir,
                    std::uint64_t seed)
{
    const Eigen::MatrixXd h = build_channel_matrix(cfg.room);
    const picker_method method = cfg.methods.front();

    struct uidr_row
    {
        unsigned n_s = 0;
        dimming_plan plan;
        double nuir[2] = {0.0, 0.0};
        std::string skip; // infeasible note; the row is omitted when set
    };
    std::vector<uidr_row> rows(cfg.eta_grid.size());

    parallel_for(rows.size(), [&](std::size_t i) {
        uidr_row &row = rows[i];
        const double eta = cfg.eta_grid[i];
        try
        {
            row.n_s = pick_ns(h, cfg, method, eta, cfg.p, cfg.t);
        }
        catch (const infeasible_error &e)
        {
            row.skip = e.what();
            return;
        }
        row.plan = resolve_plan(cfg.n_t, cfg.t, cfg.p, eta, row.n_s);

        const selection_method selectors[2] = {selection_method::incremental,
                                               selection_method::sequential};
        for (int s = 0; s < 2; ++s)
        {
            const codebook cb = select_patterns(selectors[s], cfg.n_t, cfg.t, row.n_s,
                                                row.plan.p1, cfg.exhaustive_cap);
            row.nuir[s] = normalized_uniformity(cfg.room.leds, activation_probability(cb),
                                                row.plan.eta_e, cfg.grid_nx, cfg.grid_ny, 0.0,
                                                cfg.grid_x_max, 0.0, cfg.grid_y_max,
                                                cfg.grid_z);
        }
    });

    csv_writer csv;
    stamp(csv, cfg, "uidr", seed);
    csv.header({"eta", "n_s", "p1", "m", "eta_e", "nuir_incremental", "nuir_sequential",
                "nuir_nonspatial"});

    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        const uidr_row &row = rows[i];
        if (!row.skip.empty())
        {
            std::fprintf(stderr, "uidr: skipping eta=%g: %s\n", cfg.eta_grid[i],
                         row.skip.c_str());
            continue;
        }
        // The equal-probability reference normalised by itself is 1 by
        // construction; emitted anyway to keep plot columns aligned.
        csv.row({format_number(cfg.eta_grid[i]), format_number(std::uint64_t{row.n_s}),
                 format_number(std::uint64_t{row.plan.p1}),
                 format_number(std::uint64_t{row.plan.m}), format_number(row.plan.eta_e),
                 format_number(row.nuir[0]), format_number(row.nuir[1]),
                 format_number(1.0)});
    }

    const std::string path = out_path(out_dir, "uidr.csv");
    csv.save(path);
    announce("uidr", path);
}

void run_illuminance_map(const experiment_config &cfg, const std::string &out_dir,
                         std::uint64_t seed)
{
    const Eigen::MatrixXd h = build_channel_matrix(cfg.room);
    const picker_method method = cfg.methods.front();
    const double eta = cfg.illum_eta;

    const unsigned n_s = pick_ns(h, cfg, method, eta, cfg.p, cfg.t);
    const dimming_plan plan = resolve_plan(cfg.n_t, cfg.t, cfg.p, eta, n_s);

    const selection_method selectors[2] = {selection_method::incremental,
                                           selection_method::sequential};
    const char *names[2] = {"illum_incremental.csv", "illum_sequential.csv"};
    for (int i = 0; i < 2; ++i)
    {
        const codebook cb =
            select_patterns(selectors[i], cfg.n_t, cfg.t, n_s, plan.p1, cfg.exhaustive_cap);
        const illumination_grid grid = illuminance_map(
            cfg.room.leds, activation_probability(cb), plan.eta_e, cfg.grid_nx, cfg.grid_ny,
            0.0, cfg.grid_x_max, 0.0, cfg.grid_y_max, cfg.grid_z);

        csv_writer csv;
        stamp(csv, cfg, "illum", seed);
        csv.comment("eta: " + format_number(eta) + "  n_s: " +
                    format_number(std::uint64_t{n_s}) + "  selector: " +
                    selection_method_name(selectors[i]));
        csv.header({"x", "y", "illuminance"});
        for (unsigned iy = 0; iy < grid.ny; ++iy)
            for (unsigned ix = 0; ix < grid.nx; ++ix)
                csv.row({format_number(grid.x_at(ix)), format_number(grid.y_at(iy)),
                         format_number(grid.values[static_cast<std::size_t>(iy) * grid.nx +
                                                   ix])});

        const std::string path = out_path(out_dir, names[i]);
        csv.save(path);
        announce("illum", path);
    }
}

void run_ber_sweep(const experiment_config &cfg, const std::string &out_dir,
                   std::uint64_t seed)
{
    const Eigen::MatrixXd h = build_channel_matrix(cfg.room);
    const stop_rule stop{cfg.min_errors, cfg.max_matrices};

    // One task per (dimming level, picker) curve; the points inside a curve
    // share one sequential noise stream, so the curve is the parallel unit.
    struct ber_curve
    {
        double eta = 0.0;
        std::size_t mi = 0;
        unsigned n_s = 0;
        dimming_plan plan;
        std::vector<ber_point> points;
        std::vector<double> bounds;
    };
    std::vector<ber_curve> curves;
    for (double eta : cfg.dimming_levels)
        for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi)
            curves.push_back({eta, mi, 0, {}, {}, {}});

    parallel_for(curves.size(), [&](std::size_t i) {
        ber_curve &c = curves[i];
        const picker_method method = cfg.methods[c.mi];
        c.n_s = pick_ns(h, cfg, method, c.eta, cfg.p, cfg.t);
        c.plan = resolve_plan(cfg.n_t, cfg.t, cfg.p, c.eta, c.n_s);
        const codebook cb =
            select_patterns(cfg.selector, cfg.n_t, cfg.t, c.n_s, c.plan.p1, cfg.exhaustive_cap);
        const constellation cons =
            optimal_constellation(c.plan.eta_e, c.plan.m, cfg.i_low, cfg.i_high);

        // Sub-seed by dimming level and picker so each curve owns a stable
        // stream regardless of sweep composition.
        const std::uint64_t curve_seed =
            derive_subseed(derive_subseed(seed, subseed_tag(c.eta)), c.mi);
        c.points = ber_monte_carlo(h, cb, cons, cfg.snr_db, stop, curve_seed);
        for (const ber_point &pt : c.points)
            c.bounds.push_back(
                union_bound(h, cb, cons, snr_to_n0(pt.snr_db, h, cb, cons), cfg.scale,
                            cfg.pair_cap));
    });

    csv_writer csv;
    stamp(csv, cfg, "ber", seed);
    csv.comment(std::string("selector: ") + selection_method_name(cfg.selector) +
                "  cpep_scale: " + format_number(std::uint64_t(cpep_scale_to_int(cfg.scale))));
    csv.header({"eta", "method", "n_s", "p1", "m", "snr_db", "ber", "std_error", "bit_errors",
                "bits", "upper_bound_only", "union_bound"});

    for (const ber_curve &c : curves)
        for (std::size_t k = 0; k < c.points.size(); ++k)
        {
            const ber_point &pt = c.points[k];
            csv.row({format_number(c.eta), picker_method_name(cfg.methods[c.mi]),
                     format_number(std::uint64_t{c.n_s}),
                     format_number(std::uint64_t{c.plan.p1}),
                     format_number(std::uint64_t{c.plan.m}), format_number(pt.snr_db),
                     format_number(pt.ber), format_number(pt.std_error),
                     format_number(pt.bit_errors), format_number(pt.bits),
                     format_number(std::uint64_t(pt.upper_bound_only ? 1 : 0)),
                     format_number(c.bounds[k])});
        }

    const std::string path = out_path(out_dir, "ber.csv");
    csv.save(path);
    announce("ber", path);
}

void run_ns_sweep(const experiment_config &cfg, const std::string &out_dir,
                  std::uint64_t seed)
{
    const Eigen::MatrixXd h = build_channel_matrix(cfg.room);
    const auto n_r = static_cast<unsigned>(cfg.room.pds.size());
    const stop_rule stop{cfg.min_errors, cfg.max_matrices};
    const double eta = cfg.ns_eta;
    const unsigned p = cfg.ns_p;

    struct ns_cell
    {
        unsigned t = 0;
        unsigned n_s = 0;
        dimming_plan plan;
        free_distance_report exact;
        free_distance_report bound1;
        double bound = 0.0;
        ber_point point;
        flop_estimate flops;
    };
    std::vector<ns_cell> cells;
    for (unsigned t : cfg.t_values)
    {
        const ns_range range = eligible_ns_range(cfg.n_t, t, eta);
        for (unsigned n_s = range.lo; n_s <= range.hi; ++n_s)
            cells.push_back({t, n_s, {}, {}, {}, 0.0, {}, {}});
    }

    parallel_for(cells.size(), [&](std::size_t i) {
        ns_cell &cell = cells[i];
        const unsigned t = cell.t;
        const codebook ref = select_sequential(cfg.n_t, t, cfg.n_t * t, 0);
        const constellation ref_cons =
            optimal_constellation(eta, 1u << p, cfg.i_low, cfg.i_high);
        const double n0 = snr_to_n0(cfg.selection_snr_db, h, ref, ref_cons);

        cell.plan = resolve_plan(cfg.n_t, t, p, eta, cell.n_s);
        const codebook cb =
            select_patterns(cfg.selector, cfg.n_t, t, cell.n_s, cell.plan.p1,
                            cfg.exhaustive_cap);
        const constellation cons =
            optimal_constellation(cell.plan.eta_e, cell.plan.m, cfg.i_low, cfg.i_high);

        cell.exact = mfd2_distance(h, cb, cons);
        cell.bound1 = mfd1_bound(h, cb, cons);
        cell.bound = union_bound(h, cb, cons, n0, cfg.scale, cfg.pair_cap);
        cell.point = ber_monte_carlo(h, cb, cons, {cfg.selection_snr_db}, stop,
                                     derive_subseed(seed, std::uint64_t{t} << 32 | cell.n_s))
                         .front();
        cell.flops = flop_estimates(cfg.n_t, n_r, t, cell.n_s, p, cell.plan.p1);
    });

    csv_writer csv;
    stamp(csv, cfg, "ns", seed);
    csv.comment("eta: " + format_number(eta) + "  p: " + format_number(std::uint64_t{p}) +
                "  snr_db: " + format_number(cfg.selection_snr_db));
    csv.header({"t", "eta", "n_s", "p1", "m", "eta_e", "d1", "d2", "d_free", "mfd1_d_free",
                "union_bound", "ber", "std_error", "flops_mber", "flops_mfd1", "flops_mfd2"});

    for (const ns_cell &cell : cells)
        csv.row({format_number(std::uint64_t{cell.t}), format_number(eta),
                 format_number(std::uint64_t{cell.n_s}),
                 format_number(std::uint64_t{cell.plan.p1}),
                 format_number(std::uint64_t{cell.plan.m}), format_number(cell.plan.eta_e),
                 format_number(cell.exact.d1), format_number(cell.exact.d2),
                 format_number(cell.exact.d_free), format_number(cell.bound1.d_free),
                 format_number(cell.bound), format_number(cell.point.ber),
                 format_number(cell.point.std_error), format_number(cell.flops.mber),
                 format_number(cell.flops.mfd1), format_number(cell.flops.mfd2)});

    const std::string path = out_path(out_dir, "ns.csv");
    csv.save(path);
    announce("ns", path);
}

void run_rate_sweep(const experiment_config &cfg, const std::string &out_dir,
                    std::uint64_t seed)
{
    const Eigen::MatrixXd h = build_channel_matrix(cfg.room);

    struct rate_cell
    {
        double eta = 0.0;
        std::size_t mi = 0;
        rate_search_result res;
    };
    std::vector<rate_cell> cells;
    for (double eta : cfg.rate_eta_grid)
        for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi)
            cells.push_back({eta, mi, {}});

    parallel_for(cells.size(), [&](std::size_t i) {
        rate_cell &cell = cells[i];
        const picker_method method = cfg.methods[cell.mi];
        rate_search_options opt;
        opt.n_t = cfg.n_t;
        opt.t = cfg.t;
        opt.i_low = cfg.i_low;
        opt.i_high = cfg.i_high;
        opt.ber_target = cfg.ber_target;
        opt.p_cap = cfg.p_cap;
        opt.selector = cfg.selector;
        opt.use_mber = method == picker_method::mber;
        opt.fd = method == picker_method::mfd1 ? fd_method::mfd1 : fd_method::mfd2;
        opt.selection_snr_db = cfg.selection_snr_db;
        opt.scale = cfg.scale;
        opt.pair_cap = cfg.pair_cap;
        opt.stop = stop_rule{cfg.min_errors, cfg.max_matrices};

        cell.res = max_rate_search(
            h, cell.eta, cfg.rate_snr_db, opt,
            derive_subseed(derive_subseed(seed, subseed_tag(cell.eta)), cell.mi));
    });

    csv_writer csv;
    stamp(csv, cfg, "rate", seed);
    csv.comment("snr_db: " + format_number(cfg.rate_snr_db) + "  ber_target: " +
                format_number(cfg.ber_target));
    csv.header({"eta", "method", "snr_db", "p_max", "n_s", "ber", "met_target"});

    for (const rate_cell &cell : cells)
        csv.row({format_number(cell.eta), picker_method_name(cfg.methods[cell.mi]),
                 format_number(cfg.rate_snr_db), format_number(std::uint64_t{cell.res.p}),
                 format_number(std::uint64_t{cell.res.n_s}), format_number(cell.res.ber),
                 format_number(std::uint64_t(cell.res.met_target ? 1 : 0))});

    const std::string path = out_path(out_dir, "rate.csv");
    csv.save(path);
    announce("rate", path);
}

} // namespace gdc
