// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "gdc/config.hpp"
#include "gdc/csv.hpp"
#include "gdc/errors.hpp"

using namespace gdc;

TEST_SUITE_BEGIN("config");

TEST_CASE("defaults describe the reference room")
{
    const experiment_config cfg = parse_config("");

    REQUIRE(cfg.room.leds.size() == 4);
    REQUIRE(cfg.room.pds.size() == 4);
    CHECK(cfg.room.leds[0].position == vec3{1.0, 1.0, 2.5});
    CHECK(cfg.room.leds[3].position == vec3{3.0, 3.0, 2.5});
    CHECK(cfg.room.leds[0].half_angle_deg == 60.0);
    CHECK(cfg.room.pds[0].position == vec3{1.9, 1.9, 0.75});
    CHECK(cfg.room.pds[0].fov_deg == 40.0);
    CHECK(cfg.room.pds[0].area_m2 == 1e-4);
    CHECK(cfg.room.pds[0].refractive_index == 1.5);

    CHECK(cfg.n_t == 4);
    CHECK(cfg.t == 2);
    CHECK(cfg.p == 8);
    CHECK(cfg.i_low == 0.1);
    CHECK(cfg.i_high == 2.0);

    CHECK(cfg.dimming_levels == std::vector<double>{0.35, 0.5, 0.65, 0.8});
    REQUIRE(cfg.eta_grid.size() == 19);
    CHECK(cfg.eta_grid.front() == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(cfg.eta_grid.back() == doctest::Approx(0.95).epsilon(1e-15));
    REQUIRE(cfg.rate_eta_grid.size() == 9);
    CHECK(cfg.snr_db == std::vector<double>{16.0, 20.0, 24.0, 28.0, 32.0});
    CHECK(cfg.selector == selection_method::incremental);
    REQUIRE(cfg.methods.size() == 3);
    CHECK(cfg.methods[0] == picker_method::mber);
    CHECK(cfg.scale == cpep_scale::ml_scaled);
    CHECK(cfg.min_errors == 200);
    CHECK(cfg.max_matrices == 10000000);
    CHECK(cfg.t_values == std::vector<unsigned>{2, 3});
    CHECK(cfg.ns_eta == 0.5);
    CHECK(cfg.ns_p == 9);
    CHECK(cfg.grid_nx == 50);
    CHECK(cfg.grid_z == 0.75);
    CHECK(cfg.illum_eta == 0.2);

    // An empty path is the documented spelling of "defaults only".
    const experiment_config from_path = load_config("");
    CHECK(config_digest(from_path) == config_digest(cfg));
}

TEST_CASE("overrides parse from all four sections")
{
    const char *text = R"(# reference override file
[geometry]
led_positions = 0,0,3 ; 2,0,3   # two-LED ceiling strip
pd_positions  = 1,0,0.5
led_half_angle_deg = 70
pd_fov_deg = 35
pd_area_m2 = 2e-4
pd_refractive_index = 1.4

[system]
n_t = 2
t = 3
p = 6
i_low = 0.2
i_high = 1.5

[sweep]
dimming_levels = 0.3, 0.6
eta_grid = 0.25,0.5,0.75
snr_db = 10, 20
selector = sequential
method = mfd2
cpep_scale = 2
selection_snr_db = 25
min_errors = 80
max_matrices = 12345
ber_target = 1e-3
p_cap = 9
t_values = 1,2,4
ns_eta = 0.4
ns_p = 7
rate_snr_db = 22
pair_cap_log2 = 20
exhaustive_cap = 500

[output]
grid_nx = 11
grid_ny = 13
grid_x_max = 5
grid_y_max = 6
grid_z = 0.8
illum_eta = 0.3
)";
    const experiment_config cfg = parse_config(text);

    REQUIRE(cfg.room.leds.size() == 2);
    CHECK(cfg.room.leds[1].position == vec3{2.0, 0.0, 3.0});
    CHECK(cfg.room.leds[1].half_angle_deg == 70.0);
    REQUIRE(cfg.room.pds.size() == 1);
    CHECK(cfg.room.pds[0].fov_deg == 35.0);
    CHECK(cfg.room.pds[0].area_m2 == 2e-4);
    CHECK(cfg.room.pds[0].refractive_index == 1.4);

    CHECK(cfg.n_t == 2);
    CHECK(cfg.t == 3);
    CHECK(cfg.p == 6);
    CHECK(cfg.i_low == 0.2);
    CHECK(cfg.i_high == 1.5);

    CHECK(cfg.dimming_levels == std::vector<double>{0.3, 0.6});
    CHECK(cfg.eta_grid == std::vector<double>{0.25, 0.5, 0.75});
    CHECK(cfg.snr_db == std::vector<double>{10.0, 20.0});
    CHECK(cfg.selector == selection_method::sequential);
    REQUIRE(cfg.methods.size() == 1);
    CHECK(cfg.methods[0] == picker_method::mfd2);
    CHECK(cfg.scale == cpep_scale::half_scaled);
    CHECK(cfg.selection_snr_db == 25.0);
    CHECK(cfg.min_errors == 80);
    CHECK(cfg.max_matrices == 12345);
    CHECK(cfg.ber_target == 1e-3);
    CHECK(cfg.p_cap == 9);
    CHECK(cfg.t_values == std::vector<unsigned>{1, 2, 4});
    CHECK(cfg.ns_eta == 0.4);
    CHECK(cfg.ns_p == 7);
    CHECK(cfg.rate_snr_db == 22.0);
    CHECK(cfg.pair_cap == (1ull << 20));
    CHECK(cfg.exhaustive_cap == 500);

    CHECK(cfg.grid_nx == 11);
    CHECK(cfg.grid_ny == 13);
    CHECK(cfg.grid_x_max == 5.0);
    CHECK(cfg.grid_y_max == 6.0);
    CHECK(cfg.grid_z == 0.8);
    CHECK(cfg.illum_eta == 0.3);
}

TEST_CASE("method keyword accepts each picker and the all shorthand")
{
    CHECK(parse_config("[sweep]\nmethod = mber\n").methods ==
          std::vector<picker_method>{picker_method::mber});
    CHECK(parse_config("[sweep]\nmethod = mfd1\n").methods ==
          std::vector<picker_method>{picker_method::mfd1});
    CHECK(parse_config("[sweep]\nmethod = all\n").methods.size() == 3);
    CHECK_THROWS_AS((void)parse_config("[sweep]\nmethod = fastest\n"), config_error);

    CHECK(picker_method_from_name("mfd2") == picker_method::mfd2);
    CHECK(picker_method_name(picker_method::mber) == std::string("mber"));
    CHECK(picker_method_from_name(picker_method_name(picker_method::mfd1)) ==
          picker_method::mfd1);
}

TEST_CASE("malformed input is rejected with a config error")
{
    CHECK_THROWS_AS((void)parse_config("[nosuch]\n"), config_error);
    CHECK_THROWS_AS((void)parse_config("[sweep]\nwarp_factor = 9\n"), config_error);
    CHECK_THROWS_AS((void)parse_config("[system]\nwarp_factor = 9\n"), config_error);
    CHECK_THROWS_AS((void)parse_config("[geometry]\nwarp_factor = 9\n"), config_error);
    CHECK_THROWS_AS((void)parse_config("[output]\nwarp_factor = 9\n"), config_error);
    CHECK_THROWS_AS((void)parse_config("n_t = 4\n"), config_error);  // key before section
    CHECK_THROWS_AS((void)parse_config("[system]\nn_t\n"), config_error); // missing '='
    CHECK_THROWS_AS((void)parse_config("[system]\n = 4\n"), config_error); // empty key
    CHECK_THROWS_AS((void)parse_config("[system]\ni_low = fast\n"), config_error);
    CHECK_THROWS_AS((void)parse_config("[system]\nn_t = 4.5\n"), config_error);
    CHECK_THROWS_AS((void)parse_config("[system]\nn_t = 5000000000\n"), config_error);
    CHECK_THROWS_AS((void)parse_config("[geometry]\nled_positions = 1,2\n"), config_error);
    CHECK_THROWS_AS((void)parse_config("[sweep"), config_error); // unterminated header
    // Geometry and n_t must agree.
    CHECK_THROWS_AS((void)parse_config("[system]\nn_t = 3\n"), config_error);

    CHECK_THROWS_AS((void)load_config("/nonexistent/path/gdc.conf"), config_error);

    // Line numbers make parse failures actionable.
    try
    {
        (void)parse_config("[system]\nn_t = 4\nbroken line\n");
        FAIL("expected config_error");
    }
    catch (const config_error &e)
    {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("digest is stable and sensitive")
{
    const experiment_config base = parse_config("");
    CHECK(config_digest(base) == config_digest(parse_config("")));

    CHECK(config_digest(parse_config("[system]\np = 9\n")) != config_digest(base));
    CHECK(config_digest(parse_config("[sweep]\neta_grid = 0.5\n")) != config_digest(base));
    CHECK(config_digest(parse_config("[geometry]\nled_half_angle_deg = 61\n")) !=
          config_digest(base));
    CHECK(config_digest(parse_config("[output]\ngrid_z = 0.8\n")) != config_digest(base));
}

TEST_CASE("number formatting is shortest round-trip")
{
    CHECK(format_number(0.35) == "0.35");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(std::uint64_t{42}) == "42");

    const double samples[] = {0.05,
                              1e-4,
                              2.952171928085784e-09,
                              0.41931315880966524,
                              123456.789,
                              -3.838862158332688e-05};
    for (double v : samples)
    {
        const std::string s = format_number(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("csv writer emits deterministic text")
{
    csv_writer w;
    w.comment("provenance");
    w.header({"eta", "ber"});
    w.row({format_number(0.35), format_number(3.8e-05)});
    CHECK(w.text() == "# provenance\neta,ber\n0.35,3.8e-05\n");

    const std::string path = "gdc_csv_test.tmp";
    w.save(path);
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    CHECK(content == w.text());
    std::remove(path.c_str());

    csv_writer bad;
    bad.header({"x"});
    CHECK_THROWS_AS(bad.save("/nonexistent-dir/out.csv"), std::runtime_error);
}

TEST_SUITE_END();
