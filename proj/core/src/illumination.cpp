// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "gdc/illumination.hpp"

#include <cmath>
#include <numbers>

#include "gdc/errors.hpp"

namespace gdc
{

namespace
{

double axis_value(double lo, double hi, unsigned i, unsigned n)
{
    if (n < 2)
        return lo;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

} // namespace

double illumination_grid::x_at(unsigned ix) const
{
    return axis_value(x_min, x_max, ix, nx);
}

double illumination_grid::y_at(unsigned iy) const
{
    return axis_value(y_min, y_max, iy, ny);
}

illumination_grid illuminance_map(const std::vector<led> &leds,
                                  const std::vector<double> &activation_probs, double eta_e,
                                  unsigned nx, unsigned ny, double x_min, double x_max,
                                  double y_min, double y_max, double z)
{
    if (leds.size() != activation_probs.size())
        throw config_error("illuminance_map: one activation probability per LED required");
    if (nx == 0 || ny == 0)
        throw config_error("illuminance_map: empty grid");

    illumination_grid grid;
    grid.nx = nx;
    grid.ny = ny;
    grid.x_min = x_min;
    grid.x_max = x_max;
    grid.y_min = y_min;
    grid.y_max = y_max;
    grid.z = z;
    grid.values.assign(static_cast<std::size_t>(nx) * ny, 0.0);

    for (unsigned iy = 0; iy < ny; ++iy)
    {
        const double y = grid.y_at(iy);
        for (unsigned ix = 0; ix < nx; ++ix)
        {
            const double x = grid.x_at(ix);
            double e = 0.0;
            for (std::size_t n = 0; n < leds.size(); ++n)
            {
                const double dx = x - leds[n].position[0];
                const double dy = y - leds[n].position[1];
                const double dz = z - leds[n].position[2];
                const double d2 = dx * dx + dy * dy + dz * dz;
                const double cos_angle = -dz / std::sqrt(d2);
                if (cos_angle <= 0.0)
                    continue;
                const double l = lambert_order(leds[n].half_angle_deg);
                // Scale-free Lambertian kernel on the horizontal plane: the
                // beam cosine and the plane-incidence cosine coincide, and
                // receiver optics play no part in perceived light.
                e += activation_probs[n] * eta_e * std::pow(cos_angle, l + 1.0) / d2;
            }
            grid.values[static_cast<std::size_t>(iy) * nx + ix] = e;
        }
    }
    return grid;
}

double uniformity_ratio(const illumination_grid &grid)
{
    if (grid.values.empty())
        throw config_error("uniformity_ratio: empty grid");
    double minimum = grid.values.front();
    double sum = 0.0;
    for (double v : grid.values)
    {
        minimum = std::min(minimum, v);
        sum += v;
    }
    const double mean = sum / static_cast<double>(grid.values.size());
    if (!(mean > 0.0))
        throw numeric_error("uniformity_ratio: field has non-positive mean");
    return minimum / mean;
}

double normalized_uniformity(const std::vector<led> &leds,
                             const std::vector<double> &activation_probs, double eta_e,
                             unsigned nx, unsigned ny, double x_min, double x_max, double y_min,
                             double y_max, double z)
{
    const illumination_grid actual =
        illuminance_map(leds, activation_probs, eta_e, nx, ny, x_min, x_max, y_min, y_max, z);
    const std::vector<double> uniform(leds.size(), 1.0 / static_cast<double>(leds.size()));
    const illumination_grid reference =
        illuminance_map(leds, uniform, eta_e, nx, ny, x_min, x_max, y_min, y_max, z);
    return uniformity_ratio(actual) / uniformity_ratio(reference);
}

} // namespace gdc
