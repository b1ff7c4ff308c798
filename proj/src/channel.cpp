// SPDX-License-Identifier: Apache-2.0
//
// irsuav: IRS-assisted cellular downlink simulation for UAV receivers
// Copyright (C) 2026 The irsuav developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "irsuav/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "irsuav/error.hpp"
#include "irsuav/kernels/kernels.hpp"

namespace irsuav
{
    namespace
    {
        constexpr double kRadToDeg = 180.0 / std::numbers::pi;

        double link_power(const LinkParams &link, double theta_gain_db, double d1, double d2, double receiver_height,
                          double reflection_loss_db)
        {
            const double pl_first = pl_bs_to_element(d1, receiver_height, link.pathloss);
            const double pl_second = pl_element_to_uav(d1, d2, receiver_height, link.pathloss);
            return link.p_t_dbm + theta_gain_db - (pl_first + pl_second) - reflection_loss_db;
        }
    }

    double wavelength(double f_ghz)
    {
        if (!(f_ghz > 0.0))
            throw InvalidParameter("carrier frequency must be positive");
        return kSpeedOfLight / (f_ghz * 1e9);
    }

    double wrap_phase(double phase)
    {
        double r = std::fmod(phase, kTwoPi);
        if (r < 0.0)
            r += kTwoPi;
        if (r >= kTwoPi)
            r = 0.0;
        return r;
    }

    double propagation_phase(double path_length_m, double lambda_m)
    {
        // Reduce in cycles first so long paths keep full fractional precision.
        const double cycles = path_length_m / lambda_m;
        const double frac = cycles - std::floor(cycles);
        if (frac == 0.0)
            return 0.0;
        return wrap_phase(kTwoPi * (1.0 - frac));
    }

    double dbm_to_amplitude(double p_dbm)
    {
        return std::sqrt(std::pow(10.0, p_dbm / 10.0));
    }

    ChannelCoefficient los_coefficient(const ScenarioGeometry &geom, const LinkParams &link)
    {
        if (geom.bs == geom.uav)
            throw DegenerateGeometry("BS and UAV positions coincide");
        const double d = distance(geom.bs, geom.uav);
        const double theta = depression_angle(geom.bs, geom.uav);
        const double power = effective_tx_power(link.p_t_dbm, theta, link.antenna) - pl_los(d, link.pathloss);
        return {dbm_to_amplitude(power), propagation_phase(d, wavelength(link.pathloss.f_ghz))};
    }

    double reflected_path_power(const Position3D &point, const ScenarioGeometry &geom, const LinkParams &link,
                                double reflection_loss_db)
    {
        if (point == geom.bs || point == geom.uav)
            throw DegenerateGeometry("reflection point coincides with a link endpoint");
        const double d1 = distance(geom.bs, point);
        const double d2 = distance(point, geom.uav);
        const double theta = depression_angle(geom.bs, point);
        return link_power(link, vertical_gain(theta, link.antenna), d1, d2, geom.uav.z, reflection_loss_db);
    }

    ChannelCoefficient element_coefficient(std::size_t element_index, const ScenarioGeometry &geom,
                                           const LinkParams &link, PhaseMode mode)
    {
        if (element_index >= geom.elements.size())
            throw InvalidParameter("element index " + std::to_string(element_index) + " out of range");
        const Position3D &e = geom.elements[element_index];
        const double power = reflected_path_power(e, geom, link, link.reflection.pl_irs_db);

        double phase = 0.0;
        if (mode == PhaseMode::AlignedToLos)
            phase = los_coefficient(geom, link).phase;
        else
            phase = propagation_phase(distance(geom.bs, e) + distance(e, geom.uav), wavelength(link.pathloss.f_ghz));
        return {dbm_to_amplitude(power), phase};
    }

    ChannelCoefficient wall_ray_coefficient(const Position3D &scatter_point, const ScenarioGeometry &geom,
                                            const LinkParams &link)
    {
        const double power = reflected_path_power(scatter_point, geom, link, link.reflection.pl_wall_db);
        const double path = distance(geom.bs, scatter_point) + distance(scatter_point, geom.uav);
        return {dbm_to_amplitude(power), propagation_phase(path, wavelength(link.pathloss.f_ghz))};
    }

    double combine(std::span<const ChannelCoefficient> coeffs)
    {
        if (coeffs.empty())
            throw InvalidParameter("combine needs at least one coefficient");
        std::vector<double> amp(coeffs.size()), c(coeffs.size()), s(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i)
        {
            amp[i] = coeffs[i].amplitude;
            c[i] = std::cos(coeffs[i].phase);
            s[i] = std::sin(coeffs[i].phase);
        }
        return std::abs(kernels::active().phasor_sum(amp.data(), c.data(), s.data(), amp.size()));
    }

    void reflected_path_batch(const PointSet &points, const ScenarioGeometry &geom, const LinkParams &link,
                              double reflection_loss_db, std::span<double> amplitude, std::span<double> phase)
    {
        const std::size_t n = points.size();
        if (amplitude.size() != n || phase.size() != n)
            throw InvalidParameter("reflected_path_batch: output size mismatch");
        if (n == 0)
            return;

        const kernels::KernelTable &k = kernels::active();
        std::vector<double> d1(n), d2(n), horiz(n), theta(n), gain(n);
        k.segment_lengths(geom.bs, geom.uav, points.x.data(), points.y.data(), points.z.data(), n, d1.data(),
                          d2.data(), horiz.data());
        for (std::size_t i = 0; i < n; ++i)
        {
            if (d1[i] == 0.0 || d2[i] == 0.0)
                throw DegenerateGeometry("reflection point coincides with a link endpoint");
            theta[i] = std::atan2(geom.bs.z - points.z[i], horiz[i]) * kRadToDeg;
        }
        k.vertical_gain(theta.data(), n, link.antenna, gain.data());

        const double lambda = wavelength(link.pathloss.f_ghz);
        for (std::size_t i = 0; i < n; ++i)
        {
            amplitude[i] = dbm_to_amplitude(link_power(link, gain[i], d1[i], d2[i], geom.uav.z, reflection_loss_db));
            phase[i] = propagation_phase(d1[i] + d2[i], lambda);
        }
    }
}
