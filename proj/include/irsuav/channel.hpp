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

#pragma once

#include <span>
#include <vector>

#include "irsuav/geometry.hpp"
#include "irsuav/propagation.hpp"

namespace irsuav
{
    inline constexpr double kSpeedOfLight = 299792458.0;
    inline constexpr double kTwoPi = 6.283185307179586476925286766559;

    // One propagation path: amplitude in sqrt(mW), phase in [0, 2 pi).
    struct ChannelCoefficient
    {
        double amplitude = 0.0;
        double phase = 0.0;
    };

    struct ReflectionParams
    {
        double pl_irs_db = 1.0;
        double pl_wall_db = 10.0;
    };

    // How the IRS sets the phase of each reflected arrival.
    enum class PhaseMode
    {
        AlignedToLos, // ideal control: every element arrives in phase with the LoS path
        Geometric     // no control: phase from the path length only
    };

    // Everything a link budget needs besides the scene.
    struct LinkParams
    {
        AntennaParams antenna;
        PathlossParams pathloss;
        ReflectionParams reflection;
        double p_t_dbm = 46.0;
    };

    double wavelength(double f_ghz);

    // (-2 pi d / lambda) mod 2 pi, in [0, 2 pi).
    double propagation_phase(double path_length_m, double lambda_m);

    // Wraps any angle into [0, 2 pi).
    double wrap_phase(double phase);

    // sqrt(10^(p/10)): dBm to sqrt(mW).
    double dbm_to_amplitude(double p_dbm);

    // Direct BS -> UAV path.
    ChannelCoefficient los_coefficient(const ScenarioGeometry &geom, const LinkParams &link);

    // Received power in dBm over BS -> point -> UAV with `reflection_loss_db` at the point.
    // Path loss is PL_BS-k + PL_k-UAV, all evaluated at the UAV height.
    double reflected_path_power(const Position3D &point, const ScenarioGeometry &geom, const LinkParams &link,
                                double reflection_loss_db);

    ChannelCoefficient element_coefficient(std::size_t element_index, const ScenarioGeometry &geom,
                                           const LinkParams &link, PhaseMode mode);

    // Wall scatter ray: wall loss in place of IRS loss, geometric phase.
    ChannelCoefficient wall_ray_coefficient(const Position3D &scatter_point, const ScenarioGeometry &geom,
                                            const LinkParams &link);

    // |sum amplitude_i e^(j phase_i)|. Throws InvalidParameter for an empty list.
    double combine(std::span<const ChannelCoefficient> coeffs);

    // Batch form of reflected_path_power plus geometric phase, for many points at once.
    // Uses the runtime-selected kernels. Output spans must have points.size() entries.
    void reflected_path_batch(const PointSet &points, const ScenarioGeometry &geom, const LinkParams &link,
                              double reflection_loss_db, std::span<double> amplitude, std::span<double> phase);
}
