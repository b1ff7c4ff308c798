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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "irsuav/channel.hpp"
#include "irsuav/geometry.hpp"

namespace irsuav
{
    // Phase of each wall scatter ray in the no-IRS baseline.
    enum class WallPhaseMode
    {
        Coherent,  // rays arrive in phase with the LoS path (electrically small scattering area)
        Geometric, // (-2 pi (d1 + d2) / lambda) mod 2 pi per ray
        Uniform    // i.i.d. uniform phase per ray, drawn after the ray positions
    };

    // Where the baseline rays leave the wall.
    enum class ScatterPlacement
    {
        Uniform, // uniform over the patch rectangle, re-drawn every run
        Lattice  // at the first n_rays IRS element positions (needs n_rays <= K)
    };

    const char *to_string(PhaseMode mode);
    const char *to_string(WallPhaseMode mode);
    const char *to_string(ScatterPlacement placement);
    PhaseMode parse_phase_mode(std::string_view text);
    WallPhaseMode parse_wall_phase_mode(std::string_view text);
    ScatterPlacement parse_scatter_placement(std::string_view text);

    // All physical parameters of one scenario. Defaults are the reference scenario.
    struct ScenarioConfig
    {
        double f_ghz = 2.0;
        double p_t_dbm = 46.0;
        double theta_etilt_deg = 15.0;
        double theta3db_deg = 10.0;
        double sla_db = 20.0;
        double breakpoint_height_m = 22.5;
        double pl_irs_db = 1.0;
        double pl_wall_db = 10.0;
        double h_bs_m = 25.0;
        double h_uav_m = 50.0;
        double h_irs_m = 10.0;
        int irs_rows = 10;
        int irs_cols = 10;
        double element_pitch_m = 0.02;
        double l_m = 50.0;
        std::optional<double> uav_x_m; // unset: midpoint between BS and wall

        PhaseMode irs_phase_mode = PhaseMode::AlignedToLos;
        WallPhaseMode wall_phase_mode = WallPhaseMode::Coherent;
        ScatterPlacement scatter_placement = ScatterPlacement::Uniform;

        int element_count() const { return irs_rows * irs_cols; }
        SceneLayout layout() const;
        LinkParams link() const;
    };

    inline constexpr std::uint64_t kDefaultMasterSeed = 20200101;

    struct MonteCarloConfig
    {
        std::size_t n_runs = 10000;
        std::size_t n_rays = 20;
        std::uint64_t master_seed = kDefaultMasterSeed;
        unsigned threads = 0; // 0: hardware concurrency. Never affects results.
    };

    // Throws InvalidParameter naming the offending field.
    void validate(const ScenarioConfig &scenario);
    void validate(const MonteCarloConfig &mc);

    // Deterministic IRS side of the comparison.
    struct IrsLink
    {
        double gamma_irs = 0.0;          // |h0 + sum_k h_k|
        double los_amplitude = 0.0;      // |h0|
        double irs_sum_amplitude = 0.0;  // |sum_k h_k|
    };

    struct WallEstimate
    {
        double mean_power_mw = 0.0;            // E|h0 + sum_rays h_r|^2
        double std_error_mw = 0.0;             // standard error of that mean
        double mean_reflection_power_mw = 0.0; // E|sum_rays h_r|^2
    };

    struct GainResult
    {
        double gamma_irs = 0.0;
        double mean_wall_power_mw = 0.0;
        double gain_db = 0.0;
        double std_error_db = 0.0;
        double los_amplitude = 0.0;
        double irs_sum_amplitude = 0.0;
        double mean_wall_reflection_amplitude = 0.0; // sqrt(E|sum_rays h_r|^2)

        friend bool operator==(const GainResult &, const GainResult &) = default;
    };

    IrsLink irs_link(const ScenarioConfig &scenario);

    // gamma_irs of irs_link.
    double irs_amplitude(const ScenarioConfig &scenario);

    // Monte Carlo over the no-IRS baseline. Run r draws from RandomStream(run_seed(master_seed, r));
    // per-run powers are reduced in run order, so the result is independent of the thread count.
    WallEstimate wall_power_estimate(const ScenarioConfig &scenario, const MonteCarloConfig &mc);

    // 10 log10(gamma_irs^2 / E[wall power]) with a delta-method standard error.
    GainResult irs_gain(const ScenarioConfig &scenario, const MonteCarloConfig &mc);
}
