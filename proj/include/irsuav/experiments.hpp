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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irsuav/simulator.hpp"

namespace irsuav
{
    enum class SweepParameter
    {
        K,    // number of IRS elements
        HUav, // UAV height
        L,    // BS to wall distance
        HIrs, // IRS center height
        F     // carrier frequency
    };

    // Accepts the flag name ("h-uav"), the config key ("h_uav_m") or the short key ("h_uav").
    SweepParameter parse_sweep_parameter(std::string_view name);
    const char *parameter_flag(SweepParameter p);
    const char *parameter_key(SweepParameter p);
    const char *parameter_label(SweepParameter p); // axis label with units

    // rows x cols with rows the largest divisor of k not above sqrt(k).
    std::pair<int, int> near_square_factors(int k);

    // Sets one parameter on a scenario. K uses near_square_factors.
    void apply_parameter(ScenarioConfig &scenario, SweepParameter p, double value);

    // Inclusive arithmetic grid start, start+step, ... <= stop (with 1e-9 relative slack).
    std::vector<double> make_range(double start, double stop, double step);

    // Default grids: K squares 25..100, H_UAV 1 m steps over [20, 30] then 10 m steps to 150,
    // L 5 m steps over [10, 100], H_IRS {5, 10, 15, 20}, f {2, 4, 5}.
    std::vector<double> default_grid(SweepParameter p);

    struct SweepSpec
    {
        SweepParameter swept = SweepParameter::K;
        std::vector<double> values;
        std::optional<SweepParameter> overlay;
        std::vector<double> overlay_values;
        ScenarioConfig base;
        MonteCarloConfig mc;
    };

    struct SweepRow
    {
        double value = 0.0;
        std::optional<double> overlay_value;
        GainResult result;
    };

    struct SweepResult
    {
        std::vector<SweepRow> rows; // overlay-major, each curve in value order
        std::vector<std::string> notes;
    };

    // Throws InvalidParameter for empty or non-increasing values, duplicate overlay values,
    // or an overlay equal to the swept parameter.
    void validate(const SweepSpec &spec);

    SweepResult run_sweep(const SweepSpec &spec);

    struct ComponentAmplitudes
    {
        double los = 0.0;
        double wall_mean = 0.0;
        double irs = 0.0;
    };

    ComponentAmplitudes component_amplitudes(const ScenarioConfig &scenario, const MonteCarloConfig &mc);
    ComponentAmplitudes component_amplitudes(const GainResult &result);

    struct OptimizeOptions
    {
        bool refine = false;       // golden-section between the grid neighbours of the argmax
        double tolerance_m = 0.01; // refinement bracket width at termination
    };

    struct OptimalDistance
    {
        double l_star = 0.0;
        double gain_db = 0.0;
        std::vector<SweepRow> grid;
        bool refined = false;
    };

    // Grid argmax of gain over L, ties to the smaller L. Grid must be strictly increasing.
    OptimalDistance optimal_distance(const ScenarioConfig &base, std::span<const double> l_grid,
                                     const MonteCarloConfig &mc, const OptimizeOptions &options = {});

    // Maximises f on [lo, hi] by golden-section search; returns the abscissa.
    template <class Fn>
    double golden_section_maximize(Fn &&f, double lo, double hi, double tolerance)
    {
        constexpr double inv_phi = 0.6180339887498948482;
        double a = lo, b = hi;
        double c = b - inv_phi * (b - a);
        double d = a + inv_phi * (b - a);
        double fc = f(c), fd = f(d);
        while (b - a > tolerance)
        {
            if (fc >= fd)
            {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = f(c);
            }
            else
            {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = f(d);
            }
        }
        return fc >= fd ? c : d;
    }
}
