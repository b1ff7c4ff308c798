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

#include "irsuav/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "irsuav/error.hpp"

namespace irsuav
{
    SweepParameter parse_sweep_parameter(std::string_view name)
    {
        if (name == "k")
            return SweepParameter::K;
        if (name == "h-uav" || name == "h_uav" || name == "h_uav_m")
            return SweepParameter::HUav;
        if (name == "l" || name == "l_m")
            return SweepParameter::L;
        if (name == "h-irs" || name == "h_irs" || name == "h_irs_m")
            return SweepParameter::HIrs;
        if (name == "f" || name == "f_ghz" || name == "f-ghz")
            return SweepParameter::F;
        throw InvalidParameter("unknown sweep parameter '" + std::string(name) + "' (expected k, h-uav, l, h-irs or f)");
    }

    const char *parameter_flag(SweepParameter p)
    {
        switch (p)
        {
        case SweepParameter::K:
            return "k";
        case SweepParameter::HUav:
            return "h-uav";
        case SweepParameter::L:
            return "l";
        case SweepParameter::HIrs:
            return "h-irs";
        case SweepParameter::F:
            return "f";
        }
        return "?";
    }

    const char *parameter_key(SweepParameter p)
    {
        switch (p)
        {
        case SweepParameter::K:
            return "k";
        case SweepParameter::HUav:
            return "h_uav_m";
        case SweepParameter::L:
            return "l_m";
        case SweepParameter::HIrs:
            return "h_irs_m";
        case SweepParameter::F:
            return "f_ghz";
        }
        return "?";
    }

    const char *parameter_label(SweepParameter p)
    {
        switch (p)
        {
        case SweepParameter::K:
            return "Number of IRS elements K";
        case SweepParameter::HUav:
            return "UAV height H_UAV [m]";
        case SweepParameter::L:
            return "BS-IRS distance L [m]";
        case SweepParameter::HIrs:
            return "IRS height H_IRS [m]";
        case SweepParameter::F:
            return "Carrier frequency f [GHz]";
        }
        return "?";
    }

    std::pair<int, int> near_square_factors(int k)
    {
        if (k < 1)
            throw InvalidParameter("k must be >= 1");
        int rows = static_cast<int>(std::sqrt(static_cast<double>(k)));
        while (rows * rows > k)
            --rows;
        while (k % rows != 0)
            --rows;
        return {rows, k / rows};
    }

    void apply_parameter(ScenarioConfig &scenario, SweepParameter p, double value)
    {
        switch (p)
        {
        case SweepParameter::K:
        {
            const double rounded = std::round(value);
            if (rounded != value || value < 1.0 || value > 1e8)
                throw InvalidParameter("k must be a positive integer");
            const auto [rows, cols] = near_square_factors(static_cast<int>(rounded));
            scenario.irs_rows = rows;
            scenario.irs_cols = cols;
            break;
        }
        case SweepParameter::HUav:
            scenario.h_uav_m = value;
            break;
        case SweepParameter::L:
            scenario.l_m = value;
            break;
        case SweepParameter::HIrs:
            scenario.h_irs_m = value;
            break;
        case SweepParameter::F:
            scenario.f_ghz = value;
            break;
        }
    }

    std::vector<double> make_range(double start, double stop, double step)
    {
        if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step))
            throw InvalidParameter("range bounds must be finite");
        if (!(step > 0.0))
            throw InvalidParameter("range step must be positive");
        if (stop < start)
            throw InvalidParameter("range is empty (stop < start)");
        const double slack = 1e-9 * std::max({std::abs(start), std::abs(stop), step});
        const auto count = static_cast<std::size_t>(std::floor((stop - start + slack) / step)) + 1;
        if (count > 1000000)
            throw InvalidParameter("range has too many points");
        std::vector<double> out(count);
        for (std::size_t i = 0; i < count; ++i)
            out[i] = start + static_cast<double>(i) * step;
        return out;
    }

    std::vector<double> default_grid(SweepParameter p)
    {
        switch (p)
        {
        case SweepParameter::K:
            return {25, 36, 49, 64, 81, 100};
        case SweepParameter::HUav:
        {
            std::vector<double> v = make_range(20, 30, 1);
            const std::vector<double> coarse = make_range(40, 150, 10);
            v.insert(v.end(), coarse.begin(), coarse.end());
            return v;
        }
        case SweepParameter::L:
            return make_range(10, 100, 5);
        case SweepParameter::HIrs:
            return {5, 10, 15, 20};
        case SweepParameter::F:
            return {2, 4, 5};
        }
        return {};
    }

    void validate(const SweepSpec &spec)
    {
        if (spec.values.empty())
            throw InvalidParameter("sweep needs at least one value");
        for (std::size_t i = 1; i < spec.values.size(); ++i)
            if (!(spec.values[i] > spec.values[i - 1]))
                throw InvalidParameter("sweep values must be strictly increasing");
        if (spec.overlay)
        {
            if (*spec.overlay == spec.swept)
                throw InvalidParameter("overlay parameter must differ from the swept parameter");
            if (spec.overlay_values.empty())
                throw InvalidParameter("overlay needs at least one value");
            const std::set<double> distinct(spec.overlay_values.begin(), spec.overlay_values.end());
            if (distinct.size() != spec.overlay_values.size())
                throw InvalidParameter("overlay values must be distinct");
        }
    }

    SweepResult run_sweep(const SweepSpec &spec)
    {
        validate(spec);
        SweepResult out;
        if (spec.swept == SweepParameter::K || spec.overlay == SweepParameter::K)
            out.notes.emplace_back("K mapped to the most-square exact factorisation rows x cols (e.g. 50 -> 5 x 10); "
                                   "non-square K gives a rectangular IRS");

        const std::vector<std::optional<double>> overlays = [&]
        {
            std::vector<std::optional<double>> v;
            if (!spec.overlay)
                v.emplace_back(std::nullopt);
            else
                for (double o : spec.overlay_values)
                    v.emplace_back(o);
            return v;
        }();

        out.rows.reserve(overlays.size() * spec.values.size());
        for (const std::optional<double> &overlay : overlays)
        {
            for (double value : spec.values)
            {
                ScenarioConfig scenario = spec.base;
                if (overlay)
                    apply_parameter(scenario, *spec.overlay, *overlay);
                apply_parameter(scenario, spec.swept, value);
                out.rows.push_back({value, overlay, irs_gain(scenario, spec.mc)});
            }
        }
        return out;
    }

    ComponentAmplitudes component_amplitudes(const GainResult &result)
    {
        return {result.los_amplitude, result.mean_wall_reflection_amplitude, result.irs_sum_amplitude};
    }

    ComponentAmplitudes component_amplitudes(const ScenarioConfig &scenario, const MonteCarloConfig &mc)
    {
        return component_amplitudes(irs_gain(scenario, mc));
    }

    OptimalDistance optimal_distance(const ScenarioConfig &base, std::span<const double> l_grid,
                                     const MonteCarloConfig &mc, const OptimizeOptions &options)
    {
        if (l_grid.empty())
            throw InvalidParameter("distance grid is empty");
        for (std::size_t i = 1; i < l_grid.size(); ++i)
            if (!(l_grid[i] > l_grid[i - 1]))
                throw InvalidParameter("distance grid must be strictly increasing");

        auto gain_at = [&](double l)
        {
            ScenarioConfig s = base;
            s.l_m = l;
            return irs_gain(s, mc);
        };

        OptimalDistance out;
        std::size_t best = 0;
        for (std::size_t i = 0; i < l_grid.size(); ++i)
        {
            out.grid.push_back({l_grid[i], std::nullopt, gain_at(l_grid[i])});
            // strict comparison keeps the first (smallest) L on ties
            if (out.grid[i].result.gain_db > out.grid[best].result.gain_db)
                best = i;
        }
        out.l_star = l_grid[best];
        out.gain_db = out.grid[best].result.gain_db;

        if (options.refine && l_grid.size() > 1)
        {
            const double lo = l_grid[best == 0 ? 0 : best - 1];
            const double hi = l_grid[std::min(best + 1, l_grid.size() - 1)];
            const double l = golden_section_maximize([&](double x) { return gain_at(x).gain_db; }, lo, hi,
                                                     options.tolerance_m);
            const double g = gain_at(l).gain_db;
            if (g > out.gain_db)
            {
                out.l_star = l;
                out.gain_db = g;
                out.refined = true;
            }
        }
        return out;
    }
}
