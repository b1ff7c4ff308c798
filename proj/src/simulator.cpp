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

#include "irsuav/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "irsuav/error.hpp"
#include "irsuav/kernels/kernels.hpp"
#include "irsuav/rng.hpp"

namespace irsuav
{
    const char *to_string(PhaseMode mode)
    {
        return mode == PhaseMode::AlignedToLos ? "aligned" : "geometric";
    }

    const char *to_string(WallPhaseMode mode)
    {
        switch (mode)
        {
        case WallPhaseMode::Coherent:
            return "coherent";
        case WallPhaseMode::Geometric:
            return "geometric";
        case WallPhaseMode::Uniform:
            return "uniform";
        }
        return "?";
    }

    const char *to_string(ScatterPlacement placement)
    {
        return placement == ScatterPlacement::Uniform ? "uniform" : "lattice";
    }

    PhaseMode parse_phase_mode(std::string_view text)
    {
        if (text == "aligned")
            return PhaseMode::AlignedToLos;
        if (text == "geometric")
            return PhaseMode::Geometric;
        throw InvalidParameter("irs_phase_mode must be 'aligned' or 'geometric'");
    }

    WallPhaseMode parse_wall_phase_mode(std::string_view text)
    {
        if (text == "coherent")
            return WallPhaseMode::Coherent;
        if (text == "geometric")
            return WallPhaseMode::Geometric;
        if (text == "uniform")
            return WallPhaseMode::Uniform;
        throw InvalidParameter("wall_phase_mode must be 'coherent', 'geometric' or 'uniform'");
    }

    ScatterPlacement parse_scatter_placement(std::string_view text)
    {
        if (text == "uniform")
            return ScatterPlacement::Uniform;
        if (text == "lattice")
            return ScatterPlacement::Lattice;
        throw InvalidParameter("scatter_placement must be 'uniform' or 'lattice'");
    }

    SceneLayout ScenarioConfig::layout() const
    {
        SceneLayout s;
        s.h_bs_m = h_bs_m;
        s.h_uav_m = h_uav_m;
        s.h_irs_m = h_irs_m;
        s.l_m = l_m;
        s.irs_rows = irs_rows;
        s.irs_cols = irs_cols;
        s.element_pitch_m = element_pitch_m;
        s.uav_x_m = uav_x_m;
        return s;
    }

    LinkParams ScenarioConfig::link() const
    {
        LinkParams link;
        link.antenna = {theta_etilt_deg, theta3db_deg, sla_db};
        link.pathloss = {f_ghz, breakpoint_height_m};
        link.reflection = {pl_irs_db, pl_wall_db};
        link.p_t_dbm = p_t_dbm;
        return link;
    }

    void validate(const ScenarioConfig &s)
    {
        auto positive = [](double v, const char *key)
        {
            if (!(v > 0.0) || !std::isfinite(v))
                throw InvalidParameter(std::string(key) + " must be positive and finite");
        };
        auto finite = [](double v, const char *key)
        {
            if (!std::isfinite(v))
                throw InvalidParameter(std::string(key) + " must be finite");
        };
        positive(s.f_ghz, "f_ghz");
        finite(s.p_t_dbm, "p_t_dbm");
        finite(s.theta_etilt_deg, "theta_etilt_deg");
        positive(s.theta3db_deg, "theta3db_deg");
        positive(s.sla_db, "sla_db");
        finite(s.breakpoint_height_m, "breakpoint_height_m");
        if (!(s.pl_irs_db >= 0.0) || !std::isfinite(s.pl_irs_db))
            throw InvalidParameter("pl_irs_db must be >= 0");
        if (!(s.pl_wall_db >= 0.0) || !std::isfinite(s.pl_wall_db))
            throw InvalidParameter("pl_wall_db must be >= 0");
        positive(s.h_bs_m, "h_bs_m");
        positive(s.h_uav_m, "h_uav_m");
        positive(s.h_irs_m, "h_irs_m");
        finite(s.l_m, "l_m");
        positive(s.element_pitch_m, "element_pitch_m");
        if (s.irs_rows < 0 || s.irs_cols < 0)
            throw InvalidParameter("irs_rows and irs_cols must be >= 0");
        if (s.uav_x_m)
            finite(*s.uav_x_m, "uav_x_m");
    }

    void validate(const MonteCarloConfig &mc)
    {
        if (mc.n_runs < 1)
            throw InvalidParameter("n_runs must be >= 1");
    }

    IrsLink irs_link(const ScenarioConfig &scenario)
    {
        validate(scenario);
        const ScenarioGeometry geom = build_geometry(scenario.layout());
        const LinkParams link = scenario.link();
        const ChannelCoefficient los = los_coefficient(geom, link);

        IrsLink out;
        out.los_amplitude = los.amplitude;
        if (geom.elements.empty())
        {
            out.gamma_irs = los.amplitude;
            return out;
        }

        const PointSet points(geom.elements);
        std::vector<double> amp(points.size()), phase(points.size());
        reflected_path_batch(points, geom, link, link.reflection.pl_irs_db, amp, phase);

        if (scenario.irs_phase_mode == PhaseMode::AlignedToLos)
        {
            double sum = 0.0;
            for (double a : amp)
                sum += a;
            out.irs_sum_amplitude = sum;
            out.gamma_irs = los.amplitude + sum;
            return out;
        }

        std::vector<double> c(amp.size()), s(amp.size());
        for (std::size_t i = 0; i < amp.size(); ++i)
        {
            c[i] = std::cos(phase[i]);
            s[i] = std::sin(phase[i]);
        }
        const std::complex<double> reflected = kernels::active().phasor_sum(amp.data(), c.data(), s.data(), amp.size());
        out.irs_sum_amplitude = std::abs(reflected);
        out.gamma_irs = std::abs(reflected + std::polar(los.amplitude, los.phase));
        return out;
    }

    double irs_amplitude(const ScenarioConfig &scenario)
    {
        return irs_link(scenario).gamma_irs;
    }

    namespace
    {
        struct RunPowers
        {
            double total = 0.0;
            double reflected = 0.0;
        };

        // Read-only state shared by all runs.
        struct BaselineContext
        {
            const ScenarioConfig &scenario;
            const MonteCarloConfig &mc;
            ScenarioGeometry geom;
            LinkParams link;
            ChannelCoefficient los;
            std::complex<double> los_phasor;
            PointSet lattice; // first n_rays elements when placement is Lattice
        };

        // Per-thread buffers.
        struct Scratch
        {
            PointSet points;
            std::vector<double> amp, phase, c, s;

            void resize(std::size_t n)
            {
                amp.resize(n);
                phase.resize(n);
                c.resize(n);
                s.resize(n);
            }
        };

        RunPowers simulate_run(const BaselineContext &ctx, std::size_t run, Scratch &scratch)
        {
            const std::size_t n = ctx.mc.n_rays;
            RandomStream rng(run_seed(ctx.mc.master_seed, run));

            const PointSet *points = &ctx.lattice;
            if (ctx.scenario.scatter_placement == ScatterPlacement::Uniform)
            {
                sample_scatter_points(ctx.geom, n, rng, scratch.points);
                points = &scratch.points;
            }

            scratch.resize(n);
            reflected_path_batch(*points, ctx.geom, ctx.link, ctx.link.reflection.pl_wall_db, scratch.amp,
                                 scratch.phase);

            std::complex<double> reflected;
            switch (ctx.scenario.wall_phase_mode)
            {
            case WallPhaseMode::Coherent:
            {
                double sum = 0.0;
                for (double a : scratch.amp)
                    sum += a;
                reflected = std::polar(sum, ctx.los.phase);
                break;
            }
            case WallPhaseMode::Uniform:
                for (std::size_t i = 0; i < n; ++i)
                    scratch.phase[i] = rng.uniform(0.0, kTwoPi);
                [[fallthrough]];
            case WallPhaseMode::Geometric:
                for (std::size_t i = 0; i < n; ++i)
                {
                    scratch.c[i] = std::cos(scratch.phase[i]);
                    scratch.s[i] = std::sin(scratch.phase[i]);
                }
                reflected = kernels::active().phasor_sum(scratch.amp.data(), scratch.c.data(), scratch.s.data(), n);
                break;
            }
            return {std::norm(ctx.los_phasor + reflected), std::norm(reflected)};
        }
    }

    WallEstimate wall_power_estimate(const ScenarioConfig &scenario, const MonteCarloConfig &mc)
    {
        validate(scenario);
        validate(mc);

        BaselineContext ctx{scenario, mc, build_geometry(scenario.layout()), scenario.link(), {}, {}, {}};
        ctx.los = los_coefficient(ctx.geom, ctx.link);
        ctx.los_phasor = std::polar(ctx.los.amplitude, ctx.los.phase);

        WallEstimate est;
        if (mc.n_rays == 0)
        {
            est.mean_power_mw = ctx.los.amplitude * ctx.los.amplitude;
            return est;
        }
        if (scenario.scatter_placement == ScatterPlacement::Lattice)
        {
            if (mc.n_rays > ctx.geom.elements.size())
                throw InvalidParameter("lattice scatter placement needs n_rays <= number of IRS elements");
            ctx.lattice = PointSet(std::vector<Position3D>(ctx.geom.elements.begin(),
                                                           ctx.geom.elements.begin() + static_cast<long>(mc.n_rays)));
        }

        std::vector<RunPowers> runs(mc.n_runs);
        unsigned threads = mc.threads != 0 ? mc.threads : std::max(1u, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, mc.n_runs));

        auto work = [&](std::size_t begin, std::size_t end)
        {
            Scratch scratch;
            for (std::size_t r = begin; r < end; ++r)
                runs[r] = simulate_run(ctx, r, scratch);
        };

        if (threads <= 1)
        {
            work(0, mc.n_runs);
        }
        else
        {
            std::exception_ptr failure;
            std::mutex failure_mutex;
            {
                std::vector<std::jthread> pool;
                const std::size_t chunk = (mc.n_runs + threads - 1) / threads;
                for (std::size_t begin = 0; begin < mc.n_runs; begin += chunk)
                {
                    const std::size_t end = std::min(mc.n_runs, begin + chunk);
                    pool.emplace_back([&, begin, end]
                                      {
                        try
                        {
                            work(begin, end);
                        }
                        catch (...)
                        {
                            std::lock_guard lock(failure_mutex);
                            if (!failure)
                                failure = std::current_exception();
                        } });
                }
            }
            if (failure)
                std::rethrow_exception(failure);
        }

        // Fixed-order reduction, shifted by run 0 so identical runs give an exact mean and zero spread.
        const double shift = runs.front().total, shift_reflected = runs.front().reflected;
        double total = 0.0, reflected = 0.0;
        for (const RunPowers &p : runs)
        {
            total += p.total - shift;
            reflected += p.reflected - shift_reflected;
        }
        const double n = static_cast<double>(mc.n_runs);
        const double mean_offset = total / n;
        est.mean_power_mw = shift + mean_offset;
        est.mean_reflection_power_mw = shift_reflected + reflected / n;
        if (mc.n_runs > 1)
        {
            double ss = 0.0;
            for (const RunPowers &p : runs)
            {
                const double d = (p.total - shift) - mean_offset;
                ss += d * d;
            }
            est.std_error_mw = std::sqrt(ss / (n - 1.0) / n);
        }
        return est;
    }

    GainResult irs_gain(const ScenarioConfig &scenario, const MonteCarloConfig &mc)
    {
        const IrsLink irs = irs_link(scenario);
        const WallEstimate wall = wall_power_estimate(scenario, mc);
        if (!(wall.mean_power_mw > 0.0))
            throw DegenerateGeometry("baseline power is zero; gain undefined");

        GainResult r;
        r.gamma_irs = irs.gamma_irs;
        r.los_amplitude = irs.los_amplitude;
        r.irs_sum_amplitude = irs.irs_sum_amplitude;
        r.mean_wall_power_mw = wall.mean_power_mw;
        r.mean_wall_reflection_amplitude = std::sqrt(wall.mean_reflection_power_mw);
        r.gain_db = 10.0 * std::log10(irs.gamma_irs * irs.gamma_irs / wall.mean_power_mw);
        r.std_error_db = 10.0 / std::numbers::ln10 * wall.std_error_mw / wall.mean_power_mw;
        return r;
    }
}
