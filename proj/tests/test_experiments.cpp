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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "irsuav/error.hpp"
#include "irsuav/experiments.hpp"

using namespace irsuav;
using Catch::Matchers::WithinAbs;

namespace
{
    MonteCarloConfig quick(std::size_t runs = 1000)
    {
        MonteCarloConfig mc;
        mc.n_runs = runs;
        return mc;
    }

    double db20(double amplitude) { return 20.0 * std::log10(amplitude); }
}

TEST_CASE("near-square factorisation", "[experiments]")
{
    CHECK(near_square_factors(100) == std::pair{10, 10});
    CHECK(near_square_factors(50) == std::pair{5, 10});
    CHECK(near_square_factors(36) == std::pair{6, 6});
    CHECK(near_square_factors(7) == std::pair{1, 7});
    CHECK(near_square_factors(1) == std::pair{1, 1});
    CHECK_THROWS_AS(near_square_factors(0), InvalidParameter);
    for (int k = 1; k <= 500; ++k)
    {
        const auto [r, c] = near_square_factors(k);
        CHECK(r * c == k);
        CHECK(r <= c);
    }

    ScenarioConfig s;
    apply_parameter(s, SweepParameter::K, 64);
    CHECK(s.element_count() == 64);
    CHECK_THROWS_AS(apply_parameter(s, SweepParameter::K, 12.5), InvalidParameter);
}

TEST_CASE("ranges and default grids", "[experiments]")
{
    CHECK(make_range(10, 100, 5).size() == 19);
    CHECK(make_range(10, 100, 5).back() == 100.0);
    const auto r = make_range(0.1, 0.3, 0.1);
    REQUIRE(r.size() == 3);
    CHECK_THAT(r[2], WithinAbs(0.3, 1e-12));
    CHECK(make_range(5, 5, 1) == std::vector<double>{5});
    CHECK_THROWS_AS(make_range(1, 0, 1), InvalidParameter);
    CHECK_THROWS_AS(make_range(0, 1, 0), InvalidParameter);

    CHECK(default_grid(SweepParameter::K) == std::vector<double>{25, 36, 49, 64, 81, 100});
    CHECK(default_grid(SweepParameter::HIrs) == std::vector<double>{5, 10, 15, 20});
    CHECK(default_grid(SweepParameter::F) == std::vector<double>{2, 4, 5});
    CHECK(default_grid(SweepParameter::L).size() == 19);
    const auto h = default_grid(SweepParameter::HUav);
    CHECK(h.front() == 20.0);
    CHECK(h.back() == 150.0);
    CHECK(h.size() == 11 + 12);

    CHECK(parse_sweep_parameter("h-uav") == SweepParameter::HUav);
    CHECK(parse_sweep_parameter("h_irs_m") == SweepParameter::HIrs);
    CHECK_THROWS_AS(parse_sweep_parameter("tilt"), InvalidParameter);
}

TEST_CASE("sweep layout", "[experiments]")
{
    SweepSpec spec;
    spec.mc = quick(200);

    SECTION("single point equals a direct gain call")
    {
        spec.swept = SweepParameter::L;
        spec.values = {50};
        const SweepResult r = run_sweep(spec);
        REQUIRE(r.rows.size() == 1);
        CHECK(r.rows[0].result == irs_gain(ScenarioConfig{}, spec.mc));
        CHECK_FALSE(r.rows[0].overlay_value.has_value());
    }

    SECTION("overlay-major rows")
    {
        spec.swept = SweepParameter::HUav;
        spec.values = {20, 50, 100};
        spec.overlay = SweepParameter::K;
        spec.overlay_values = {50, 100};
        const SweepResult r = run_sweep(spec);
        REQUIRE(r.rows.size() == 6);
        CHECK(*r.rows[0].overlay_value == 50);
        CHECK(*r.rows[3].overlay_value == 100);
        CHECK(r.rows[4].value == 50);
        CHECK_FALSE(r.notes.empty());
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(r.rows[i + 3].result.gain_db > r.rows[i].result.gain_db);
    }

    SECTION("validation")
    {
        spec.swept = SweepParameter::L;
        CHECK_THROWS_AS(run_sweep(spec), InvalidParameter);
        spec.values = {50, 40};
        CHECK_THROWS_AS(run_sweep(spec), InvalidParameter);
        spec.values = {40, 50};
        spec.overlay = SweepParameter::L;
        spec.overlay_values = {1};
        CHECK_THROWS_AS(run_sweep(spec), InvalidParameter);
        spec.overlay = SweepParameter::HIrs;
        spec.overlay_values = {5, 5};
        CHECK_THROWS_AS(run_sweep(spec), InvalidParameter);
    }

    SECTION("deterministic")
    {
        spec.swept = SweepParameter::K;
        spec.values = {25, 50};
        const SweepResult a = run_sweep(spec), b = run_sweep(spec);
        REQUIRE(a.rows.size() == b.rows.size());
        for (std::size_t i = 0; i < a.rows.size(); ++i)
            CHECK(a.rows[i].result == b.rows[i].result);
    }
}

TEST_CASE("component amplitudes", "[experiments]")
{
    const MonteCarloConfig mc = quick(2000);
    ScenarioConfig low, high;
    low.h_uav_m = 20;
    high.h_uav_m = 30;
    const ComponentAmplitudes a = component_amplitudes(low, mc);
    const ComponentAmplitudes b = component_amplitudes(high, mc);
    CHECK_THAT(db20(a.los) - db20(b.los), WithinAbs(18.366, 1e-3));

    // IRS and mean wall reflections share every loss term except the fixed reflection and coherence terms
    std::vector<double> gaps;
    for (double h : {20.0, 25.0, 50.0, 100.0, 150.0})
    {
        ScenarioConfig s;
        s.h_uav_m = h;
        const ComponentAmplitudes c = component_amplitudes(s, mc);
        CHECK(c.irs > c.wall_mean);
        gaps.push_back(db20(c.irs) - db20(c.wall_mean));
    }
    for (double g : gaps)
        CHECK_THAT(g, WithinAbs(gaps.front(), 0.5));
    CHECK_THAT(gaps.front(), WithinAbs(22.98, 0.05));

    const GainResult r = irs_gain(ScenarioConfig{}, mc);
    const ComponentAmplitudes from = component_amplitudes(r);
    CHECK(from.los == r.los_amplitude);
    CHECK(from.irs == r.irs_sum_amplitude);
}

TEST_CASE("optimal BS-IRS distance", "[experiments]")
{
    const MonteCarloConfig mc = quick(1000);
    const std::vector<double> grid = make_range(10, 100, 5);

    ScenarioConfig s;
    const OptimalDistance base = optimal_distance(s, grid, mc);
    CHECK(base.l_star == 50.0);
    CHECK(base.grid.size() == grid.size());
    for (const SweepRow &row : base.grid)
        CHECK(row.result.gain_db <= base.gain_db);

    s.h_irs_m = 5;
    CHECK(optimal_distance(s, grid, mc).l_star == 70.0);

    SECTION("ties go to the smaller distance")
    {
        ScenarioConfig flat;
        flat.irs_rows = 0;
        MonteCarloConfig none = quick(10);
        none.n_rays = 0;
        const OptimalDistance t = optimal_distance(flat, grid, none);
        CHECK(t.gain_db == 0.0);
        CHECK(t.l_star == 10.0);
    }

    SECTION("refinement never does worse than the grid")
    {
        OptimizeOptions opt;
        opt.refine = true;
        const OptimalDistance r = optimal_distance(ScenarioConfig{}, grid, quick(300), opt);
        CHECK(r.gain_db >= optimal_distance(ScenarioConfig{}, grid, quick(300)).gain_db);
        CHECK(r.l_star >= 45.0);
        CHECK(r.l_star <= 55.0);
    }

    SECTION("invalid grids")
    {
        CHECK_THROWS_AS(optimal_distance(s, std::vector<double>{}, mc), InvalidParameter);
        CHECK_THROWS_AS(optimal_distance(s, std::vector<double>{20, 10}, mc), InvalidParameter);
    }
}

TEST_CASE("optimum is invariant to frequency and seed", "[experiments][property]")
{
    const std::vector<double> grid = make_range(30, 70, 5);
    ScenarioConfig s;
    MonteCarloConfig mc = quick(1000);
    const OptimalDistance ref = optimal_distance(s, grid, mc);
    for (double f : {4.0, 5.0})
    {
        ScenarioConfig g = s;
        g.f_ghz = f;
        const OptimalDistance o = optimal_distance(g, grid, mc);
        CHECK(o.l_star == ref.l_star);
        CHECK_THAT(o.gain_db, WithinAbs(ref.gain_db, 1e-6));
    }
    mc.master_seed = 7;
    CHECK(optimal_distance(s, grid, mc).l_star == ref.l_star);
}

TEST_CASE("golden-section search", "[experiments]")
{
    const double x = golden_section_maximize([](double v) { return -(v - 1.3) * (v - 1.3); }, 0.0, 4.0, 1e-6);
    CHECK_THAT(x, WithinAbs(1.3, 1e-5));
    const double edge = golden_section_maximize([](double v) { return v; }, 0.0, 1.0, 1e-6);
    CHECK_THAT(edge, WithinAbs(1.0, 1e-5));
}
