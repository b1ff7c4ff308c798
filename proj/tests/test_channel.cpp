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
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "irsuav/channel.hpp"
#include "irsuav/error.hpp"
#include "irsuav/simulator.hpp"
#include "oracle.hpp"

using namespace irsuav;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    ScenarioGeometry default_geometry() { return build_geometry(SceneLayout{}); }

    double to_dbm(double amplitude) { return 20.0 * std::log10(amplitude); }
}

TEST_CASE("dbm_to_amplitude", "[channel]")
{
    CHECK(dbm_to_amplitude(0.0) == 1.0);
    CHECK_THAT(dbm_to_amplitude(20.0), WithinRel(10.0, 1e-15));
    CHECK_THAT(dbm_to_amplitude(-40.0), WithinRel(0.01, 1e-15));
    CHECK_THAT(dbm_to_amplitude(-42.0866) * dbm_to_amplitude(-42.0866), WithinRel(6.1850e-5, 1e-4));

    std::mt19937 gen(2);
    std::uniform_real_distribution<double> u(-150, 60);
    for (int i = 0; i < 1000; ++i)
    {
        const double p = u(gen);
        CHECK_THAT(to_dbm(dbm_to_amplitude(p)), WithinAbs(p, 1e-9));
    }
}

TEST_CASE("wavelength and propagation phase", "[channel]")
{
    const double lambda = wavelength(2.0);
    CHECK_THAT(lambda, WithinRel(0.149896229, 1e-9));
    CHECK_THROWS_AS(wavelength(0.0), InvalidParameter);

    CHECK(propagation_phase(0.0, lambda) == 0.0);
    for (int n : {1, 2, 7, 100})
    {
        const double ph = propagation_phase(n * lambda, lambda);
        CHECK((ph < 1e-9 || ph > kTwoPi - 1e-9));
    }
    CHECK_THAT(propagation_phase(0.25 * lambda, lambda), WithinAbs(1.5 * std::numbers::pi, 1e-9));

    // half a wavelength more path flips the phase
    std::mt19937 gen(4);
    std::uniform_real_distribution<double> u(1, 500);
    for (int i = 0; i < 1000; ++i)
    {
        const double d = u(gen);
        const double a = propagation_phase(d, lambda), b = propagation_phase(d + lambda / 2, lambda);
        REQUIRE(a >= 0.0);
        REQUIRE(a < kTwoPi);
        const double diff = wrap_phase(a - b);
        CHECK_THAT(diff, WithinAbs(std::numbers::pi, 1e-6));
    }

    CHECK(wrap_phase(-0.5) == kTwoPi - 0.5);
    CHECK_THAT(wrap_phase(3 * kTwoPi + 1.0), WithinAbs(1.0, 1e-12));
}

TEST_CASE("LoS coefficient", "[channel]")
{
    const ScenarioConfig cfg;
    const ScenarioGeometry g = default_geometry();
    const ChannelCoefficient h0 = los_coefficient(g, cfg.link());
    CHECK_THAT(to_dbm(h0.amplitude), WithinAbs(-42.0866, 1e-4));
    const auto oracle_dbm = oracle::los_power_dbm({0, 0, 25}, {25, 0, 50}, 2, 46);
    CHECK_THAT(to_dbm(h0.amplitude), WithinAbs(static_cast<double>(oracle_dbm), 1e-9));

    // UAV on boresight at 100 m: no antenna loss
    ScenarioGeometry bore = g;
    bore.bs = {0, 0, 30};
    const double t = 15.0 * std::numbers::pi / 180.0;
    bore.uav = {100 * std::cos(t), 0, 30 - 100 * std::sin(t)};
    CHECK_THAT(to_dbm(los_coefficient(bore, cfg.link()).amplitude), WithinAbs(-32.0206, 1e-4));

    ScenarioGeometry same = g;
    same.uav = same.bs;
    CHECK_THROWS_AS(los_coefficient(same, cfg.link()), DegenerateGeometry);
}

TEST_CASE("reflected path powers", "[channel]")
{
    const ScenarioConfig cfg;
    const LinkParams link = cfg.link();
    const ScenarioGeometry g = default_geometry();

    const double irs = reflected_path_power(g.irs_center, g, link, link.reflection.pl_irs_db);
    const double wall = reflected_path_power(g.irs_center, g, link, link.reflection.pl_wall_db);
    CHECK_THAT(irs, WithinAbs(-44.4299, 1e-4));
    CHECK_THAT(wall, WithinAbs(-53.4299, 1e-4));
    CHECK_THAT(irs - wall, WithinAbs(9.0, 1e-12));
    CHECK_THAT(irs, WithinAbs(static_cast<double>(oracle::reflected_power_dbm({0, 0, 25}, {50, 0, 10}, {25, 0, 50}, 2, 46, 1)),
                              1e-9));

    for (std::size_t k = 0; k < g.elements.size(); k += 11)
    {
        const ChannelCoefficient e = element_coefficient(k, g, link, PhaseMode::AlignedToLos);
        const ChannelCoefficient w = wall_ray_coefficient(g.elements[k], g, link);
        CHECK_THAT(to_dbm(e.amplitude) - to_dbm(w.amplitude), WithinAbs(9.0, 1e-9));
        CHECK(e.phase == los_coefficient(g, link).phase);
        const ChannelCoefficient geo = element_coefficient(k, g, link, PhaseMode::Geometric);
        CHECK(geo.phase == w.phase);
        CHECK(geo.amplitude == e.amplitude);
    }

    LinkParams equal = link;
    equal.reflection.pl_wall_db = equal.reflection.pl_irs_db;
    CHECK(wall_ray_coefficient(g.elements[3], g, equal).amplitude ==
          element_coefficient(3, g, equal, PhaseMode::Geometric).amplitude);

    CHECK_THROWS_AS(element_coefficient(100, g, link, PhaseMode::AlignedToLos), InvalidParameter);
    CHECK_THROWS_AS(reflected_path_power(g.uav, g, link, 1.0), DegenerateGeometry);
}

TEST_CASE("combine", "[channel]")
{
    const std::vector<ChannelCoefficient> aligned{{1, 0.3}, {2, 0.3}, {0.5, 0.3}};
    CHECK_THAT(combine(aligned), WithinRel(3.5, 1e-12));
    const std::vector<ChannelCoefficient> opposed{{1, 0}, {1, std::numbers::pi}};
    CHECK_THAT(combine(opposed), WithinAbs(0.0, 1e-15));
    const std::vector<ChannelCoefficient> quad{{3, 0}, {4, std::numbers::pi / 2}};
    CHECK_THAT(combine(quad), WithinRel(5.0, 1e-12));
    CHECK_THROWS_AS(combine(std::vector<ChannelCoefficient>{}), InvalidParameter);

    // aligned phases maximise the magnitude
    std::mt19937 gen(6);
    std::uniform_real_distribution<double> ua(0, 1), up(0, kTwoPi);
    std::vector<ChannelCoefficient> c(30);
    double bound = 0;
    for (auto &x : c)
    {
        x.amplitude = ua(gen);
        bound += x.amplitude;
    }
    for (int trial = 0; trial < 1000; ++trial)
    {
        for (auto &x : c)
            x.phase = up(gen);
        CHECK(combine(c) <= bound * (1 + 1e-12));
    }
}

TEST_CASE("results do not depend on frequency when phases are aligned", "[channel][property]")
{
    // amplitudes shift by the same 20 log10 f, so ratios are frequency invariant
    const ScenarioGeometry g = default_geometry();
    ScenarioConfig a, b;
    b.f_ghz = 5.0;
    const double h0a = los_coefficient(g, a.link()).amplitude, h0b = los_coefficient(g, b.link()).amplitude;
    const double ea = element_coefficient(17, g, a.link(), PhaseMode::AlignedToLos).amplitude;
    const double eb = element_coefficient(17, g, b.link(), PhaseMode::AlignedToLos).amplitude;
    CHECK_THAT(ea / h0a, WithinRel(eb / h0b, 1e-12));
    CHECK_THAT(to_dbm(h0a) - to_dbm(h0b), WithinAbs(20 * std::log10(2.5), 1e-9));
}

TEST_CASE("reflected_path_batch matches the single-point path", "[channel]")
{
    const ScenarioConfig cfg;
    const LinkParams link = cfg.link();
    const ScenarioGeometry g = default_geometry();
    const PointSet pts(g.elements);
    std::vector<double> amp(pts.size()), ph(pts.size());
    reflected_path_batch(pts, g, link, link.reflection.pl_wall_db, amp, ph);
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        const ChannelCoefficient w = wall_ray_coefficient(g.elements[i], g, link);
        CHECK_THAT(amp[i], WithinRel(w.amplitude, 1e-12));
        CHECK_THAT(ph[i], WithinAbs(w.phase, 1e-9));
    }
    std::vector<double> short_out(3);
    CHECK_THROWS_AS(reflected_path_batch(pts, g, link, 1.0, short_out, ph), InvalidParameter);
}
