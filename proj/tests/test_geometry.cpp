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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "irsuav/error.hpp"
#include "irsuav/geometry.hpp"
#include "irsuav/rng.hpp"

using namespace irsuav;
using Catch::Matchers::WithinAbs;

TEST_CASE("element_positions lays out a centred lattice", "[geometry]")
{
    const Position3D c{50, 0, 10};

    SECTION("single element sits at the centre")
    {
        const auto p = element_positions(1, 1, 0.02, c);
        REQUIRE(p.size() == 1);
        CHECK(p[0] == c);
    }

    SECTION("2 x 2")
    {
        const auto p = element_positions(2, 2, 0.02, c);
        REQUIRE(p.size() == 4);
        std::set<double> ys, zs;
        for (const auto &q : p)
        {
            CHECK(q.x == 50.0);
            ys.insert(std::round(q.y * 1e6) / 1e6);
            zs.insert(std::round(q.z * 1e6) / 1e6);
        }
        CHECK(ys == std::set<double>{-0.01, 0.01});
        CHECK(zs == std::set<double>{9.99, 10.01});
    }

    SECTION("10 x 10 spans 0.18 m and is centred (brute-force extent and centroid)")
    {
        const auto p = element_positions(10, 10, 0.02, c);
        REQUIRE(p.size() == 100);
        double sy = 0, sz = 0, ymin = 1e9, ymax = -1e9, zmin = 1e9, zmax = -1e9;
        for (const auto &q : p)
        {
            sy += q.y;
            sz += q.z;
            ymin = std::min(ymin, q.y);
            ymax = std::max(ymax, q.y);
            zmin = std::min(zmin, q.z);
            zmax = std::max(zmax, q.z);
        }
        CHECK_THAT(sy / 100, WithinAbs(0.0, 1e-12));
        CHECK_THAT(sz / 100, WithinAbs(10.0, 1e-12));
        CHECK_THAT(ymax - ymin, WithinAbs(0.18, 1e-12));
        CHECK_THAT(zmax - zmin, WithinAbs(0.18, 1e-12));
    }

    SECTION("invalid arguments")
    {
        CHECK_THROWS_AS(element_positions(0, 3, 0.02, c), InvalidParameter);
        CHECK_THROWS_AS(element_positions(3, 0, 0.02, c), InvalidParameter);
        CHECK_THROWS_AS(element_positions(3, 3, 0.0, c), InvalidParameter);
        CHECK_THROWS_AS(element_positions(3, 3, -0.02, c), InvalidParameter);
    }
}

TEST_CASE("lattice properties hold for random sizes", "[geometry][property]")
{
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> side(1, 17);
    std::uniform_real_distribution<double> pitch(0.001, 0.5);
    for (int trial = 0; trial < 200; ++trial)
    {
        const int rows = side(gen), cols = side(gen);
        const double d = pitch(gen);
        const Position3D c{30, 1.5, 12};
        const auto p = element_positions(rows, cols, d, c);
        REQUIRE(p.size() == static_cast<std::size_t>(rows * cols));

        double sy = 0, sz = 0;
        for (const auto &q : p)
        {
            sy += q.y;
            sz += q.z;
        }
        CHECK_THAT(sy / p.size(), WithinAbs(c.y, 1e-9));
        CHECK_THAT(sz / p.size(), WithinAbs(c.z, 1e-9));

        // neighbours along a row and along a column are one pitch apart
        if (cols > 1)
            CHECK_THAT(p[1].y - p[0].y, WithinAbs(d, 1e-12));
        if (rows > 1)
            CHECK_THAT(p[static_cast<std::size_t>(cols)].z - p[0].z, WithinAbs(d, 1e-12));

        std::set<std::pair<double, double>> distinct;
        for (const auto &q : p)
            distinct.insert({q.y, q.z});
        CHECK(distinct.size() == p.size());
    }
}

TEST_CASE("distance", "[geometry]")
{
    CHECK(distance({0, 0, 0}, {3, 4, 0}) == 5.0);
    CHECK_THAT(distance({0, 0, 25}, {50, 0, 10}), WithinAbs(52.2015325445527509, 1e-12));
    const Position3D p{1.25, -3, 7};
    CHECK(distance(p, p) == 0.0);

    std::mt19937 gen(11);
    std::uniform_real_distribution<double> u(-100, 100);
    for (int i = 0; i < 1000; ++i)
    {
        const Position3D a{u(gen), u(gen), u(gen)}, b{u(gen), u(gen), u(gen)}, c{u(gen), u(gen), u(gen)};
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
    }
}

TEST_CASE("depression_angle", "[geometry]")
{
    CHECK_THAT(depression_angle({0, 0, 25}, {50, 0, 10}), WithinAbs(16.6992442339936218, 1e-12));
    CHECK_THAT(depression_angle({0, 0, 25}, {25, 0, 50}), WithinAbs(-45.0, 1e-12));
    CHECK(depression_angle({0, 0, 25}, {10, 0, 25}) == 0.0);
    CHECK_THAT(depression_angle({0, 0, 25}, {0, 0, 5}), WithinAbs(90.0, 1e-12));
    CHECK_THROWS_AS(depression_angle({1, 2, 3}, {1, 2, 3}), DegenerateGeometry);

    // odd in the height difference
    std::mt19937 gen(3);
    std::uniform_real_distribution<double> u(0.1, 80);
    for (int i = 0; i < 500; ++i)
    {
        const double h = u(gen), dz = u(gen) - 40, dx = u(gen);
        const double down = depression_angle({0, 0, h}, {dx, 0, h - dz});
        const double up = depression_angle({0, 0, h}, {dx, 0, h + dz});
        CHECK_THAT(down, WithinAbs(-up, 1e-12));
    }
}

TEST_CASE("build_geometry resolves the default scene", "[geometry]")
{
    const ScenarioGeometry g = build_geometry(SceneLayout{});
    CHECK(g.bs == Position3D{0, 0, 25});
    CHECK(g.irs_center == Position3D{50, 0, 10});
    CHECK(g.uav == Position3D{25, 0, 50});
    CHECK(g.elements.size() == 100);
    CHECK_THAT(g.patch_half_width_y, WithinAbs(0.09, 1e-15));
    CHECK_THAT(g.patch_half_height_z, WithinAbs(0.09, 1e-15));
    for (const auto &e : g.elements)
        CHECK(g.on_patch(e));

    SceneLayout moved;
    moved.uav_x_m = 12.0;
    CHECK(build_geometry(moved).uav.x == 12.0);

    SceneLayout empty;
    empty.irs_rows = 0;
    const ScenarioGeometry e = build_geometry(empty);
    CHECK(e.elements.empty());
    CHECK(e.patch_half_width_y == 0.0);

    SceneLayout sunk;
    sunk.h_irs_m = 0.01;
    CHECK_THROWS_AS(build_geometry(sunk), InvalidParameter);
}

TEST_CASE("sample_scatter_points", "[geometry]")
{
    ScenarioGeometry g = build_geometry(SceneLayout{});

    SECTION("zero-extent patch collapses to the centre")
    {
        ScenarioGeometry point = g;
        point.patch_half_width_y = 0;
        point.patch_half_height_z = 0;
        RandomStream rng(1);
        const auto p = sample_scatter_points(point, 20, rng);
        REQUIRE(p.size() == 20);
        for (const auto &q : p)
            CHECK(q == point.irs_center);
    }

    SECTION("same seed, same points")
    {
        RandomStream a(42), b(42);
        CHECK(sample_scatter_points(g, 20, a) == sample_scatter_points(g, 20, b));
    }

    SECTION("two draws per point, y then z")
    {
        RandomStream a(9), b(9);
        const auto p = sample_scatter_points(g, 3, a);
        for (const auto &q : p)
        {
            CHECK(q.y == g.irs_center.y + b.uniform(-g.patch_half_width_y, g.patch_half_width_y));
            CHECK(q.z == g.irs_center.z + b.uniform(-g.patch_half_height_z, g.patch_half_height_z));
        }
    }

    SECTION("count zero is rejected")
    {
        RandomStream rng(1);
        CHECK_THROWS_AS(sample_scatter_points(g, 0, rng), InvalidParameter);
    }

    SECTION("uniformity: mean and 4x4 chi-square on 1e5 samples")
    {
        constexpr std::size_t n = 100000;
        RandomStream rng(2024);
        const auto p = sample_scatter_points(g, n, rng);
        double sum_y = 0;
        int counts[4][4] = {};
        for (const auto &q : p)
        {
            REQUIRE(g.on_patch(q));
            sum_y += q.y;
            const int iy = std::min(3, static_cast<int>((q.y + g.patch_half_width_y) / (2 * g.patch_half_width_y) * 4));
            const int iz = std::min(3, static_cast<int>((q.z - g.irs_center.z + g.patch_half_height_z) /
                                                        (2 * g.patch_half_height_z) * 4));
            ++counts[iy][iz];
        }
        const double se = g.patch_half_width_y / std::sqrt(3.0) / std::sqrt(static_cast<double>(n));
        CHECK(std::abs(sum_y / n) < 3 * se);

        const double expected = n / 16.0;
        double chi2 = 0;
        for (auto &row : counts)
            for (int c : row)
                chi2 += (c - expected) * (c - expected) / expected;
        // 15 degrees of freedom, upper 0.001 quantile
        CHECK(chi2 < 37.697);
    }
}

TEST_CASE("run seeds are order independent and distinct", "[geometry][rng]")
{
    std::set<std::uint64_t> seeds;
    for (std::uint64_t r = 0; r < 10000; ++r)
        seeds.insert(run_seed(1, r));
    CHECK(seeds.size() == 10000);
    CHECK(run_seed(5, 17) == run_seed(5, 17));
    CHECK(run_seed(5, 17) != run_seed(6, 17));

    RandomStream s(3);
    for (int i = 0; i < 10000; ++i)
    {
        const double u = s.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}
