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
#include <optional>
#include <vector>

namespace irsuav
{
    class RandomStream;

    // Scene coordinates in meters. x runs from the BS toward the wall, y along the wall, z is height.
    struct Position3D
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;

        friend bool operator==(const Position3D &, const Position3D &) = default;
    };

    // Structure-of-arrays copy of a point list, the layout the batch kernels consume.
    struct PointSet
    {
        std::vector<double> x, y, z;

        PointSet() = default;
        explicit PointSet(const std::vector<Position3D> &points);

        std::size_t size() const noexcept { return x.size(); }
        void resize(std::size_t n);
        Position3D at(std::size_t i) const { return {x[i], y[i], z[i]}; }
    };

    // Resolved scene. The wall patch is the rectangle x = irs_center.x,
    // |y - irs_center.y| <= patch_half_width_y, |z - irs_center.z| <= patch_half_height_z.
    struct ScenarioGeometry
    {
        Position3D bs;
        Position3D uav;
        Position3D irs_center;
        std::vector<Position3D> elements;
        double patch_half_width_y = 0.0;
        double patch_half_height_z = 0.0;

        bool on_patch(const Position3D &p, double tolerance = 1e-12) const;
    };

    // Inputs needed to lay out a scene; a subset of ScenarioConfig.
    struct SceneLayout
    {
        double h_bs_m = 25.0;
        double h_uav_m = 50.0;
        double h_irs_m = 10.0;
        double l_m = 50.0;
        int irs_rows = 10;
        int irs_cols = 10;
        double element_pitch_m = 0.02;
        std::optional<double> uav_x_m; // unset: midpoint L/2
        double uav_y_m = 0.0;
    };

    // M x N lattice on the plane x = center.x. Row n (1-based) sits at
    // z = center.z + (n - (M+1)/2) * pitch, column m at y = center.y + (m - (N+1)/2) * pitch.
    // Returned row-major.
    std::vector<Position3D> element_positions(int rows, int cols, double pitch, const Position3D &center);

    double distance(const Position3D &a, const Position3D &b);

    // Angle of the ray from -> to below the horizontal plane through `from`, in degrees.
    // Positive when `to` is lower. Throws DegenerateGeometry for coincident points.
    double depression_angle(const Position3D &from, const Position3D &to);

    // Builds the scene: BS at (0,0,H_BS), IRS center at (L,0,H_IRS), UAV at (L/2,0,H_UAV) unless
    // overridden. rows or cols of 0 yields an empty IRS with a zero-extent patch.
    ScenarioGeometry build_geometry(const SceneLayout &layout);

    // `count` points uniform over the wall patch. Two draws per point, y then z.
    std::vector<Position3D> sample_scatter_points(const ScenarioGeometry &geom, std::size_t count, RandomStream &rng);

    // Same draw sequence as sample_scatter_points, written into an existing SoA buffer.
    void sample_scatter_points(const ScenarioGeometry &geom, std::size_t count, RandomStream &rng, PointSet &out);
}
