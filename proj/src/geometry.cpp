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

#include "irsuav/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "irsuav/error.hpp"
#include "irsuav/rng.hpp"

namespace irsuav
{
    PointSet::PointSet(const std::vector<Position3D> &points)
    {
        resize(points.size());
        for (std::size_t i = 0; i < points.size(); ++i)
        {
            x[i] = points[i].x;
            y[i] = points[i].y;
            z[i] = points[i].z;
        }
    }

    void PointSet::resize(std::size_t n)
    {
        x.resize(n);
        y.resize(n);
        z.resize(n);
    }

    bool ScenarioGeometry::on_patch(const Position3D &p, double tolerance) const
    {
        return std::abs(p.x - irs_center.x) <= tolerance &&
               std::abs(p.y - irs_center.y) <= patch_half_width_y + tolerance &&
               std::abs(p.z - irs_center.z) <= patch_half_height_z + tolerance;
    }

    std::vector<Position3D> element_positions(int rows, int cols, double pitch, const Position3D &center)
    {
        if (rows < 1 || cols < 1)
            throw InvalidParameter("element lattice needs rows >= 1 and cols >= 1, got " + std::to_string(rows) +
                                   " x " + std::to_string(cols));
        if (!(pitch > 0.0) || !std::isfinite(pitch))
            throw InvalidParameter("element pitch must be positive and finite");

        std::vector<Position3D> out;
        out.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
        const double row_mid = 0.5 * (rows + 1);
        const double col_mid = 0.5 * (cols + 1);
        for (int n = 1; n <= rows; ++n)
            for (int m = 1; m <= cols; ++m)
                out.push_back({center.x, center.y + (m - col_mid) * pitch, center.z + (n - row_mid) * pitch});
        return out;
    }

    double distance(const Position3D &a, const Position3D &b)
    {
        // Same operation order as kernels::segment_lengths.
        const double dx = b.x - a.x, dy = b.y - a.y, dz = b.z - a.z;
        return std::sqrt(dx * dx + dy * dy + dz * dz);
    }

    double depression_angle(const Position3D &from, const Position3D &to)
    {
        if (from == to)
            throw DegenerateGeometry("depression angle undefined for coincident points");
        const double dx = to.x - from.x, dy = to.y - from.y;
        const double horizontal = std::sqrt(dx * dx + dy * dy);
        return std::atan2(from.z - to.z, horizontal) * (180.0 / std::numbers::pi);
    }

    ScenarioGeometry build_geometry(const SceneLayout &layout)
    {
        auto check_height = [](double v, const char *name)
        {
            if (!(v >= 0.0) || !std::isfinite(v))
                throw InvalidParameter(std::string(name) + " must be finite and >= 0");
        };
        check_height(layout.h_bs_m, "h_bs_m");
        check_height(layout.h_uav_m, "h_uav_m");
        check_height(layout.h_irs_m, "h_irs_m");
        if (!std::isfinite(layout.l_m))
            throw InvalidParameter("l_m must be finite");
        if (layout.irs_rows < 0 || layout.irs_cols < 0)
            throw InvalidParameter("irs_rows and irs_cols must be >= 0");

        ScenarioGeometry g;
        g.bs = {0.0, 0.0, layout.h_bs_m};
        g.irs_center = {layout.l_m, 0.0, layout.h_irs_m};
        g.uav = {layout.uav_x_m.value_or(0.5 * layout.l_m), layout.uav_y_m, layout.h_uav_m};
        if (layout.irs_rows > 0 && layout.irs_cols > 0)
        {
            g.elements = element_positions(layout.irs_rows, layout.irs_cols, layout.element_pitch_m, g.irs_center);
            g.patch_half_width_y = 0.5 * (layout.irs_cols - 1) * layout.element_pitch_m;
            g.patch_half_height_z = 0.5 * (layout.irs_rows - 1) * layout.element_pitch_m;
        }
        if (g.irs_center.z - g.patch_half_height_z < 0.0)
            throw InvalidParameter("IRS patch extends below ground");
        return g;
    }

    void sample_scatter_points(const ScenarioGeometry &geom, std::size_t count, RandomStream &rng, PointSet &out)
    {
        if (count == 0)
            throw InvalidParameter("scatter point count must be >= 1");
        out.resize(count);
        const Position3D &c = geom.irs_center;
        for (std::size_t i = 0; i < count; ++i)
        {
            const double y = rng.uniform(-geom.patch_half_width_y, geom.patch_half_width_y);
            const double z = rng.uniform(-geom.patch_half_height_z, geom.patch_half_height_z);
            out.x[i] = c.x;
            out.y[i] = c.y + y;
            out.z[i] = c.z + z;
        }
    }

    std::vector<Position3D> sample_scatter_points(const ScenarioGeometry &geom, std::size_t count, RandomStream &rng)
    {
        PointSet soa;
        sample_scatter_points(geom, count, rng, soa);
        std::vector<Position3D> out(count);
        for (std::size_t i = 0; i < count; ++i)
            out[i] = soa.at(i);
        return out;
    }
}
