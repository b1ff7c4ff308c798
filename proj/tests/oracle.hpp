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

// Test-only reference evaluations of the link-budget formulas, written directly
// from the closed forms in long double and sharing no code with the library.

#include <algorithm>
#include <cmath>

namespace oracle
{
    using ld = long double;
    inline constexpr ld pi = 3.141592653589793238462643383279502884L;

    inline ld antenna_gain(ld theta, ld tilt = 15, ld width = 10, ld sla = 20)
    {
        const ld loss = 12 * ((theta - tilt) / width) * ((theta - tilt) / width);
        return -(loss < sla ? loss : sla);
    }

    inline ld pl_los(ld d, ld f) { return 28 + 22 * std::log10(d) + 20 * std::log10(f); }

    inline ld pl_low(ld d, ld h, ld f) { return 13.54L + 39.08L * std::log10(d) + 20 * std::log10(f) - 0.6L * (h - 1.5L); }

    inline ld pl_aerial(ld d, ld h, ld f)
    {
        return -17.5L + (46 - 7 * std::log10(h)) * std::log10(d) + 20 * std::log10(40 * pi * f / 3);
    }

    inline ld pl_nlos(ld d, ld h, ld f)
    {
        return h < 22.5L ? std::max(pl_los(d, f), pl_low(d, h, f)) : pl_aerial(d, h, f);
    }

    struct P
    {
        ld x, y, z;
    };

    inline ld dist(P a, P b)
    {
        return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) + (a.z - b.z) * (a.z - b.z));
    }

    inline ld depression_deg(P from, P to)
    {
        return std::atan2(from.z - to.z, std::hypot(to.x - from.x, to.y - from.y)) * 180 / pi;
    }

    // dBm received over BS -> point -> UAV, end-to-end NLoS at the UAV height.
    inline ld reflected_power_dbm(P bs, P point, P uav, ld f, ld pt, ld loss)
    {
        return pt + antenna_gain(depression_deg(bs, point)) - pl_nlos(dist(bs, point) + dist(point, uav), uav.z, f) - loss;
    }

    inline ld los_power_dbm(P bs, P uav, ld f, ld pt)
    {
        return pt + antenna_gain(depression_deg(bs, uav)) - pl_los(dist(bs, uav), f);
    }

    inline ld amplitude(ld dbm) { return std::pow(10.0L, dbm / 20); }
}
