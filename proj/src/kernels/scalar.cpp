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

#include <algorithm>
#include <cmath>

#include "irsuav/kernels/kernels.hpp"

namespace irsuav::kernels
{
    namespace
    {
        void segment_lengths_scalar(const Position3D &from, const Position3D &to,
                                    const double *x, const double *y, const double *z, std::size_t n,
                                    double *d1, double *d2, double *horiz)
        {
            for (std::size_t i = 0; i < n; ++i)
            {
                const double ax = x[i] - from.x, ay = y[i] - from.y, az = z[i] - from.z;
                const double bx = to.x - x[i], by = to.y - y[i], bz = to.z - z[i];
                const double ah = ax * ax + ay * ay;
                horiz[i] = std::sqrt(ah);
                d1[i] = std::sqrt(ah + az * az);
                d2[i] = std::sqrt(bx * bx + by * by + bz * bz);
            }
        }

        void vertical_gain_scalar(const double *theta_deg, std::size_t n, const AntennaParams &params, double *out)
        {
            for (std::size_t i = 0; i < n; ++i)
            {
                const double u = (theta_deg[i] - params.downtilt_deg) / params.theta3db_deg;
                out[i] = -std::min(12.0 * (u * u), params.sla_db);
            }
        }

        std::complex<double> phasor_sum_scalar(const double *amplitude, const double *cos_phase,
                                               const double *sin_phase, std::size_t n)
        {
            double re = 0.0, im = 0.0;
            for (std::size_t i = 0; i < n; ++i)
            {
                re += amplitude[i] * cos_phase[i];
                im += amplitude[i] * sin_phase[i];
            }
            return {re, im};
        }

        constexpr KernelTable kScalar{Isa::Scalar, "scalar", &segment_lengths_scalar, &vertical_gain_scalar,
                                      &phasor_sum_scalar};
    }

    const KernelTable &scalar_table() { return kScalar; }
}
