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

#include <complex>
#include <cstddef>
#include <string_view>

#include "irsuav/geometry.hpp"
#include "irsuav/propagation.hpp"

/*
Arithmetic inner loops of the link budget, in a scalar reference form and
vectorised forms chosen at runtime from what the CPU supports.

Contract shared by every implementation:
  - segment_lengths and vertical_gain are bit-identical to the scalar reference.
    They use only +, -, *, /, sqrt and min, in the same order, with no fused
    multiply-add (the whole project builds with -ffp-contract=off).
  - phasor_sum reduces in a different order per ISA; results agree with the
    scalar reference to rounding (tested at 1e-12 relative).
*/

namespace irsuav::kernels
{
    enum class Isa
    {
        Scalar,
        Avx2
    };

    struct KernelTable
    {
        Isa isa;
        const char *name;

        // For each point p_i: d1 = |p_i - from|, d2 = |to - p_i|, horiz = |(p_i - from) projected on z = 0|.
        void (*segment_lengths)(const Position3D &from, const Position3D &to,
                                const double *x, const double *y, const double *z, std::size_t n,
                                double *d1, double *d2, double *horiz);

        // out_i = -min(12 ((theta_i - tilt) / theta3db)^2, SLA)
        void (*vertical_gain)(const double *theta_deg, std::size_t n, const AntennaParams &params, double *out);

        // sum_i amplitude_i * (cos_i + j sin_i)
        std::complex<double> (*phasor_sum)(const double *amplitude, const double *cos_phase,
                                           const double *sin_phase, std::size_t n);
    };

    const KernelTable &scalar_table();

    // Null when the ISA was not compiled in.
    const KernelTable *avx2_table();

    bool cpu_supports(Isa isa);

    // Best ISA the CPU supports, Scalar as fallback.
    Isa detect_best();

    // Kernels used by the simulator. Defaults to detect_best() on first use.
    const KernelTable &active();

    // Throws InvalidParameter when the ISA is unavailable on this build or CPU.
    void select(Isa isa);

    // "scalar", "avx2" or "auto". Throws InvalidParameter on anything else.
    Isa parse_isa(std::string_view name);
    const char *isa_name(Isa isa);
}
