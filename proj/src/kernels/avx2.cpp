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

// This translation unit is the only one built with -mavx2. Nothing here may be
// reached unless cpu_supports(Isa::Avx2) is true. No -mfma: products and sums
// must round exactly like the scalar reference.

#include "irsuav/kernels/kernels.hpp"

#if defined(IRSUAV_HAVE_AVX2) && defined(__AVX2__)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace irsuav::kernels
{
    namespace
    {
        void segment_lengths_avx2(const Position3D &from, const Position3D &to,
                                  const double *x, const double *y, const double *z, std::size_t n,
                                  double *d1, double *d2, double *horiz)
        {
            const __m256d fx = _mm256_set1_pd(from.x), fy = _mm256_set1_pd(from.y), fz = _mm256_set1_pd(from.z);
            const __m256d tx = _mm256_set1_pd(to.x), ty = _mm256_set1_pd(to.y), tz = _mm256_set1_pd(to.z);

            std::size_t i = 0;
            for (; i + 4 <= n; i += 4)
            {
                const __m256d px = _mm256_loadu_pd(x + i);
                const __m256d py = _mm256_loadu_pd(y + i);
                const __m256d pz = _mm256_loadu_pd(z + i);

                const __m256d ax = _mm256_sub_pd(px, fx);
                const __m256d ay = _mm256_sub_pd(py, fy);
                const __m256d az = _mm256_sub_pd(pz, fz);
                const __m256d ah = _mm256_add_pd(_mm256_mul_pd(ax, ax), _mm256_mul_pd(ay, ay));
                _mm256_storeu_pd(horiz + i, _mm256_sqrt_pd(ah));
                _mm256_storeu_pd(d1 + i, _mm256_sqrt_pd(_mm256_add_pd(ah, _mm256_mul_pd(az, az))));

                const __m256d bx = _mm256_sub_pd(tx, px);
                const __m256d by = _mm256_sub_pd(ty, py);
                const __m256d bz = _mm256_sub_pd(tz, pz);
                const __m256d bh = _mm256_add_pd(_mm256_mul_pd(bx, bx), _mm256_mul_pd(by, by));
                _mm256_storeu_pd(d2 + i, _mm256_sqrt_pd(_mm256_add_pd(bh, _mm256_mul_pd(bz, bz))));
            }
            if (i < n)
                scalar_table().segment_lengths(from, to, x + i, y + i, z + i, n - i, d1 + i, d2 + i, horiz + i);
        }

        void vertical_gain_avx2(const double *theta_deg, std::size_t n, const AntennaParams &params, double *out)
        {
            const __m256d tilt = _mm256_set1_pd(params.downtilt_deg);
            const __m256d width = _mm256_set1_pd(params.theta3db_deg);
            const __m256d sla = _mm256_set1_pd(params.sla_db);
            const __m256d twelve = _mm256_set1_pd(12.0);
            const __m256d sign = _mm256_set1_pd(-0.0);

            std::size_t i = 0;
            for (; i + 4 <= n; i += 4)
            {
                const __m256d u = _mm256_div_pd(_mm256_sub_pd(_mm256_loadu_pd(theta_deg + i), tilt), width);
                const __m256d loss = _mm256_mul_pd(twelve, _mm256_mul_pd(u, u));
                // min(loss, sla); NaN loss propagates like std::min(loss, sla) does (returns loss)
                const __m256d capped = _mm256_min_pd(sla, loss);
                _mm256_storeu_pd(out + i, _mm256_xor_pd(capped, sign));
            }
            if (i < n)
                scalar_table().vertical_gain(theta_deg + i, n - i, params, out + i);
        }

        std::complex<double> phasor_sum_avx2(const double *amplitude, const double *cos_phase,
                                             const double *sin_phase, std::size_t n)
        {
            __m256d re = _mm256_setzero_pd(), im = _mm256_setzero_pd();
            std::size_t i = 0;
            for (; i + 4 <= n; i += 4)
            {
                const __m256d a = _mm256_loadu_pd(amplitude + i);
                re = _mm256_add_pd(re, _mm256_mul_pd(a, _mm256_loadu_pd(cos_phase + i)));
                im = _mm256_add_pd(im, _mm256_mul_pd(a, _mm256_loadu_pd(sin_phase + i)));
            }
            alignas(32) double lanes_re[4], lanes_im[4];
            _mm256_store_pd(lanes_re, re);
            _mm256_store_pd(lanes_im, im);
            double sum_re = (lanes_re[0] + lanes_re[1]) + (lanes_re[2] + lanes_re[3]);
            double sum_im = (lanes_im[0] + lanes_im[1]) + (lanes_im[2] + lanes_im[3]);
            for (; i < n; ++i)
            {
                sum_re += amplitude[i] * cos_phase[i];
                sum_im += amplitude[i] * sin_phase[i];
            }
            return {sum_re, sum_im};
        }

        constexpr KernelTable kAvx2{Isa::Avx2, "avx2", &segment_lengths_avx2, &vertical_gain_avx2,
                                    &phasor_sum_avx2};
    }

    const KernelTable *avx2_table() { return &kAvx2; }
}

#else

namespace irsuav::kernels
{
    const KernelTable *avx2_table() { return nullptr; }
}

#endif
