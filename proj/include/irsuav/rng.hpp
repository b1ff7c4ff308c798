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

#include <cstdint>
#include <random>

namespace irsuav
{
    // Identity string written into run manifests.
    inline constexpr const char *kGeneratorIdentity = "mt19937_64; run seed = splitmix64(master + 0x9e3779b97f4a7c15*(run+1)); u = (x>>11)*2^-53";

    // splitmix64 output function.
    constexpr std::uint64_t mix64(std::uint64_t z) noexcept
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Seed for Monte Carlo run `run`. Depends only on (master_seed, run), so runs may execute in any order.
    constexpr std::uint64_t run_seed(std::uint64_t master_seed, std::uint64_t run) noexcept
    {
        return mix64(master_seed + 0x9e3779b97f4a7c15ULL * (run + 1));
    }

    // Per-task random stream. Not shared between threads.
    class RandomStream
    {
    public:
        explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

        // Uniform on [0, 1), 53 random bits. Portable across standard libraries.
        double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

        // Uniform on [lo, hi).
        double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    private:
        std::mt19937_64 engine_;
    };
}
