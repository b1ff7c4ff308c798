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

#include <atomic>
#include <string>

#include "irsuav/error.hpp"
#include "irsuav/kernels/kernels.hpp"

namespace irsuav::kernels
{
    namespace
    {
        std::atomic<const KernelTable *> g_active{nullptr};

        const KernelTable &table_for(Isa isa)
        {
            if (isa == Isa::Avx2)
                return *avx2_table();
            return scalar_table();
        }
    }

    bool cpu_supports(Isa isa)
    {
        switch (isa)
        {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
            if (avx2_table() == nullptr)
                return false;
            __builtin_cpu_init();
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        }
        return false;
    }

    Isa detect_best()
    {
        return cpu_supports(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
    }

    const KernelTable &active()
    {
        const KernelTable *table = g_active.load(std::memory_order_acquire);
        if (table == nullptr)
        {
            table = &table_for(detect_best());
            const KernelTable *expected = nullptr;
            if (!g_active.compare_exchange_strong(expected, table, std::memory_order_acq_rel))
                table = expected;
        }
        return *table;
    }

    void select(Isa isa)
    {
        if (!cpu_supports(isa))
            throw InvalidParameter(std::string("kernel ISA not available: ") + isa_name(isa));
        g_active.store(&table_for(isa), std::memory_order_release);
    }

    Isa parse_isa(std::string_view name)
    {
        if (name == "scalar")
            return Isa::Scalar;
        if (name == "avx2")
            return Isa::Avx2;
        if (name == "auto")
            return detect_best();
        throw InvalidParameter("unknown kernel ISA '" + std::string(name) + "' (expected scalar, avx2 or auto)");
    }

    const char *isa_name(Isa isa)
    {
        return isa == Isa::Avx2 ? "avx2" : "scalar";
    }
}
