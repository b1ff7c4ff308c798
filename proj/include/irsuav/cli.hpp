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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace irsuav::cli
{
    inline constexpr int kExitOk = 0;
    inline constexpr int kExitConfig = 2;
    inline constexpr int kExitNumeric = 3;

    // Runs one command. args[0] is the program name. Never throws.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

    // "START:STOP:STEP" (inclusive), "a,b,c", or a single number.
    std::vector<double> parse_values(std::string_view text);
}
