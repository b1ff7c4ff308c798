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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irsuav/simulator.hpp"

/*
Configuration files are flat `key = value` lines; `#` starts a comment.
Keys:
  f_ghz p_t_dbm theta_etilt_deg pl_irs_db pl_wall_db h_bs_m h_uav_m h_irs_m
  irs_rows irs_cols l_m n_rays n_runs master_seed
plus the extensions
  k theta3db_deg sla_db breakpoint_height_m element_pitch_m uav_x_m
  irs_phase_mode wall_phase_mode scatter_placement kernel
Every key also accepts its name without the unit suffix (h_uav for h_uav_m);
master_seed also accepts `seed`.

IRS size: irs_rows x irs_cols. When `k` is given, the missing side(s) are derived:
with one side given the other is k / side; with neither, rows = floor(sqrt(k)) and
cols = ceil(k / rows). The product must equal k.
*/

namespace irsuav
{
    struct RunConfig
    {
        ScenarioConfig scenario;
        MonteCarloConfig mc;
        std::string kernel = "auto";
    };

    // (key, value) pairs from command-line flags; applied after the file.
    using ConfigOverrides = std::vector<std::pair<std::string, std::string>>;

    // Canonical key list, in rendering order.
    const std::vector<std::string> &config_keys();

    // Canonical key for a key or alias. Throws ConfigError for unknown keys.
    std::string canonical_key(std::string_view key);

    // Aliases accepted for a canonical key (not including the key itself).
    std::vector<std::string> key_aliases(std::string_view canonical);

    // Throws ConfigError (with line number for file errors, key for validation errors).
    RunConfig parse_config(std::string_view file_text, const ConfigOverrides &overrides = {});

    // Every canonical key with its resolved value; parse_config(render_config(c)) == c.
    std::string render_config(const RunConfig &config);
}
