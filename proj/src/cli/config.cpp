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

#include "irsuav/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>

#include "irsuav/error.hpp"
#include "irsuav/kernels/kernels.hpp"

namespace irsuav
{
    namespace
    {
        const std::vector<std::string> kKeys = {
            "f_ghz", "p_t_dbm", "theta_etilt_deg", "theta3db_deg", "sla_db", "breakpoint_height_m",
            "pl_irs_db", "pl_wall_db", "h_bs_m", "h_uav_m", "h_irs_m", "irs_rows", "irs_cols", "k",
            "element_pitch_m", "l_m", "uav_x_m", "irs_phase_mode", "wall_phase_mode", "scatter_placement",
            "n_rays", "n_runs", "master_seed", "kernel"};

        std::string strip_unit(const std::string &key)
        {
            for (std::string_view suffix : {"_ghz", "_dbm", "_deg", "_db", "_m"})
                if (key.size() > suffix.size() && key.ends_with(suffix))
                    return key.substr(0, key.size() - suffix.size());
            return key;
        }

        std::string_view trim(std::string_view s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        double parse_double(std::string_view text, const std::string &key, int line)
        {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
                throw ConfigError("invalid number '" + std::string(text) + "' for " + key, key, line);
            return v;
        }

        template <class Int>
        Int parse_int(std::string_view text, const std::string &key, int line)
        {
            Int v{};
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc() || ptr != text.data() + text.size())
                throw ConfigError("invalid integer '" + std::string(text) + "' for " + key, key, line);
            return v;
        }

        // Parsed state before K resolution.
        struct Builder
        {
            RunConfig config;
            std::optional<int> rows, cols, k;

            void set(const std::string &key, std::string_view value, int line)
            {
                ScenarioConfig &s = config.scenario;
                MonteCarloConfig &mc = config.mc;
                auto num = [&] { return parse_double(value, key, line); };
                auto guarded = [&](auto &&fn)
                {
                    try
                    {
                        fn();
                    }
                    catch (const InvalidParameter &e)
                    {
                        throw ConfigError(key + ": " + e.what(), key, line);
                    }
                };

                if (key == "f_ghz")
                    s.f_ghz = num();
                else if (key == "p_t_dbm")
                    s.p_t_dbm = num();
                else if (key == "theta_etilt_deg")
                    s.theta_etilt_deg = num();
                else if (key == "theta3db_deg")
                    s.theta3db_deg = num();
                else if (key == "sla_db")
                    s.sla_db = num();
                else if (key == "breakpoint_height_m")
                    s.breakpoint_height_m = num();
                else if (key == "pl_irs_db")
                    s.pl_irs_db = num();
                else if (key == "pl_wall_db")
                    s.pl_wall_db = num();
                else if (key == "h_bs_m")
                    s.h_bs_m = num();
                else if (key == "h_uav_m")
                    s.h_uav_m = num();
                else if (key == "h_irs_m")
                    s.h_irs_m = num();
                else if (key == "irs_rows")
                    rows = parse_int<int>(value, key, line);
                else if (key == "irs_cols")
                    cols = parse_int<int>(value, key, line);
                else if (key == "k")
                    k = parse_int<int>(value, key, line);
                else if (key == "element_pitch_m")
                    s.element_pitch_m = num();
                else if (key == "l_m")
                    s.l_m = num();
                else if (key == "uav_x_m")
                    s.uav_x_m = num();
                else if (key == "irs_phase_mode")
                    guarded([&] { s.irs_phase_mode = parse_phase_mode(value); });
                else if (key == "wall_phase_mode")
                    guarded([&] { s.wall_phase_mode = parse_wall_phase_mode(value); });
                else if (key == "scatter_placement")
                    guarded([&] { s.scatter_placement = parse_scatter_placement(value); });
                else if (key == "n_rays")
                    mc.n_rays = parse_int<std::size_t>(value, key, line);
                else if (key == "n_runs")
                    mc.n_runs = parse_int<std::size_t>(value, key, line);
                else if (key == "master_seed")
                    mc.master_seed = parse_int<std::uint64_t>(value, key, line);
                else if (key == "kernel")
                    guarded([&]
                            {
                        (void)kernels::parse_isa(value);
                        config.kernel = std::string(value); });
                else
                    throw ConfigError("unknown key '" + key + "'", key, line);
            }

            void resolve_irs_size()
            {
                ScenarioConfig &s = config.scenario;
                if (rows && *rows < 1)
                    throw ConfigError("irs_rows must be >= 1", "irs_rows");
                if (cols && *cols < 1)
                    throw ConfigError("irs_cols must be >= 1", "irs_cols");
                if (!k)
                {
                    s.irs_rows = rows.value_or(s.irs_rows);
                    s.irs_cols = cols.value_or(s.irs_cols);
                    return;
                }
                if (*k < 1)
                    throw ConfigError("k must be >= 1", "k");
                int r = 0, c = 0;
                if (rows && cols)
                {
                    r = *rows;
                    c = *cols;
                }
                else if (rows)
                {
                    r = *rows;
                    c = *k / r;
                }
                else if (cols)
                {
                    c = *cols;
                    r = *k / c;
                }
                else
                {
                    r = static_cast<int>(std::floor(std::sqrt(static_cast<double>(*k))));
                    while (r * r > *k)
                        --r;
                    while ((r + 1) * (r + 1) <= *k)
                        ++r;
                    c = (*k + r - 1) / r;
                }
                if (r < 1 || c < 1 || static_cast<long long>(r) * c != *k)
                    throw ConfigError("k = " + std::to_string(*k) + " is not irs_rows x irs_cols (" + std::to_string(r) +
                                          " x " + std::to_string(c) + "); give irs_rows and irs_cols explicitly",
                                      "k");
                s.irs_rows = r;
                s.irs_cols = c;
            }

            void validate_ranges() const
            {
                const ScenarioConfig &s = config.scenario;
                auto positive = [](double v, const char *key)
                {
                    if (!(v > 0.0))
                        throw ConfigError(std::string(key) + " must be > 0", key);
                };
                positive(s.f_ghz, "f_ghz");
                positive(s.h_bs_m, "h_bs_m");
                positive(s.h_uav_m, "h_uav_m");
                positive(s.h_irs_m, "h_irs_m");
                positive(s.l_m, "l_m");
                positive(s.element_pitch_m, "element_pitch_m");
                positive(s.theta3db_deg, "theta3db_deg");
                positive(s.sla_db, "sla_db");
                if (s.pl_irs_db < 0.0)
                    throw ConfigError("pl_irs_db must be >= 0", "pl_irs_db");
                if (s.pl_wall_db < 0.0)
                    throw ConfigError("pl_wall_db must be >= 0", "pl_wall_db");
                if (config.mc.n_runs < 1)
                    throw ConfigError("n_runs must be >= 1", "n_runs");
                if (s.scatter_placement == ScatterPlacement::Lattice &&
                    config.mc.n_rays > static_cast<std::size_t>(s.element_count()))
                    throw ConfigError("n_rays must not exceed irs_rows x irs_cols with lattice scatter placement",
                                      "n_rays");
            }
        };

        std::string format_double(double v)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }
    }

    const std::vector<std::string> &config_keys() { return kKeys; }

    std::vector<std::string> key_aliases(std::string_view canonical)
    {
        std::vector<std::string> out;
        const std::string key(canonical);
        const std::string short_key = strip_unit(key);
        if (short_key != key)
            out.push_back(short_key);
        if (key == "master_seed")
            out.emplace_back("seed");
        return out;
    }

    std::string canonical_key(std::string_view key)
    {
        for (const std::string &k : kKeys)
        {
            if (k == key)
                return k;
            for (const std::string &alias : key_aliases(k))
                if (alias == key)
                    return k;
        }
        throw ConfigError("unknown key '" + std::string(key) + "'", std::string(key));
    }

    RunConfig parse_config(std::string_view text, const ConfigOverrides &overrides)
    {
        Builder b;
        std::set<std::string> seen;
        int line_no = 0;
        while (!text.empty())
        {
            ++line_no;
            const auto nl = text.find('\n');
            std::string_view line = text.substr(0, nl);
            text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;

            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'", {}, line_no);
            const std::string_view raw_key = trim(line.substr(0, eq));
            const std::string_view value = trim(line.substr(eq + 1));
            if (raw_key.empty() || value.empty())
                throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'", {}, line_no);

            std::string key;
            try
            {
                key = canonical_key(raw_key);
            }
            catch (const ConfigError &)
            {
                throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + std::string(raw_key) + "'",
                                  std::string(raw_key), line_no);
            }
            if (!seen.insert(key).second)
                throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'", key, line_no);
            try
            {
                b.set(key, value, line_no);
            }
            catch (const ConfigError &e)
            {
                throw ConfigError("line " + std::to_string(line_no) + ": " + e.what(), e.key(), line_no);
            }
        }

        for (const auto &[raw_key, value] : overrides)
            b.set(canonical_key(raw_key), trim(value), 0);

        b.resolve_irs_size();
        b.validate_ranges();
        try
        {
            validate(b.config.scenario);
            validate(b.config.mc);
        }
        catch (const InvalidParameter &e)
        {
            std::string msg = e.what();
            throw ConfigError(msg, msg.substr(0, msg.find(' ')));
        }
        return b.config;
    }

    std::string render_config(const RunConfig &c)
    {
        const ScenarioConfig &s = c.scenario;
        std::string out;
        auto line = [&](const char *key, const std::string &value) { out += std::string(key) + " = " + value + "\n"; };
        line("f_ghz", format_double(s.f_ghz));
        line("p_t_dbm", format_double(s.p_t_dbm));
        line("theta_etilt_deg", format_double(s.theta_etilt_deg));
        line("theta3db_deg", format_double(s.theta3db_deg));
        line("sla_db", format_double(s.sla_db));
        line("breakpoint_height_m", format_double(s.breakpoint_height_m));
        line("pl_irs_db", format_double(s.pl_irs_db));
        line("pl_wall_db", format_double(s.pl_wall_db));
        line("h_bs_m", format_double(s.h_bs_m));
        line("h_uav_m", format_double(s.h_uav_m));
        line("h_irs_m", format_double(s.h_irs_m));
        line("irs_rows", std::to_string(s.irs_rows));
        line("irs_cols", std::to_string(s.irs_cols));
        line("element_pitch_m", format_double(s.element_pitch_m));
        line("l_m", format_double(s.l_m));
        if (s.uav_x_m)
            line("uav_x_m", format_double(*s.uav_x_m));
        line("irs_phase_mode", to_string(s.irs_phase_mode));
        line("wall_phase_mode", to_string(s.wall_phase_mode));
        line("scatter_placement", to_string(s.scatter_placement));
        line("n_rays", std::to_string(c.mc.n_rays));
        line("n_runs", std::to_string(c.mc.n_runs));
        line("master_seed", std::to_string(c.mc.master_seed));
        line("kernel", c.kernel);
        return out;
    }
}
