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

#include "irsuav/cli.hpp"

#include <chrono>
#include <charconv>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "irsuav/config.hpp"
#include "irsuav/error.hpp"
#include "irsuav/experiments.hpp"
#include "irsuav/kernels/kernels.hpp"
#include "irsuav/output.hpp"

namespace irsuav::cli
{
    namespace
    {
        double to_double(std::string_view text)
        {
            while (!text.empty() && text.front() == ' ')
                text.remove_prefix(1);
            while (!text.empty() && text.back() == ' ')
                text.remove_suffix(1);
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
                throw ConfigError("invalid number '" + std::string(text) + "'");
            return v;
        }

        std::string dashed(std::string s)
        {
            for (char &c : s)
                if (c == '_')
                    c = '-';
            return s;
        }

        std::string read_file(const std::string &path)
        {
            std::ifstream in(path, std::ios::binary);
            if (!in)
                throw ConfigError("cannot read config file '" + path + "'");
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }

        void write_file(const std::string &path, const std::string &content)
        {
            std::ofstream f(path, std::ios::binary);
            if (!f)
                throw ConfigError("cannot write '" + path + "'");
            f << content;
            if (!f)
                throw ConfigError("write failed for '" + path + "'");
        }

        std::string utc_timestamp()
        {
            const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            std::tm tm{};
            gmtime_r(&now, &tm);
            char buf[32];
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
            return buf;
        }

        // Options every subcommand takes.
        struct CommonOptions
        {
            std::string config_path;
            std::string out_path;
            std::string manifest_path;
            unsigned threads = 0;
            std::map<std::string, std::string> overrides; // canonical key -> raw value
            std::map<std::string, CLI::Option *> override_options;
        };

        void add_common(CLI::App &cmd, CommonOptions &o)
        {
            cmd.add_option("--config", o.config_path, "Configuration file (key = value lines)");
            cmd.add_option("--out", o.out_path, "Write the CSV table here instead of standard output");
            cmd.add_option("--manifest", o.manifest_path, "Run manifest path (default: <out>.manifest when --out is set)");
            cmd.add_option("--threads", o.threads, "Worker thread cap (0 = all cores; never changes results)");
            for (const std::string &key : config_keys())
            {
                std::string names = "--" + dashed(key);
                for (const std::string &alias : key_aliases(key))
                    names += ",--" + dashed(alias);
                o.override_options[key] = cmd.add_option(names, o.overrides[key], "Override config key " + key);
            }
        }

        struct Resolved
        {
            RunConfig config;
            std::string kernel;
        };

        Resolved resolve(const CommonOptions &o)
        {
            ConfigOverrides overrides;
            for (const auto &[key, opt] : o.override_options)
                if (opt->count() > 0)
                    overrides.emplace_back(key, o.overrides.at(key));
            const std::string text = o.config_path.empty() ? std::string() : read_file(o.config_path);
            Resolved r{parse_config(text, overrides), {}};
            r.config.mc.threads = o.threads;
            try
            {
                kernels::select(kernels::parse_isa(r.config.kernel));
            }
            catch (const InvalidParameter &e)
            {
                throw ConfigError(std::string("kernel: ") + e.what(), "kernel");
            }
            r.kernel = kernels::isa_name(kernels::active().isa);
            r.config.kernel = r.kernel;
            return r;
        }

        std::string join_args(const std::vector<std::string> &args)
        {
            std::string s;
            for (const std::string &a : args)
            {
                if (!s.empty())
                    s += ' ';
                s += a.find_first_of(" \t\"'") == std::string::npos ? a : "'" + a + "'";
            }
            return s;
        }

        void emit(const CommonOptions &o, const std::string &csv, std::ostream &out)
        {
            if (o.out_path.empty())
                out << csv;
            else
                write_file(o.out_path, csv);
        }

        void emit_manifest(const CommonOptions &o, const Resolved &r, const std::vector<std::string> &args,
                           std::vector<std::string> notes)
        {
            std::string path = o.manifest_path;
            if (path.empty() && !o.out_path.empty())
                path = o.out_path + ".manifest";
            if (path.empty())
                return;
            RunManifest m{r.config, join_args(args), utc_timestamp(), r.kernel, std::move(notes)};
            write_file(path, render_manifest(m));
        }

        std::pair<SweepParameter, std::vector<double>> parse_overlay(const std::string &text)
        {
            const auto eq = text.find('=');
            if (eq == std::string::npos)
                throw ConfigError("--overlay expects NAME=V1,V2,...");
            return {parse_sweep_parameter(text.substr(0, eq)), parse_values(text.substr(eq + 1))};
        }

        std::vector<std::string> baseline_notes(const RunConfig &c)
        {
            return {std::string("baseline: ") + to_string(c.scenario.wall_phase_mode) + " wall-ray phases, " +
                    to_string(c.scenario.scatter_placement) + " scatter placement, power averaged over runs"};
        }
    }

    std::vector<double> parse_values(std::string_view text)
    {
        if (text.empty())
            throw ConfigError("empty value list");
        if (text.find(':') != std::string_view::npos)
        {
            std::vector<double> parts;
            std::size_t start = 0;
            while (true)
            {
                const auto colon = text.find(':', start);
                parts.push_back(to_double(text.substr(start, colon - start)));
                if (colon == std::string_view::npos)
                    break;
                start = colon + 1;
            }
            if (parts.size() != 3)
                throw ConfigError("range must be START:STOP:STEP");
            try
            {
                return make_range(parts[0], parts[1], parts[2]);
            }
            catch (const InvalidParameter &e)
            {
                throw ConfigError(e.what());
            }
        }
        std::vector<double> values;
        std::size_t start = 0;
        while (true)
        {
            const auto comma = text.find(',', start);
            values.push_back(to_double(text.substr(start, comma - start)));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        return values;
    }

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"irsuav: IRS gain for UAVs served by a down-tilted cellular BS"};
        app.require_subcommand(1);
        app.set_version_flag("--version", std::string(artifact_version()));

        CommonOptions gain_opts, sweep_opts, opt_opts;

        CLI::App *gain = app.add_subcommand("gain", "IRS gain at one scenario");
        add_common(*gain, gain_opts);

        CLI::App *sweep = app.add_subcommand("sweep", "IRS gain over a parameter grid");
        add_common(*sweep, sweep_opts);
        std::string sweep_name, values_text, overlay_text, svg_path, plot_kind = "gain";
        sweep->add_option("--sweep", sweep_name, "Swept parameter: k, h-uav, l, h-irs or f")->required();
        sweep->add_option("--values", values_text, "START:STOP:STEP or V1,V2,... (default grid per parameter)");
        sweep->add_option("--overlay", overlay_text, "Second parameter, one curve per value: NAME=V1,V2,...");
        sweep->add_option("--svg", svg_path, "Also write a line plot here");
        sweep->add_option("--plot", plot_kind, "SVG content: gain or amplitudes")
            ->check(CLI::IsMember({"gain", "amplitudes"}));

        CLI::App *optimize = app.add_subcommand("optimize", "Gain-maximising BS-IRS distance");
        add_common(*optimize, opt_opts);
        std::string l_grid_text = "10:100:5";
        bool refine = false;
        optimize->add_option("--l-grid", l_grid_text, "Distance grid START:STOP:STEP or V1,V2,...");
        optimize->add_flag("--refine", refine, "Golden-section refinement around the grid argmax");

        std::vector<const char *> argv;
        for (const std::string &a : args)
            argv.push_back(a.c_str());

        try
        {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::ParseError &e)
        {
            const int code = app.exit(e, out, err);
            return code == 0 ? kExitOk : kExitConfig;
        }

        try
        {
            if (gain->parsed())
            {
                const Resolved r = resolve(gain_opts);
                const GainResult g = irs_gain(r.config.scenario, r.config.mc);
                emit(gain_opts, csv_header(false, false) + csv_row(std::nullopt, std::nullopt, g), out);
                emit_manifest(gain_opts, r, args, baseline_notes(r.config));
            }
            else if (sweep->parsed())
            {
                const Resolved r = resolve(sweep_opts);
                SweepSpec spec;
                spec.swept = parse_sweep_parameter(sweep_name);
                spec.values = values_text.empty() ? default_grid(spec.swept) : parse_values(values_text);
                if (!overlay_text.empty())
                {
                    auto [param, values] = parse_overlay(overlay_text);
                    spec.overlay = param;
                    spec.overlay_values = std::move(values);
                }
                spec.base = r.config.scenario;
                spec.mc = r.config.mc;
                const SweepResult result = run_sweep(spec);

                emit(sweep_opts, sweep_csv(result.rows), out);
                if (!svg_path.empty())
                {
                    const LinePlot plot = plot_kind == "amplitudes" ? amplitude_plot(result, spec.swept)
                                                                    : gain_plot(result, spec.swept, spec.overlay);
                    write_file(svg_path, render_svg(plot));
                }
                std::vector<std::string> notes = baseline_notes(r.config);
                notes.push_back(std::string("param = ") + parameter_key(spec.swept) +
                                (spec.overlay ? std::string(", overlay = ") + parameter_key(*spec.overlay) : ""));
                notes.insert(notes.end(), result.notes.begin(), result.notes.end());
                emit_manifest(sweep_opts, r, args, notes);
            }
            else if (optimize->parsed())
            {
                const Resolved r = resolve(opt_opts);
                const std::vector<double> grid = parse_values(l_grid_text);
                OptimizeOptions options;
                options.refine = refine;
                const OptimalDistance best = optimal_distance(r.config.scenario, grid, r.config.mc, options);

                const std::string summary = "l_star_m=" + format_number(best.l_star) +
                                            ",gain_db=" + format_number(best.gain_db) +
                                            (best.refined ? ",refined=1" : ",refined=0") + "\n";
                if (opt_opts.out_path.empty())
                {
                    out << sweep_csv(best.grid) << "# " << summary;
                }
                else
                {
                    write_file(opt_opts.out_path, sweep_csv(best.grid));
                    out << summary;
                }
                std::vector<std::string> notes = baseline_notes(r.config);
                notes.push_back("param = l_m; " + summary.substr(0, summary.size() - 1));
                emit_manifest(opt_opts, r, args, notes);
            }
            return kExitOk;
        }
        catch (const ConfigError &e)
        {
            err << "error: " << e.what() << "\n";
            return kExitConfig;
        }
        catch (const InvalidParameter &e)
        {
            err << "error: " << e.what() << "\n";
            return kExitConfig;
        }
        catch (const DegenerateGeometry &e)
        {
            err << "geometry error: " << e.what() << "\n";
            return kExitNumeric;
        }
        catch (const std::exception &e)
        {
            err << "numerical error: " << e.what() << "\n";
            return kExitNumeric;
        }
    }
}
