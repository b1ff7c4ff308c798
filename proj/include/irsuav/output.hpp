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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irsuav/config.hpp"
#include "irsuav/experiments.hpp"

namespace irsuav
{
    // Result columns shared by every CSV table, in order.
    inline constexpr const char *kResultColumns =
        "gain_db,std_error_db,gamma_irs,los_amp,irs_sum_amp,wall_mean_amp,mean_wall_power_mw";

    // printf %.6g
    std::string format_number(double v);

    std::string csv_header(bool with_param, bool with_overlay);
    std::string csv_row(std::optional<double> param, std::optional<double> overlay, const GainResult &r);

    // Header plus one row per sweep row. The overlay column is present when any row has an overlay value.
    std::string sweep_csv(const std::vector<SweepRow> &rows);

    struct PlotSeries
    {
        std::string name;
        std::vector<std::pair<double, double>> points;
    };

    struct LinePlot
    {
        std::string title;
        std::string x_label;
        std::string y_label;
        std::vector<PlotSeries> series;
    };

    // Standalone SVG 1.1 document: axes with ticks, one polyline per series, legend.
    std::string render_svg(const LinePlot &plot);

    // Gain in dB vs the swept parameter, one series per overlay value.
    LinePlot gain_plot(const SweepResult &result, SweepParameter swept, std::optional<SweepParameter> overlay);

    // 20 log10 of the LoS, wall and IRS amplitudes vs the swept parameter (first overlay curve only).
    LinePlot amplitude_plot(const SweepResult &result, SweepParameter swept);

    struct RunManifest
    {
        RunConfig config;
        std::string command_line;
        std::string timestamp;
        std::string kernel; // resolved ISA actually used
        std::vector<std::string> notes;
    };

    // A config file (feedable back through --config) with metadata in comment lines.
    std::string render_manifest(const RunManifest &manifest);

    const char *artifact_version();
}
