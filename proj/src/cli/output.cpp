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

#include "irsuav/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include "irsuav/rng.hpp"

#ifndef IRSUAV_VERSION
#define IRSUAV_VERSION "unknown"
#endif

namespace irsuav
{
    const char *artifact_version() { return IRSUAV_VERSION; }

    std::string format_number(double v)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return buf;
    }

    std::string csv_header(bool with_param, bool with_overlay)
    {
        std::string h;
        if (with_param)
            h += "param,";
        if (with_overlay)
            h += "overlay,";
        return h + kResultColumns + "\n";
    }

    std::string csv_row(std::optional<double> param, std::optional<double> overlay, const GainResult &r)
    {
        std::string row;
        if (param)
            row += format_number(*param) + ",";
        if (overlay)
            row += format_number(*overlay) + ",";
        for (double v : {r.gain_db, r.std_error_db, r.gamma_irs, r.los_amplitude, r.irs_sum_amplitude,
                         r.mean_wall_reflection_amplitude, r.mean_wall_power_mw})
            row += format_number(v) + ",";
        row.back() = '\n';
        return row;
    }

    std::string sweep_csv(const std::vector<SweepRow> &rows)
    {
        const bool overlay = std::any_of(rows.begin(), rows.end(), [](const SweepRow &r) { return r.overlay_value.has_value(); });
        std::string out = csv_header(true, overlay);
        for (const SweepRow &r : rows)
            out += csv_row(r.value, overlay ? r.overlay_value : std::nullopt, r.result);
        return out;
    }

    namespace
    {
        std::string xml_escape(const std::string &s)
        {
            std::string out;
            for (char c : s)
            {
                switch (c)
                {
                case '&':
                    out += "&amp;";
                    break;
                case '<':
                    out += "&lt;";
                    break;
                case '>':
                    out += "&gt;";
                    break;
                case '"':
                    out += "&quot;";
                    break;
                default:
                    out += c;
                }
            }
            return out;
        }

        std::string fmt(double v, const char *spec = "%.2f")
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, spec, v);
            return buf;
        }

        // 1, 2, 5 x 10^n steps giving roughly `target` intervals.
        std::vector<double> nice_ticks(double lo, double hi, int target = 6)
        {
            if (!(hi > lo))
            {
                lo -= 1.0;
                hi += 1.0;
            }
            const double raw = (hi - lo) / target;
            const double mag = std::pow(10.0, std::floor(std::log10(raw)));
            double step = mag;
            for (double m : {1.0, 2.0, 5.0, 10.0})
                if (m * mag >= raw)
                {
                    step = m * mag;
                    break;
                }
            std::vector<double> ticks;
            for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step)
                ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
            return ticks;
        }

        const char *kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    }

    std::string render_svg(const LinePlot &plot)
    {
        constexpr double width = 720, height = 480;
        constexpr double left = 80, right = 170, top = 50, bottom = 70;
        const double pw = width - left - right, ph = height - top - bottom;

        double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
        double ymin = xmin, ymax = -xmin;
        for (const PlotSeries &s : plot.series)
            for (const auto &[x, y] : s.points)
            {
                if (!std::isfinite(x) || !std::isfinite(y))
                    continue;
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        if (!std::isfinite(xmin))
        {
            xmin = 0;
            xmax = 1;
            ymin = 0;
            ymax = 1;
        }
        if (xmax == xmin)
        {
            xmin -= 1;
            xmax += 1;
        }
        const double ypad = ymax > ymin ? 0.05 * (ymax - ymin) : 1.0;
        ymin -= ypad;
        ymax += ypad;

        auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
        auto sy = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

        std::string svg;
        svg += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
        svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width, "%.0f") +
               "\" height=\"" + fmt(height, "%.0f") + "\" viewBox=\"0 0 " + fmt(width, "%.0f") + " " +
               fmt(height, "%.0f") + "\">\n";
        svg += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        svg += "<text x=\"" + fmt(left + pw / 2) + "\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\" "
               "text-anchor=\"middle\">" + xml_escape(plot.title) + "</text>\n";

        // grid and ticks
        svg += "<g font-family=\"sans-serif\" font-size=\"11\" stroke-width=\"1\">\n";
        for (double t : nice_ticks(xmin, xmax))
        {
            const double x = sx(t);
            svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(top) + "\" x2=\"" + fmt(x) + "\" y2=\"" + fmt(top + ph) +
                   "\" stroke=\"#dddddd\"/>\n";
            svg += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(top + ph + 16) + "\" text-anchor=\"middle\">" +
                   fmt(t, "%g") + "</text>\n";
        }
        for (double t : nice_ticks(ymin, ymax))
        {
            const double y = sy(t);
            svg += "<line x1=\"" + fmt(left) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(left + pw) + "\" y2=\"" + fmt(y) +
                   "\" stroke=\"#dddddd\"/>\n";
            svg += "<text x=\"" + fmt(left - 6) + "\" y=\"" + fmt(y + 4) + "\" text-anchor=\"end\">" + fmt(t, "%g") +
                   "</text>\n";
        }
        svg += "</g>\n";
        svg += "<rect x=\"" + fmt(left) + "\" y=\"" + fmt(top) + "\" width=\"" + fmt(pw) + "\" height=\"" + fmt(ph) +
               "\" fill=\"none\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt(left + pw / 2) + "\" y=\"" + fmt(height - 22) +
               "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" + xml_escape(plot.x_label) +
               "</text>\n";
        svg += "<text x=\"20\" y=\"" + fmt(top + ph / 2) + "\" font-family=\"sans-serif\" font-size=\"13\" "
               "text-anchor=\"middle\" transform=\"rotate(-90 20 " + fmt(top + ph / 2) + ")\">" +
               xml_escape(plot.y_label) + "</text>\n";

        for (std::size_t i = 0; i < plot.series.size(); ++i)
        {
            const PlotSeries &s = plot.series[i];
            const char *colour = kPalette[i % std::size(kPalette)];
            std::string pts;
            for (const auto &[x, y] : s.points)
                if (std::isfinite(x) && std::isfinite(y))
                    pts += fmt(sx(x)) + "," + fmt(sy(y)) + " ";
            if (!pts.empty())
                pts.pop_back();
            svg += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"2\" points=\"" + pts +
                   "\"/>\n";
            const double ly = top + 16 + 20.0 * static_cast<double>(i);
            svg += "<line x1=\"" + fmt(left + pw + 12) + "\" y1=\"" + fmt(ly) + "\" x2=\"" + fmt(left + pw + 36) +
                   "\" y2=\"" + fmt(ly) + "\" stroke=\"" + colour + "\" stroke-width=\"2\"/>\n";
            svg += "<text x=\"" + fmt(left + pw + 42) + "\" y=\"" + fmt(ly + 4) +
                   "\" font-family=\"sans-serif\" font-size=\"12\">" + xml_escape(s.name) + "</text>\n";
        }
        svg += "</svg>\n";
        return svg;
    }

    LinePlot gain_plot(const SweepResult &result, SweepParameter swept, std::optional<SweepParameter> overlay)
    {
        LinePlot plot;
        plot.title = std::string("IRS gain vs ") + parameter_flag(swept);
        plot.x_label = parameter_label(swept);
        plot.y_label = "IRS gain [dB]";

        std::vector<std::optional<double>> order;
        std::map<std::optional<double>, std::size_t> index;
        for (const SweepRow &r : result.rows)
        {
            if (!index.count(r.overlay_value))
            {
                index[r.overlay_value] = plot.series.size();
                PlotSeries s;
                s.name = r.overlay_value && overlay ? std::string(parameter_flag(*overlay)) + " = " +
                                                          format_number(*r.overlay_value)
                                                    : "gain";
                plot.series.push_back(std::move(s));
            }
            plot.series[index[r.overlay_value]].points.emplace_back(r.value, r.result.gain_db);
        }
        return plot;
    }

    LinePlot amplitude_plot(const SweepResult &result, SweepParameter swept)
    {
        LinePlot plot;
        plot.title = std::string("Received amplitude per link vs ") + parameter_flag(swept);
        plot.x_label = parameter_label(swept);
        plot.y_label = "20 log10(amplitude) [dBm]";
        PlotSeries los{"LoS", {}}, wall{"wall", {}}, irs{"IRS", {}};
        if (!result.rows.empty())
        {
            const std::optional<double> first = result.rows.front().overlay_value;
            for (const SweepRow &r : result.rows)
            {
                if (r.overlay_value != first)
                    continue;
                los.points.emplace_back(r.value, 20.0 * std::log10(r.result.los_amplitude));
                wall.points.emplace_back(r.value, 20.0 * std::log10(r.result.mean_wall_reflection_amplitude));
                irs.points.emplace_back(r.value, 20.0 * std::log10(r.result.irs_sum_amplitude));
            }
        }
        plot.series = {std::move(irs), std::move(wall), std::move(los)};
        return plot;
    }

    std::string render_manifest(const RunManifest &m)
    {
        std::string out;
        out += "# irsuav run manifest\n";
        out += std::string("# version: ") + artifact_version() + "\n";
        out += std::string("# generator: ") + kGeneratorIdentity + "\n";
        out += "# kernel: " + m.kernel + "\n";
        out += "# baseline: wall_phase_mode=" + std::string(to_string(m.config.scenario.wall_phase_mode)) +
               " scatter_placement=" + to_string(m.config.scenario.scatter_placement) +
               " n_rays=" + std::to_string(m.config.mc.n_rays) + "\n";
        out += "# timestamp: " + m.timestamp + "\n";
        out += "# command: " + m.command_line + "\n";
        for (const std::string &note : m.notes)
            out += "# note: " + note + "\n";
        out += render_config(m.config);
        return out;
    }
}
