// SPDX-License-Identifier: Apache-2.0
//
// vlcsim: stochastic channel simulator for indoor visible light communication
// Copyright (C) 2026 The vlcsim authors
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

// Named experiment presets. Each one sweeps a few parameters around a base config and
// returns the plotted quantities as tables. Every sweep point reuses the same seed, so
// curves share random numbers and differ only by the swept parameter.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "vlcsim/channel.hpp"
#include "vlcsim/config.hpp"
#include "vlcsim/result_table.hpp"
#include "vlcsim/scene.hpp"
#include "vlcsim/statistics.hpp"

namespace vlcsim {

inline const std::vector<std::string> &experiment_names()
{
    static const std::vector<std::string> names{"acf-time",    "ccf-space",    "fcf-color", "power-vs-distance", "power-rotation-fov",
                                                "rms-patterns", "rms-adr",     "pl-ci",     "bandwidth-fov"};
    return names;
}

inline bool is_experiment(std::string_view name)
{
    const auto &n = experiment_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

inline void require_experiment(std::string_view name)
{
    if (!is_experiment(name))
        throw Error(Errc::UnknownExperiment, "unknown experiment '" + std::string(name) + "'");
}

namespace sweeps {

inline const std::vector<double> kAcfAnchors{0.0, 1.0, 2.0};                 // s
inline const std::vector<double> kDistances{1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5, 6.0}; // m
inline const std::vector<double> kSpacings{1.0, 1.5, 2.0};                   // m
inline const std::vector<double> kRotationFovs{90.0, 45.0};                  // deg
inline const std::vector<double> kBandwidthFovs{30.0, 45.0, 60.0, 85.0};     // deg

struct Color
{
    const char *led;
    double sigma; // m
};
inline const std::vector<Color> kColors{{"red", 1.0}, {"green", 1.1}, {"blue", 1.2}};

} // namespace sweeps

// ---------- preset configs ----------

inline SimulationConfig resolved(SimulationConfig c)
{
    resolve_resources(c);
    validate_config(c);
    return c;
}

// Base config of an experiment when no config file is given.
inline SimulationConfig preset_config(std::string_view name)
{
    require_experiment(name);
    SimulationConfig c;
    auto &s = c.scenario;
    if (name == "acf-time")
    {
        s.receiver.speed = 0.5;
        s.receiver.travel_azimuth = 0.0;
        s.receiver.travel_elevation = kHalfPi;
    }
    else if (name == "ccf-space" || name == "fcf-color")
    {
    }
    else if (name == "power-vs-distance")
    {
        c.ensemble_size = 100;
    }
    else if (name == "power-rotation-fov")
    {
        s.receiver.attitude.azimuth_rate = kPi / 4.0;
        c.time = {0.0, 8.0, 0.01};
        c.ensemble_size = 20;
    }
    else if (name == "rms-patterns")
    {
    }
    else if (name == "rms-adr")
    {
        s.receiver.attitude.num_pd = 3;
        s.receiver.optics.fov = deg_to_rad(60.0);
    }
    else if (name == "pl-ci")
    {
        s.evolution.death_rate = 20.0;
        c.ensemble_size = 20;
    }
    else if (name == "bandwidth-fov")
    {
        c.led.wavelength_nm = 445.0;
        s.evolution.fixed_cluster_count = 10;
        s.clusters.scatterers = 150;
        s.clusters.sigma_ds = 3.422;
        s.clusters.sigma_as = 2.691;
        s.clusters.sigma_es = 3.719;
        s.clusters.elevation_std = deg_to_rad(45.0);
        s.clusters.azimuth_std = deg_to_rad(45.5);
        s.clusters.tx_mean_elevation = kPi / 12.0;
        s.clusters.tx_mean_azimuth = kPi / 3.0;
        s.receiver.distance = 2.6345;
        c.ensemble_size = 200;
    }
    return resolved(std::move(c));
}

// ---------- shared building blocks ----------

inline std::string pattern_label(const PatternSpec &p)
{
    if (p.type == "lambertian")
        return "lambertian-" + format_number(p.order);
    if (p.type == "builtin")
        return p.name;
    return p.file;
}

inline Ensemble make_ensemble(const SimulationConfig &c) { return Ensemble(c.scenario, c.seed, c.ensemble_size); }

// Configured pattern first, then the bundled narrow beam unless already configured.
inline std::vector<SimulationConfig> pattern_variants(const SimulationConfig &base)
{
    std::vector<SimulationConfig> out{base};
    if (!(base.pattern.type == "builtin" && base.pattern.name == "narrow-beam"))
    {
        SimulationConfig n = base;
        n.pattern = PatternSpec{"builtin", 1.0, "narrow-beam", "", kNarrowBeamEfficacy};
        out.push_back(resolved(std::move(n)));
    }
    return out;
}

inline std::vector<Column> correlation_columns(std::vector<Column> leading)
{
    for (const char *n : {"value_re", "value_im", "std_error", "normalized_re", "normalized_im", "normalized_abs", "normalized_std_error",
                          "los_re", "los_im", "nlos_re", "nlos_im", "cross_re", "cross_im", "analytic_normalized_abs",
                          "remain_probability"})
    {
        std::string unit;
        const std::string s = n;
        if (s.rfind("value", 0) == 0 || s == "std_error" || s.rfind("los", 0) == 0 || s.rfind("nlos", 0) == 0 ||
            s.rfind("cross", 0) == 0)
            unit = "1";
        leading.push_back({n, unit});
    }
    return leading;
}

inline std::vector<Cell> correlation_cells(std::vector<Cell> leading, const CorrelationSeries &s, const CorrelationPoint &p)
{
    const Complex analytic = s.zero_lag > 0.0 ? (p.los + p.nlos + p.cross) / s.zero_lag : Complex{};
    for (double v : {p.value.real(), p.value.imag(), p.std_error, p.normalized.real(), p.normalized.imag(), std::abs(p.normalized),
                     p.normalized_std_error, p.los.real(), p.los.imag(), p.nlos.real(), p.nlos.imag(), p.cross.real(), p.cross.imag(),
                     std::abs(analytic), p.remain_probability})
        leading.emplace_back(v);
    return leading;
}

inline std::vector<double> lag_grid(double stop, int points)
{
    std::vector<double> v;
    for (int k = 0; k < points; ++k)
        v.push_back(stop * k / (points - 1));
    return v;
}

inline Cell count_cell(std::size_t n) { return Cell{static_cast<std::int64_t>(n)}; }

// Empirical quantile by linear interpolation between order statistics; +inf entries sort last.
inline double quantile(std::vector<double> v, double q)
{
    if (v.empty())
        return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const double pos = q * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, v.size() - 1);
    if (std::isinf(v[hi]) || lo == hi)
        return pos == static_cast<double>(lo) ? v[lo] : v[hi];
    return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

// One (label, sample) CDF table plus a summary per label.
inline std::vector<ResultTable> cdf_tables(const std::string &label, const std::string &quantity, const std::string &unit,
                                           const std::vector<std::string> &labels, const std::vector<std::vector<double>> &samples)
{
    ResultTable cdf("cdf", {{label, ""}, {quantity, unit}, {"cdf", ""}});
    ResultTable summary("summary", {{label, ""}, {"samples", ""}, {"median", unit}, {"p10", unit}, {"p90", unit}, {"mean", unit}});
    for (std::size_t k = 0; k < labels.size(); ++k)
    {
        std::vector<double> v;
        for (double x : samples[k])
            if (!std::isnan(x))
                v.push_back(x);
        std::sort(v.begin(), v.end());
        for (std::size_t r = 0; r < v.size(); ++r)
            cdf.add_row({labels[k], v[r], (static_cast<double>(r) + 1.0) / static_cast<double>(v.size())});
        summary.add_row({labels[k], count_cell(v.size()), quantile(v, 0.5), quantile(v, 0.1), quantile(v, 0.9), estimate_mean(v).mean});
    }
    return {cdf, summary};
}

// Received power of all elements into one PD, per realization, at time t.
inline std::vector<double> power_samples(const SimulationConfig &c, double t, int pd, unsigned threads)
{
    return map_ensemble<double>(make_ensemble(c), threads, [&](const Scene &s) { return total_received_power(positions_at(s, t), pd); });
}

// RMS delay spread of one link per realization; NaN where the link carries no power.
inline std::vector<double> rms_samples(const SimulationConfig &c, LinkId link, bool with_los, unsigned threads)
{
    return map_ensemble<double>(make_ensemble(c), threads, [&](const Scene &s) {
        Cir cir = cir_snapshot(positions_at(s, 0.0), link.row, link.col, link.pd);
        if (!with_los)
            std::erase_if(cir.taps, [](const RayTap &t) { return t.kind == RayKind::LoS; });
        if (!(cir.dc_gain() > 0.0))
            return std::numeric_limits<double>::quiet_NaN();
        return rms_delay_spread(cir);
    });
}

// f3dB of the L11 link per realization; +inf where |H| never drops 3 dB on the grid.
inline std::vector<double> bandwidth_samples(const SimulationConfig &c, unsigned threads)
{
    return map_ensemble<double>(make_ensemble(c), threads, [&](const Scene &s) {
        const Cir cir = cir_snapshot(positions_at(s, 0.0), 0, 0, 0);
        if (cir.taps.empty())
            return std::numeric_limits<double>::quiet_NaN();
        const auto f = bandwidth_3db(cir, c.frequency);
        return f ? *f : std::numeric_limits<double>::infinity();
    });
}

// Path loss of the L11 sub-channel and of the whole array, per distance and realization.
struct PathLossRun
{
    double distance = 0.0;
    int realization = 0;
    double pl_total = 0.0; // dB
    double pl_l11 = 0.0;   // dB
};

inline std::vector<PathLossRun> path_loss_runs(const SimulationConfig &base, const std::vector<double> &distances, bool whole_array,
                                               unsigned threads)
{
    std::vector<PathLossRun> out;
    for (double d : distances)
    {
        SimulationConfig c = base;
        c.scenario.receiver.distance = d;
        const auto &array = c.scenario.array;
        double pt_total = 0.0;
        for (int i = 0; i < array.layout.rows; ++i)
            for (int j = 0; j < array.layout.cols; ++j)
                pt_total += array.power(i, j);
        const auto runs = map_ensemble<std::pair<double, double>>(make_ensemble(c), threads, [&](const Scene &s) {
            const auto snap = positions_at(s, 0.0);
            const double l11 = link_dc_gain(snap, 0, 0, 0);
            const double total = whole_array ? total_received_power(snap, 0) : 0.0;
            return std::make_pair(whole_array ? path_loss_db(pt_total, total) : 0.0, path_loss_db(1.0, l11));
        });
        for (std::size_t k = 0; k < runs.size(); ++k)
            out.push_back({d, static_cast<int>(k), runs[k].first, runs[k].second});
    }
    return out;
}

inline PathLossFit fit_runs(const std::vector<PathLossRun> &runs, double d0, bool l11)
{
    std::vector<PathLossSample> samples;
    for (const auto &r : runs)
        samples.push_back({r.distance, l11 ? r.pl_l11 : r.pl_total});
    return fit_ci(samples, d0);
}

// ---------- experiments ----------

inline std::vector<ResultTable> run_acf_time(const SimulationConfig &c, unsigned threads)
{
    ResultTable t("acf", correlation_columns({{"anchor_time", "s"}, {"lag", "s"}}));
    std::vector<double> lags;
    for (int k = 0; k < c.time.samples(); ++k)
        lags.push_back(c.time.at(k) - c.time.start);
    const Ensemble e = make_ensemble(c);
    for (double anchor : sweeps::kAcfAnchors)
    {
        const auto s = acf(e, LinkId{0, 0, 0}, anchor, c.anchor_frequency, lags, threads);
        for (const auto &p : s.points)
            t.add_row(correlation_cells({anchor, p.target.dt}, s, p));
    }
    return {t};
}

inline std::vector<ResultTable> run_ccf_space(const SimulationConfig &base, unsigned threads)
{
    ResultTable t("ccf", correlation_columns({{"pattern", ""}, {"anchor_row", ""}, {"anchor_col", ""}, {"led_row", ""}, {"led_col", ""}}));
    const auto &l = base.scenario.array.layout;
    const std::vector<LinkId> anchors{{0, 0, 0}, {l.rows - 1, l.cols - 1, 0}};
    std::vector<LinkId> others;
    for (int i = 0; i < l.rows; ++i)
        for (int j = 0; j < l.cols; ++j)
            others.push_back({i, j, 0});
    for (const auto &c : pattern_variants(base))
    {
        const Ensemble e = make_ensemble(c);
        for (const auto &a : anchors)
        {
            const auto s = ccf(e, a, others, c.time.start, c.anchor_frequency, threads);
            for (const auto &p : s.points)
                t.add_row(correlation_cells({pattern_label(c.pattern), count_cell(a.row + 1), count_cell(a.col + 1),
                                             count_cell(p.target.link.row + 1), count_cell(p.target.link.col + 1)},
                                            s, p));
        }
    }
    return {t};
}

inline std::vector<ResultTable> run_fcf_color(const SimulationConfig &base, unsigned threads)
{
    ResultTable t("fcf", correlation_columns({{"led", ""}, {"sigma", "m"}, {"lag", "Hz"}}));
    const auto lags = lag_grid(base.frequency.stop, base.fcf_lag_points);
    for (const auto &color : sweeps::kColors)
    {
        SimulationConfig c = base;
        c.led = LedSpectrumSpec{color.led, "", std::nullopt};
        c.scenario.clusters.sigma_ds = c.scenario.clusters.sigma_as = c.scenario.clusters.sigma_es = color.sigma;
        c = resolved(std::move(c));
        const auto s = fcf(make_ensemble(c), LinkId{0, 0, 0}, c.time.start, c.anchor_frequency, lags, threads);
        for (const auto &p : s.points)
            t.add_row(correlation_cells({std::string(color.led), color.sigma, p.target.df}, s, p));
    }
    return {t};
}

inline std::vector<ResultTable> run_power_vs_distance(const SimulationConfig &base, unsigned threads)
{
    std::vector<Column> cols{{"distance", "m"}};
    for (double sp : sweeps::kSpacings)
    {
        cols.push_back({"power_spacing_" + format_number(sp) + "m", "W"});
        cols.push_back({"std_error_spacing_" + format_number(sp) + "m", "W"});
    }
    ResultTable t("power", cols);
    std::vector<std::vector<MeanEstimate>> grid(sweeps::kDistances.size());
    for (double sp : sweeps::kSpacings)
        for (std::size_t k = 0; k < sweeps::kDistances.size(); ++k)
        {
            SimulationConfig c = base;
            c.scenario.array.layout.row_spacing = c.scenario.array.layout.column_spacing = sp;
            c.scenario.receiver.distance = sweeps::kDistances[k];
            grid[k].push_back(estimate_mean(power_samples(c, c.time.start, 0, threads)));
        }
    for (std::size_t k = 0; k < sweeps::kDistances.size(); ++k)
    {
        std::vector<Cell> row{sweeps::kDistances[k]};
        for (const auto &m : grid[k])
        {
            row.emplace_back(m.mean);
            row.emplace_back(m.std_error);
        }
        t.add_row(std::move(row));
    }
    return {t};
}

// Mean received power on the time grid, one trace per FoV.
inline std::vector<MeanEstimate> power_trace(const SimulationConfig &c, unsigned threads)
{
    const int n = c.time.samples();
    const auto runs = map_ensemble<std::vector<double>>(make_ensemble(c), threads, [&](const Scene &s) {
        std::vector<double> p;
        for (int k = 0; k < n; ++k)
            p.push_back(total_received_power(positions_at(s, c.time.at(k)), 0));
        return p;
    });
    std::vector<MeanEstimate> out;
    for (int k = 0; k < n; ++k)
    {
        std::vector<double> v;
        for (const auto &r : runs)
            v.push_back(r[static_cast<std::size_t>(k)]);
        out.push_back(estimate_mean(v));
    }
    return out;
}

inline std::vector<ResultTable> run_power_rotation_fov(const SimulationConfig &base, unsigned threads)
{
    ResultTable t("power", {{"fov", "deg"}, {"time", "s"}, {"power", "W"}, {"std_error", "W"}});
    for (double fov : sweeps::kRotationFovs)
    {
        SimulationConfig c = base;
        c.scenario.receiver.optics.fov = deg_to_rad(fov);
        const auto trace = power_trace(c, threads);
        for (std::size_t k = 0; k < trace.size(); ++k)
            t.add_row({fov, c.time.at(static_cast<int>(k)), trace[k].mean, trace[k].std_error});
    }
    return {t};
}

inline std::vector<ResultTable> run_rms_patterns(const SimulationConfig &base, unsigned threads)
{
    std::vector<std::string> labels;
    std::vector<std::vector<double>> samples;
    for (const auto &c : pattern_variants(base))
    {
        labels.push_back(pattern_label(c.pattern));
        samples.push_back(rms_samples(c, LinkId{0, 0, 0}, false, threads));
    }
    return cdf_tables("pattern", "rms_delay_spread", "s", labels, samples);
}

inline std::vector<ResultTable> run_rms_adr(const SimulationConfig &c, unsigned threads)
{
    std::vector<std::string> labels;
    std::vector<std::vector<double>> samples;
    for (int p = 0; p < c.scenario.receiver.attitude.num_pd; ++p)
    {
        labels.push_back("pd" + std::to_string(p + 1));
        samples.push_back(rms_samples(c, LinkId{0, 0, p}, true, threads));
    }
    return cdf_tables("pd", "rms_delay_spread", "s", labels, samples);
}

inline std::vector<ResultTable> run_pl_ci(const SimulationConfig &base, unsigned threads)
{
    ResultTable samples("samples", {{"spacing", "m"}, {"distance", "m"}, {"realization", ""}, {"pl_total", "dB"}, {"pl_l11", "dB"}});
    ResultTable fits("fit", {{"spacing", "m"}, {"reference_distance", "m"}, {"pl_reference", "dB"}, {"exponent", ""}});
    std::vector<PathLossRun> l11_runs;
    for (double sp : sweeps::kSpacings)
    {
        SimulationConfig c = base;
        c.scenario.array.layout.row_spacing = c.scenario.array.layout.column_spacing = sp;
        const auto runs = path_loss_runs(c, sweeps::kDistances, true, threads);
        for (const auto &r : runs)
            samples.add_row({sp, r.distance, count_cell(static_cast<std::size_t>(r.realization)), r.pl_total, r.pl_l11});
        const auto fit = fit_runs(runs, c.ci_reference_distance, false);
        fits.add_row({sp, fit.reference_distance, fit.pl_reference, fit.exponent});
        if (sp == sweeps::kSpacings.front())
            l11_runs = runs;
    }

    // Shadowing of the L11 sub-channel about its own close-in fit.
    const auto fit = fit_runs(l11_runs, base.ci_reference_distance, true);
    const auto sh = shadowing_stats(fit);
    ResultTable cdf("shadowing", {{"deviation", "dB"}, {"cdf", ""}, {"gaussian_cdf", ""}});
    for (std::size_t k = 0; k < sh.sorted.size(); ++k)
        cdf.add_row({sh.sorted[k], sh.ecdf[k], normal_cdf(sh.sorted[k], sh.mean, sh.std_dev)});
    ResultTable ks("ks", {{"pl_reference", "dB"}, {"exponent", ""}, {"mean", "dB"}, {"std_dev", "dB"}, {"samples", ""},
                          {"ks_distance", ""}, {"ks_critical_5pct", ""}, {"gaussian", ""}});
    ks.add_row({fit.pl_reference, fit.exponent, sh.mean, sh.std_dev, count_cell(sh.sorted.size()), sh.ks_distance, sh.ks_critical,
                std::string(sh.gaussian ? "pass" : "fail")});
    return {samples, fits, cdf, ks};
}

inline std::vector<ResultTable> run_bandwidth_fov(const SimulationConfig &base, unsigned threads)
{
    ResultTable t("samples", {{"fov", "deg"}, {"realization", ""}, {"f3db", "Hz"}});
    ResultTable summary("summary", {{"fov", "deg"}, {"samples", ""}, {"median_f3db", "Hz"}, {"finite_fraction", ""}});
    for (double fov : sweeps::kBandwidthFovs)
    {
        SimulationConfig c = base;
        c.scenario.receiver.optics.fov = deg_to_rad(fov);
        const auto f = bandwidth_samples(c, threads);
        std::vector<double> valid;
        std::size_t finite = 0;
        for (std::size_t k = 0; k < f.size(); ++k)
        {
            t.add_row({fov, count_cell(k), f[k]});
            if (!std::isnan(f[k]))
            {
                valid.push_back(f[k]);
                finite += std::isfinite(f[k]) ? 1 : 0;
            }
        }
        summary.add_row({fov, count_cell(valid.size()), quantile(valid, 0.5),
                         valid.empty() ? 0.0 : static_cast<double>(finite) / static_cast<double>(valid.size())});
    }
    return {t, summary};
}

inline std::vector<ResultTable> run_experiment(const SimulationConfig &config, std::string_view name, unsigned threads = 0)
{
    require_experiment(name);
    if (name == "acf-time")
        return run_acf_time(config, threads);
    if (name == "ccf-space")
        return run_ccf_space(config, threads);
    if (name == "fcf-color")
        return run_fcf_color(config, threads);
    if (name == "power-vs-distance")
        return run_power_vs_distance(config, threads);
    if (name == "power-rotation-fov")
        return run_power_rotation_fov(config, threads);
    if (name == "rms-patterns")
        return run_rms_patterns(config, threads);
    if (name == "rms-adr")
        return run_rms_adr(config, threads);
    if (name == "pl-ci")
        return run_pl_ci(config, threads);
    return run_bandwidth_fov(config, threads);
}

} // namespace vlcsim
