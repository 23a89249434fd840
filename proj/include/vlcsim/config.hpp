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

// JSON simulation config. Angles are in degrees at this interface; every omitted field
// takes its default and unknown keys are rejected.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vlcsim/error.hpp"
#include "vlcsim/scene.hpp"
#include "vlcsim/spectra.hpp"
#include "vlcsim/statistics.hpp"

namespace vlcsim {

using Json = nlohmann::json;

struct TimeGrid
{
    double start = 0.0; // s
    double end = 2.0;   // s
    double step = 0.01; // s

    bool operator==(const TimeGrid &) const = default;

    int samples() const { return static_cast<int>(std::floor((end - start) / step + 1e-9)) + 1; }
    double at(int k) const { return start + k * step; }

    void validate() const
    {
        if (!(start >= 0.0) || !(end >= start) || !(step > 0.0))
            throw Error(Errc::ValidationError, "time grid needs 0 <= start <= end and step > 0");
    }
};

// Where the radiation pattern comes from; resolved into a RadiationPattern on load.
struct PatternSpec
{
    std::string type = "lambertian"; // lambertian | builtin | tabulated
    double order = 1.0;
    std::string name;                // builtin name
    std::string file;                // tabulated CSV
    double luminous_efficacy = 300.0;

    bool operator==(const PatternSpec &) const = default;
};

struct LedSpectrumSpec
{
    std::string name = "white";      // bundled LED; ignored when file or wavelength is set
    std::string file;                // CSV psd
    std::optional<double> wavelength_nm; // spectral line

    bool operator==(const LedSpectrumSpec &) const = default;
};

struct MaterialSpec
{
    std::string name;
    double weight = 1.0;
    std::string file; // reflectance CSV; empty means the bundled table `name`

    bool operator==(const MaterialSpec &) const = default;
};

struct SimulationConfig
{
    ScenarioParams scenario;
    PatternSpec pattern;
    LedSpectrumSpec led;
    std::vector<MaterialSpec> materials{{"floor", 0.3, ""}, {"pine_wood", 0.2, ""}, {"plaster", 0.4, ""}, {"plate_glass", 0.1, ""}};
    TimeGrid time;
    FrequencyGrid frequency;
    int ensemble_size = 500;
    std::uint64_t seed = 1;
    double anchor_frequency = 0.0;       // Hz
    int fcf_lag_points = 101;
    double ci_reference_distance = 1.0;  // m
    std::filesystem::path base_dir;      // relative data files resolve against this

    bool operator==(const SimulationConfig &o) const
    {
        return scenario == o.scenario && pattern == o.pattern && led == o.led && materials == o.materials && time == o.time &&
               frequency == o.frequency && ensemble_size == o.ensemble_size && seed == o.seed &&
               anchor_frequency == o.anchor_frequency && fcf_lag_points == o.fcf_lag_points &&
               ci_reference_distance == o.ci_reference_distance;
    }
};

namespace detail {

inline std::filesystem::path resolve(const std::filesystem::path &base, const std::string &file)
{
    std::filesystem::path p(file);
    return p.is_absolute() || base.empty() ? p : base / p;
}

inline std::ifstream open_data(const std::filesystem::path &p)
{
    std::ifstream in(p);
    if (!in)
        throw Error(Errc::IoError, "cannot open '" + p.string() + "'");
    return in;
}

// Reads typed fields out of one JSON object, remembering which keys were consumed.
class Section
{
public:
    Section(const Json &j, std::string path) : j_(j), path_(std::move(path))
    {
        if (!j_.is_object())
            throw Error(Errc::ParseError, "field '" + label() + "': expected an object");
    }

    template <typename T>
    void get(const char *key, T &out)
    {
        seen_.insert(key);
        auto it = j_.find(key);
        if (it == j_.end())
            return;
        try
        {
            out = it->template get<T>();
        }
        catch (const Json::exception &)
        {
            throw Error(Errc::ParseError, "field '" + field(key) + "': wrong type");
        }
    }

    void angle(const char *key, double &radians)
    {
        double deg = rad_to_deg(radians);
        get(key, deg);
        radians = deg_to_rad(deg);
    }

    bool has(const char *key) const { return j_.contains(key); }

    const Json *child(const char *key)
    {
        seen_.insert(key);
        auto it = j_.find(key);
        return it == j_.end() || it->is_null() ? nullptr : &*it;
    }

    std::string field(const char *key) const { return path_.empty() ? key : path_ + "." + key; }
    std::string label() const { return path_.empty() ? "<root>" : path_; }

    void finish() const
    {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!seen_.count(it.key()))
                throw Error(Errc::ValidationError, "unknown key '" + field(it.key().c_str()) + "'");
    }

private:
    const Json &j_;
    std::string path_;
    std::set<std::string> seen_;
};

inline const Json &empty_object()
{
    static const Json j = Json::object();
    return j;
}

} // namespace detail

// Rebuilds the pattern, spectra and materials of the scenario from their specs.
inline void resolve_resources(SimulationConfig &c)
{
    auto &s = c.scenario;
    const auto &ps = c.pattern;
    if (ps.type == "lambertian")
        s.array.pattern = RadiationPattern::lambertian(ps.order);
    else if (ps.type == "builtin")
        s.array.pattern = bundled_pattern(ps.name);
    else if (ps.type == "tabulated")
    {
        auto in = detail::open_data(detail::resolve(c.base_dir, ps.file));
        s.array.pattern = pattern_from_luminous(read_pattern_csv(in), ps.luminous_efficacy);
    }
    else
        throw Error(Errc::ValidationError, "array.pattern.type must be lambertian, builtin or tabulated");

    if (c.led.wavelength_nm)
    {
        s.spectra.led = "line";
        s.spectra.psd = monochromatic_psd(*c.led.wavelength_nm);
    }
    else if (!c.led.file.empty())
    {
        auto in = detail::open_data(detail::resolve(c.base_dir, c.led.file));
        s.spectra.led = c.led.file;
        s.spectra.psd = read_spectral_csv(in, SpectralRole::Psd).normalized();
    }
    else
    {
        s.spectra.led = c.led.name;
        s.spectra.psd = bundled_led_psd(c.led.name);
    }

    s.spectra.materials.clear();
    for (const auto &m : c.materials)
    {
        SpectralCurve refl;
        if (m.file.empty())
            refl = bundled_reflectance(m.name);
        else
        {
            auto in = detail::open_data(detail::resolve(c.base_dir, m.file));
            refl = read_spectral_csv(in, SpectralRole::Reflectance);
        }
        s.spectra.materials.push_back({m.name, std::move(refl), m.weight});
    }
}

inline void validate_config(const SimulationConfig &c)
{
    try
    {
        c.scenario.validate();
        c.time.validate();
        c.frequency.validate();
        material_reflectances(c.scenario.spectra);
    }
    catch (const Error &e)
    {
        if (e.code() == Errc::ValidationError)
            throw;
        throw Error(Errc::ValidationError, e.what());
    }
    if (c.ensemble_size < 1)
        throw Error(Errc::ValidationError, "ensemble.size must be >= 1");
    if (c.fcf_lag_points < 2)
        throw Error(Errc::ValidationError, "statistics.fcf_lag_points must be >= 2");
    if (!(c.ci_reference_distance > 0.0))
        throw Error(Errc::ValidationError, "statistics.ci_reference_distance_m must be positive");
    if (!(c.anchor_frequency >= 0.0))
        throw Error(Errc::ValidationError, "statistics.anchor_frequency_hz must be non-negative");
}

inline Json config_to_json(const SimulationConfig &c)
{
    const auto &s = c.scenario;
    const auto &a = s.array.layout;
    const auto &rx = s.receiver;
    const auto &cl = s.clusters;
    Json j;

    Json pattern = {{"type", c.pattern.type}};
    if (c.pattern.type == "lambertian")
        pattern["order"] = c.pattern.order;
    else if (c.pattern.type == "builtin")
        pattern["name"] = c.pattern.name;
    else
    {
        pattern["file"] = c.pattern.file;
        pattern["luminous_efficacy_lm_per_w"] = c.pattern.luminous_efficacy;
    }
    j["array"] = {{"rows", a.rows},
                  {"cols", a.cols},
                  {"row_spacing_m", a.row_spacing},
                  {"column_spacing_m", a.column_spacing},
                  {"row_azimuth_deg", rad_to_deg(a.orientation.row_azimuth)},
                  {"row_elevation_deg", rad_to_deg(a.orientation.row_elevation)},
                  {"column_azimuth_deg", rad_to_deg(a.orientation.column_azimuth)},
                  {"column_elevation_deg", rad_to_deg(a.orientation.column_elevation)},
                  {"tx_power_w", s.array.tx_power},
                  {"element_powers_w", s.array.element_powers},
                  {"pattern", pattern}};

    const char *conc = rx.optics.concentrator == Concentrator::None    ? "none"
                       : rx.optics.concentrator == Concentrator::Ideal ? "ideal"
                                                                       : "as-printed";
    Json filter = Json::array();
    for (const auto &[ang, gain] : rx.optics.filter)
        filter.push_back({rad_to_deg(ang), gain});
    j["receiver"] = {{"distance_m", rx.distance},
                     {"num_pd", rx.attitude.num_pd},
                     {"pd_inclination_deg", rad_to_deg(rx.attitude.pd_inclination)},
                     {"azimuth_deg", rad_to_deg(rx.attitude.azimuth)},
                     {"elevation_deg", rad_to_deg(rx.attitude.elevation)},
                     {"azimuth_rate_deg_per_s", rad_to_deg(rx.attitude.azimuth_rate)},
                     {"elevation_rate_deg_per_s", rad_to_deg(rx.attitude.elevation_rate)},
                     {"area_m2", rx.area},
                     {"fov_deg", rad_to_deg(rx.optics.fov)},
                     {"refractive_index", rx.optics.refractive_index},
                     {"concentrator", conc},
                     {"filter_deg_gain", filter},
                     {"speed_m_per_s", rx.speed},
                     {"travel_azimuth_deg", rad_to_deg(rx.travel_azimuth)},
                     {"travel_elevation_deg", rad_to_deg(rx.travel_elevation)}};

    j["evolution"] = {{"birth_rate_per_m", s.evolution.birth_rate},
                      {"death_rate_per_m", s.evolution.death_rate},
                      {"correlation_factor_m", s.evolution.correlation_factor},
                      {"fixed_cluster_count", s.evolution.fixed_cluster_count}};

    j["clusters"] = {{"tx_mean_azimuth_deg", rad_to_deg(cl.tx_mean_azimuth)},
                     {"tx_mean_elevation_deg", rad_to_deg(cl.tx_mean_elevation)},
                     {"rx_mean_azimuth_deg", rad_to_deg(cl.rx_mean_azimuth)},
                     {"rx_mean_elevation_deg", rad_to_deg(cl.rx_mean_elevation)},
                     {"azimuth_std_deg", rad_to_deg(cl.azimuth_std)},
                     {"elevation_std_deg", rad_to_deg(cl.elevation_std)},
                     {"distance_mean_m", cl.distance_mean ? Json(*cl.distance_mean) : Json(nullptr)},
                     {"sigma_ds_m", cl.sigma_ds},
                     {"sigma_as_m", cl.sigma_as},
                     {"sigma_es_m", cl.sigma_es},
                     {"scatterers", cl.scatterers},
                     {"area_m2", cl.area},
                     {"sb_ratio", cl.sb_ratio},
                     {"speed_m_per_s", cl.speed},
                     {"travel_azimuth_deg", rad_to_deg(cl.travel_azimuth)},
                     {"travel_elevation_deg", rad_to_deg(cl.travel_elevation)}};

    Json led = {{"name", c.led.name}, {"file", c.led.file}};
    led["wavelength_nm"] = c.led.wavelength_nm ? Json(*c.led.wavelength_nm) : Json(nullptr);
    Json mats = Json::array();
    for (const auto &m : c.materials)
        mats.push_back({{"name", m.name}, {"weight", m.weight}, {"file", m.file}});
    j["spectra"] = {{"led", led}, {"materials", mats}};

    j["time"] = {{"start_s", c.time.start}, {"end_s", c.time.end}, {"step_s", c.time.step}};
    j["frequency"] = {{"start_hz", c.frequency.start}, {"stop_hz", c.frequency.stop}, {"points", c.frequency.points}};
    j["ensemble"] = {{"size", c.ensemble_size}, {"seed", c.seed}};
    j["statistics"] = {{"anchor_frequency_hz", c.anchor_frequency},
                       {"fcf_lag_points", c.fcf_lag_points},
                       {"ci_reference_distance_m", c.ci_reference_distance}};
    return j;
}

// Applies the fields present in j on top of `base`.
inline SimulationConfig config_from_json(const Json &j, SimulationConfig base = {})
{
    SimulationConfig c = std::move(base);
    auto &s = c.scenario;
    detail::Section root(j, "");

    if (const Json *aj = root.child("array"))
    {
        detail::Section a(*aj, "array");
        auto &l = s.array.layout;
        a.get("rows", l.rows);
        a.get("cols", l.cols);
        a.get("row_spacing_m", l.row_spacing);
        a.get("column_spacing_m", l.column_spacing);
        a.angle("row_azimuth_deg", l.orientation.row_azimuth);
        a.angle("row_elevation_deg", l.orientation.row_elevation);
        a.angle("column_azimuth_deg", l.orientation.column_azimuth);
        a.angle("column_elevation_deg", l.orientation.column_elevation);
        a.get("tx_power_w", s.array.tx_power);
        a.get("element_powers_w", s.array.element_powers);
        if (const Json *pj = a.child("pattern"))
        {
            detail::Section p(*pj, "array.pattern");
            PatternSpec spec;
            p.get("type", spec.type);
            p.get("order", spec.order);
            p.get("name", spec.name);
            p.get("file", spec.file);
            p.get("luminous_efficacy_lm_per_w", spec.luminous_efficacy);
            p.finish();
            c.pattern = spec;
        }
        a.finish();
    }

    if (const Json *rj = root.child("receiver"))
    {
        detail::Section r(*rj, "receiver");
        auto &rx = s.receiver;
        r.get("distance_m", rx.distance);
        r.get("num_pd", rx.attitude.num_pd);
        r.angle("pd_inclination_deg", rx.attitude.pd_inclination);
        r.angle("azimuth_deg", rx.attitude.azimuth);
        r.angle("elevation_deg", rx.attitude.elevation);
        r.angle("azimuth_rate_deg_per_s", rx.attitude.azimuth_rate);
        r.angle("elevation_rate_deg_per_s", rx.attitude.elevation_rate);
        r.get("area_m2", rx.area);
        r.angle("fov_deg", rx.optics.fov);
        r.get("refractive_index", rx.optics.refractive_index);
        std::string conc;
        r.get("concentrator", conc);
        if (conc == "none")
            rx.optics.concentrator = Concentrator::None;
        else if (conc == "ideal")
            rx.optics.concentrator = Concentrator::Ideal;
        else if (conc == "as-printed")
            rx.optics.concentrator = Concentrator::AsPrinted;
        else if (!conc.empty())
            throw Error(Errc::ValidationError, "receiver.concentrator must be none, ideal or as-printed");
        if (r.has("filter_deg_gain"))
        {
            std::vector<std::pair<double, double>> filter;
            r.get("filter_deg_gain", filter);
            for (auto &f : filter)
                f.first = deg_to_rad(f.first);
            rx.optics.filter = filter;
        }
        r.get("speed_m_per_s", rx.speed);
        r.angle("travel_azimuth_deg", rx.travel_azimuth);
        r.angle("travel_elevation_deg", rx.travel_elevation);
        r.finish();
    }

    if (const Json *ej = root.child("evolution"))
    {
        detail::Section e(*ej, "evolution");
        e.get("birth_rate_per_m", s.evolution.birth_rate);
        e.get("death_rate_per_m", s.evolution.death_rate);
        e.get("correlation_factor_m", s.evolution.correlation_factor);
        e.get("fixed_cluster_count", s.evolution.fixed_cluster_count);
        e.finish();
    }

    if (const Json *cj = root.child("clusters"))
    {
        detail::Section k(*cj, "clusters");
        auto &cl = s.clusters;
        k.angle("tx_mean_azimuth_deg", cl.tx_mean_azimuth);
        k.angle("tx_mean_elevation_deg", cl.tx_mean_elevation);
        k.angle("rx_mean_azimuth_deg", cl.rx_mean_azimuth);
        k.angle("rx_mean_elevation_deg", cl.rx_mean_elevation);
        k.angle("azimuth_std_deg", cl.azimuth_std);
        k.angle("elevation_std_deg", cl.elevation_std);
        if (k.has("distance_mean_m"))
        {
            const Json *dm = k.child("distance_mean_m");
            if (dm == nullptr)
                cl.distance_mean.reset();
            else
            {
                double v = 0.0;
                k.get("distance_mean_m", v);
                cl.distance_mean = v;
            }
        }
        k.get("sigma_ds_m", cl.sigma_ds);
        k.get("sigma_as_m", cl.sigma_as);
        k.get("sigma_es_m", cl.sigma_es);
        k.get("scatterers", cl.scatterers);
        k.get("area_m2", cl.area);
        k.get("sb_ratio", cl.sb_ratio);
        k.get("speed_m_per_s", cl.speed);
        k.angle("travel_azimuth_deg", cl.travel_azimuth);
        k.angle("travel_elevation_deg", cl.travel_elevation);
        k.finish();
    }

    if (const Json *sj = root.child("spectra"))
    {
        detail::Section sp(*sj, "spectra");
        if (const Json *lj = sp.child("led"))
        {
            detail::Section l(*lj, "spectra.led");
            LedSpectrumSpec led;
            l.get("name", led.name);
            l.get("file", led.file);
            if (const Json *w = l.child("wavelength_nm"))
            {
                if (!w->is_number())
                    throw Error(Errc::ParseError, "field 'spectra.led.wavelength_nm': wrong type");
                led.wavelength_nm = w->get<double>();
            }
            l.finish();
            c.led = led;
        }
        if (const Json *mj = sp.child("materials"))
        {
            if (!mj->is_array())
                throw Error(Errc::ParseError, "field 'spectra.materials': expected an array");
            c.materials.clear();
            for (std::size_t k = 0; k < mj->size(); ++k)
            {
                detail::Section m((*mj)[k], "spectra.materials[" + std::to_string(k) + "]");
                MaterialSpec spec;
                m.get("name", spec.name);
                m.get("weight", spec.weight);
                m.get("file", spec.file);
                m.finish();
                c.materials.push_back(spec);
            }
        }
        sp.finish();
    }

    if (const Json *tj = root.child("time"))
    {
        detail::Section t(*tj, "time");
        t.get("start_s", c.time.start);
        t.get("end_s", c.time.end);
        t.get("step_s", c.time.step);
        t.finish();
    }
    if (const Json *fj = root.child("frequency"))
    {
        detail::Section f(*fj, "frequency");
        f.get("start_hz", c.frequency.start);
        f.get("stop_hz", c.frequency.stop);
        f.get("points", c.frequency.points);
        f.finish();
    }
    if (const Json *nj = root.child("ensemble"))
    {
        detail::Section n(*nj, "ensemble");
        n.get("size", c.ensemble_size);
        n.get("seed", c.seed);
        n.finish();
    }
    if (const Json *st = root.child("statistics"))
    {
        detail::Section x(*st, "statistics");
        x.get("anchor_frequency_hz", c.anchor_frequency);
        x.get("fcf_lag_points", c.fcf_lag_points);
        x.get("ci_reference_distance_m", c.ci_reference_distance);
        x.finish();
    }
    root.finish();

    try
    {
        resolve_resources(c);
    }
    catch (const Error &e)
    {
        if (e.code() == Errc::IoError || e.code() == Errc::ParseError || e.code() == Errc::ValidationError)
            throw;
        throw Error(Errc::ValidationError, e.what());
    }
    validate_config(c);
    return c;
}

inline std::size_t line_of_offset(const std::string &text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

inline SimulationConfig parse_config(const std::string &text, const std::filesystem::path &base_dir = {},
                                     SimulationConfig base = {})
{
    base.base_dir = base_dir;
    if (std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isspace(ch); }))
    {
        resolve_resources(base);
        validate_config(base);
        return base;
    }
    Json j;
    try
    {
        j = Json::parse(text);
    }
    catch (const Json::parse_error &e)
    {
        throw Error(Errc::ParseError, "line " + std::to_string(line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0)) + ": " + e.what());
    }
    return config_from_json(j, std::move(base));
}

inline SimulationConfig load_config(const std::filesystem::path &path, SimulationConfig base = {})
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::IoError, "cannot open config '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path.parent_path(), std::move(base));
}

inline void save_config(const SimulationConfig &c, const std::filesystem::path &path)
{
    std::ofstream out(path);
    if (!out)
        throw Error(Errc::IoError, "cannot write config '" + path.string() + "'");
    out << config_to_json(c).dump(2) << '\n';
    if (!out)
        throw Error(Errc::IoError, "failed writing config '" + path.string() + "'");
}

// 64-bit FNV-1a of the canonical (sorted-key, compact) JSON form.
inline std::uint64_t config_hash(const SimulationConfig &c)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : config_to_json(c).dump())
    {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace vlcsim
