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

// LED radiation patterns, receiver optical gains, diffuse reflection and the
// spectrum-weighted effective reflectance of a material.

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vlcsim/error.hpp"
#include "vlcsim/geometry.hpp"

namespace vlcsim {

namespace detail {

inline std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

inline std::vector<std::string> split_csv_line(const std::string &line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true)
    {
        const auto comma = line.find(',', start);
        fields.push_back(trim(std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return fields;
}

inline std::optional<double> parse_double(const std::string &s)
{
    double v = 0.0;
    const auto *end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v))
        return std::nullopt;
    return v;
}

// Reads a CSV with the given header; returns numeric rows. Blank lines and '#' lines are skipped.
inline std::vector<std::vector<double>> read_numeric_csv(std::istream &in, const std::vector<std::string> &header)
{
    std::string line;
    int line_no = 0;
    bool have_header = false;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line))
    {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        const auto fields = split_csv_line(t);
        if (!have_header)
        {
            if (fields != header)
            {
                std::string expected;
                for (const auto &h : header)
                    expected += (expected.empty() ? "" : ",") + h;
                throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected header '" + expected + "'");
            }
            have_header = true;
            continue;
        }
        if (fields.size() != header.size())
            throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) + " columns");
        std::vector<double> row;
        for (std::size_t c = 0; c < fields.size(); ++c)
        {
            const auto v = parse_double(fields[c]);
            if (!v)
                throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ", field '" + header[c] + "': not a number");
            row.push_back(*v);
        }
        rows.push_back(std::move(row));
    }
    if (!have_header)
        throw Error(Errc::ParseError, "missing header row");
    return rows;
}

} // namespace detail

// ---------- LED radiation patterns ----------

// Lambertian lobe written in the element LCS: (a+1)/(2 pi) cos^a(el) cos^a(az) for the
// forward hemisphere (|az| <= pi/2), 0 behind the element.
inline double lambertian_intensity(double order, double elevation, double azimuth)
{
    if (order < 0.0)
        throw Error(Errc::NegativeOrder, "Lambertian order must be non-negative");
    const double az = wrap_pi(azimuth);
    if (std::abs(elevation) > kHalfPi || std::abs(az) > kHalfPi)
        return 0.0;
    const double c = std::cos(elevation) * std::cos(az);
    if (c <= 0.0)
        return order == 0.0 && c == 0.0 ? (order + 1.0) / kTwoPi : 0.0;
    return (order + 1.0) / kTwoPi * std::pow(c, order);
}

// Rectangular (elevation x azimuth) grid of intensities in degrees, row-major by elevation.
struct PatternGrid
{
    std::vector<double> elevations_deg;
    std::vector<double> azimuths_deg;
    std::vector<double> values;

    double at(std::size_t e, std::size_t a) const { return values[e * azimuths_deg.size() + a]; }

    void validate() const
    {
        const auto increasing = [](const std::vector<double> &v) {
            return std::adjacent_find(v.begin(), v.end(), [](double a, double b) { return b <= a; }) == v.end();
        };
        if (elevations_deg.size() < 2 || azimuths_deg.size() < 2)
            throw Error(Errc::InvalidArgument, "pattern grid needs at least 2x2 samples");
        if (!increasing(elevations_deg) || !increasing(azimuths_deg))
            throw Error(Errc::InvalidArgument, "pattern grid axes must be strictly increasing");
        if (values.size() != elevations_deg.size() * azimuths_deg.size())
            throw Error(Errc::InvalidArgument, "pattern grid is not rectangular");
        if (elevations_deg.front() < -90.0 || elevations_deg.back() > 90.0)
            throw Error(Errc::InvalidArgument, "pattern elevations must lie in [-90, 90] degrees");
        if (azimuths_deg.front() < -180.0 || azimuths_deg.back() > 180.0)
            throw Error(Errc::InvalidArgument, "pattern azimuths must lie in [-180, 180] degrees");
        for (double v : values)
            if (!(v >= 0.0) || !std::isfinite(v))
                throw Error(Errc::InvalidArgument, "pattern intensities must be finite and non-negative");
    }

    // Trapezoidal integral of value * cos(el) over the grid (radians).
    double hemispherical_integral() const
    {
        double total = 0.0;
        const std::size_t ne = elevations_deg.size(), na = azimuths_deg.size();
        for (std::size_t e = 0; e + 1 < ne; ++e)
        {
            const double de = deg_to_rad(elevations_deg[e + 1] - elevations_deg[e]);
            const double c0 = std::cos(deg_to_rad(elevations_deg[e]));
            const double c1 = std::cos(deg_to_rad(elevations_deg[e + 1]));
            for (std::size_t a = 0; a + 1 < na; ++a)
            {
                const double da = deg_to_rad(azimuths_deg[a + 1] - azimuths_deg[a]);
                const double cell = c0 * (at(e, a) + at(e, a + 1)) + c1 * (at(e + 1, a) + at(e + 1, a + 1));
                total += 0.25 * cell * de * da;
            }
        }
        return total;
    }
};

class RadiationPattern
{
public:
    RadiationPattern() : RadiationPattern(lambertian(1.0)) {}

    static RadiationPattern lambertian(double order)
    {
        if (order < 0.0)
            throw Error(Errc::NegativeOrder, "Lambertian order must be non-negative");
        RadiationPattern p(Tag{});
        p.order_ = order;
        return p;
    }

    // Wraps an already normalized grid.
    static RadiationPattern tabulated(PatternGrid grid)
    {
        grid.validate();
        RadiationPattern p(Tag{});
        p.table_ = std::make_shared<const PatternGrid>(std::move(grid));
        return p;
    }

    bool is_lambertian() const { return table_ == nullptr; }
    double order() const { return order_; }
    const PatternGrid *grid() const { return table_.get(); }

    // Radiant intensity (W/sr, for 1 W total) toward LCS angles.
    double intensity(double elevation, double azimuth) const
    {
        if (!table_)
            return lambertian_intensity(order_, elevation, azimuth);
        return interpolate(rad_to_deg(elevation), rad_to_deg(wrap_pi(azimuth)));
    }

    // Intensity toward an LCS vector of the given length (x' is the element normal).
    double intensity(const Vector3 &v_lcs, double length) const
    {
        if (!table_)
        {
            if (v_lcs.x <= 0.0)
                return order_ == 0.0 && v_lcs.x == 0.0 ? 1.0 / kTwoPi : 0.0;
            const double c = v_lcs.x / length; // cos(el) cos(az)
            return (order_ + 1.0) / kTwoPi * (order_ == 1.0 ? c : std::pow(c, order_));
        }
        const double el = std::atan2(v_lcs.z, std::hypot(v_lcs.x, v_lcs.y));
        const double az = std::atan2(v_lcs.y, v_lcs.x);
        return interpolate(rad_to_deg(el), rad_to_deg(az));
    }

    bool operator==(const RadiationPattern &o) const
    {
        if (is_lambertian() != o.is_lambertian())
            return false;
        if (is_lambertian())
            return order_ == o.order_;
        return table_->elevations_deg == o.table_->elevations_deg && table_->azimuths_deg == o.table_->azimuths_deg &&
               table_->values == o.table_->values;
    }

private:
    struct Tag {};
    explicit RadiationPattern(Tag) {}

    // Bilinear in (elevation, azimuth); zero outside the grid.
    double interpolate(double el_deg, double az_deg) const
    {
        const auto &g = *table_;
        const auto bracket = [](const std::vector<double> &axis, double v, std::size_t &i, double &w) {
            if (v < axis.front() || v > axis.back())
                return false;
            auto it = std::upper_bound(axis.begin(), axis.end(), v);
            i = it == axis.end() ? axis.size() - 2 : static_cast<std::size_t>(it - axis.begin()) - 1;
            i = std::min(i, axis.size() - 2);
            w = (v - axis[i]) / (axis[i + 1] - axis[i]);
            return true;
        };
        std::size_t ie = 0, ia = 0;
        double we = 0.0, wa = 0.0;
        if (!bracket(g.elevations_deg, el_deg, ie, we) || !bracket(g.azimuths_deg, az_deg, ia, wa))
            return 0.0;
        const double v00 = g.at(ie, ia), v01 = g.at(ie, ia + 1);
        const double v10 = g.at(ie + 1, ia), v11 = g.at(ie + 1, ia + 1);
        return (1.0 - we) * ((1.0 - wa) * v00 + wa * v01) + we * ((1.0 - wa) * v10 + wa * v11);
    }

    double order_ = 1.0;
    std::shared_ptr<const PatternGrid> table_;
};

// Total radiated power of a pattern: midpoint quadrature of F cos(el) over the sphere.
inline double radiated_power(const RadiationPattern &pattern, int elevation_cells = 720)
{
    const int ne = elevation_cells, na = 2 * elevation_cells;
    const double de = kPi / ne, da = kTwoPi / na;
    double total = 0.0;
    for (int e = 0; e < ne; ++e)
    {
        const double el = -kHalfPi + (e + 0.5) * de;
        double row = 0.0;
        for (int a = 0; a < na; ++a)
            row += pattern.intensity(el, -kPi + (a + 0.5) * da);
        total += row * std::cos(el);
    }
    return total * de * da;
}

// Luminous intensity grid (lm/sr) -> normalized radiation pattern (W/sr for 1 W).
inline RadiationPattern pattern_from_luminous(PatternGrid luminous, double luminous_efficacy)
{
    if (!(luminous_efficacy > 0.0))
        throw Error(Errc::InvalidArgument, "luminous efficacy of radiation must be positive");
    luminous.validate();
    for (double &v : luminous.values)
        v /= luminous_efficacy;
    const double total = luminous.hemispherical_integral();
    if (!(total > 0.0))
        throw Error(Errc::EmptyPattern, "luminous intensity grid carries no power");
    for (double &v : luminous.values)
        v /= total;
    return RadiationPattern::tabulated(std::move(luminous));
}

// CSV with header elevation_deg,azimuth_deg,intensity covering a rectangular grid.
inline PatternGrid read_pattern_csv(std::istream &in)
{
    const auto rows = detail::read_numeric_csv(in, {"elevation_deg", "azimuth_deg", "intensity"});
    PatternGrid g;
    for (const auto &r : rows)
    {
        g.elevations_deg.push_back(r[0]);
        g.azimuths_deg.push_back(r[1]);
    }
    const auto unique_sorted = [](std::vector<double> &v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    unique_sorted(g.elevations_deg);
    unique_sorted(g.azimuths_deg);
    const std::size_t na = g.azimuths_deg.size();
    if (rows.size() != g.elevations_deg.size() * na)
        throw Error(Errc::ParseError, "pattern CSV does not form a rectangular grid");
    g.values.assign(rows.size(), -1.0);
    for (const auto &r : rows)
    {
        const auto e = std::lower_bound(g.elevations_deg.begin(), g.elevations_deg.end(), r[0]) - g.elevations_deg.begin();
        const auto a = std::lower_bound(g.azimuths_deg.begin(), g.azimuths_deg.end(), r[1]) - g.azimuths_deg.begin();
        double &slot = g.values[static_cast<std::size_t>(e) * na + static_cast<std::size_t>(a)];
        if (slot >= 0.0)
            throw Error(Errc::ParseError, "duplicate grid point in pattern CSV");
        slot = r[2];
    }
    g.validate();
    return g;
}

// Luminous grid of a rotationally symmetric Gaussian beam: I = exp(-ln2 (theta/half)^2),
// theta being the angle off the element normal. Sampled on a 1 degree forward grid.
inline PatternGrid gaussian_beam_grid(double half_power_angle_deg, double step_deg = 1.0)
{
    if (!(half_power_angle_deg > 0.0) || !(step_deg > 0.0))
        throw Error(Errc::InvalidArgument, "beam half angle and step must be positive");
    PatternGrid g;
    const int n = static_cast<int>(std::lround(180.0 / step_deg));
    for (int k = 0; k <= n; ++k)
    {
        g.elevations_deg.push_back(-90.0 + k * step_deg);
        g.azimuths_deg.push_back(-90.0 + k * step_deg);
    }
    for (double el : g.elevations_deg)
        for (double az : g.azimuths_deg)
        {
            const double theta = rad_to_deg(std::acos(clamp_unit(std::cos(deg_to_rad(el)) * std::cos(deg_to_rad(az)))));
            const double r = theta / half_power_angle_deg;
            g.values.push_back(std::exp(-std::log(2.0) * r * r));
        }
    return g;
}

// ---------- Receiver optics ----------

enum class Concentrator {
    None,      // no lens: G = 1 inside the FoV
    Ideal,     // non-imaging concentrator, G = n^2 / sin^2(FoV)
    AsPrinted, // G = n^2 / sin^2(psi), psi clamped at 1 degree
};

struct RxOptics
{
    double refractive_index = 1.5;
    double fov = deg_to_rad(85.0);
    Concentrator concentrator = Concentrator::None;
    // Optical filter gain T(psi) as (angle rad, gain) samples; empty means T = 1.
    std::vector<std::pair<double, double>> filter;

    bool operator==(const RxOptics &) const = default;

    void validate() const
    {
        if (!(fov > 0.0 && fov <= kHalfPi + 1e-12))
            throw Error(Errc::OutOfRange, "field of view must lie in (0, pi/2]");
        if (!(refractive_index >= 1.0))
            throw Error(Errc::OutOfRange, "refractive index must be >= 1");
        for (std::size_t k = 0; k < filter.size(); ++k)
        {
            if (filter[k].second < 0.0 || (k > 0 && filter[k].first <= filter[k - 1].first))
                throw Error(Errc::InvalidArgument, "filter samples need increasing angles and non-negative gains");
        }
    }
};

inline int visibility(const RxOptics &optics, double psi)
{
    return psi >= 0.0 && psi <= optics.fov ? 1 : 0;
}

inline double concentrator_gain(const RxOptics &optics, double psi)
{
    if (!visibility(optics, psi))
        return 0.0;
    const double n2 = optics.refractive_index * optics.refractive_index;
    switch (optics.concentrator)
    {
    case Concentrator::None:
        return 1.0;
    case Concentrator::Ideal: {
        const double s = std::sin(optics.fov);
        return n2 / (s * s);
    }
    case Concentrator::AsPrinted: {
        const double s = std::sin(std::max(psi, deg_to_rad(1.0)));
        return n2 / (s * s);
    }
    }
    return 1.0;
}

inline double filter_gain(const RxOptics &optics, double psi)
{
    const auto &f = optics.filter;
    if (f.empty())
        return 1.0;
    if (psi <= f.front().first)
        return f.front().second;
    if (psi >= f.back().first)
        return f.back().second;
    auto it = std::upper_bound(f.begin(), f.end(), psi, [](double v, const auto &s) { return v < s.first; });
    const auto &hi = *it;
    const auto &lo = *(it - 1);
    const double w = (psi - lo.first) / (hi.first - lo.first);
    return lo.second + w * (hi.second - lo.second);
}

// G(psi) T(psi) V(psi) for an incidence angle psi.
inline double receiver_gain(const RxOptics &optics, double psi)
{
    if (!visibility(optics, psi))
        return 0.0;
    return concentrator_gain(optics, psi) * filter_gain(optics, psi);
}

// Diffuse (Lambertian) reflection lobe cos(psi)/pi, 1/sr.
inline double diffuse_reflection(double psi)
{
    constexpr double slack = 1e-12;
    if (!(psi >= -slack && psi <= kHalfPi + slack))
        throw Error(Errc::OutOfRange, "reflection angle outside [0, pi/2]");
    return std::max(0.0, std::cos(psi)) / kPi;
}

// ---------- Spectra ----------

enum class SpectralRole { Psd, Reflectance };

class SpectralCurve
{
public:
    SpectralCurve() = default;

    SpectralCurve(std::vector<double> wavelengths_nm, std::vector<double> values, SpectralRole role)
        : wl_(std::move(wavelengths_nm)), val_(std::move(values)), role_(role)
    {
        if (wl_.empty() || wl_.size() != val_.size())
            throw Error(Errc::InvalidArgument, "spectral curve needs matching, non-empty sample vectors");
        for (std::size_t k = 0; k < wl_.size(); ++k)
        {
            if (!std::isfinite(wl_[k]) || !std::isfinite(val_[k]))
                throw Error(Errc::InvalidArgument, "spectral samples must be finite");
            if (k > 0 && wl_[k] <= wl_[k - 1])
                throw Error(Errc::InvalidArgument, "wavelengths must be strictly increasing");
            if (val_[k] < 0.0 || (role_ == SpectralRole::Reflectance && val_[k] > 1.0))
                throw Error(Errc::OutOfRange, "spectral value out of range");
        }
    }

    SpectralRole role() const { return role_; }
    const std::vector<double> &wavelengths() const { return wl_; }
    const std::vector<double> &values() const { return val_; }
    double min_wavelength() const { return wl_.front(); }
    double max_wavelength() const { return wl_.back(); }
    bool monochromatic() const { return wl_.size() == 1; }

    bool covers(double lo, double hi) const
    {
        constexpr double slack = 1e-9;
        return wl_.front() <= lo + slack && wl_.back() >= hi - slack;
    }

    // Linear interpolation; the argument must lie inside the sampled range.
    double at(double wavelength) const
    {
        if (wl_.size() == 1 || wavelength <= wl_.front())
            return val_.front();
        if (wavelength >= wl_.back())
            return val_.back();
        const auto it = std::upper_bound(wl_.begin(), wl_.end(), wavelength);
        const std::size_t i = static_cast<std::size_t>(it - wl_.begin()) - 1;
        const double w = (wavelength - wl_[i]) / (wl_[i + 1] - wl_[i]);
        return val_[i] + w * (val_[i + 1] - val_[i]);
    }

    // Trapezoidal integral over the sampled range; a single sample counts as a unit line.
    double integral() const
    {
        if (monochromatic())
            return 1.0;
        double s = 0.0;
        for (std::size_t k = 0; k + 1 < wl_.size(); ++k)
            s += 0.5 * (val_[k] + val_[k + 1]) * (wl_[k + 1] - wl_[k]);
        return s;
    }

    SpectralCurve normalized() const
    {
        if (monochromatic())
            return SpectralCurve(wl_, {1.0}, role_);
        const double s = integral();
        if (!(s > 0.0))
            throw Error(Errc::NotNormalized, "spectral curve integrates to zero");
        std::vector<double> v(val_);
        for (double &x : v)
            x /= s;
        return SpectralCurve(wl_, std::move(v), role_);
    }

    bool operator==(const SpectralCurve &) const = default;

private:
    std::vector<double> wl_;
    std::vector<double> val_;
    SpectralRole role_ = SpectralRole::Psd;
};

inline constexpr double kPsdNormalizationTolerance = 1e-6;

// Gamma = integral of psd(l) * rho(l) over the psd support, composite trapezoid on the
// union of both sample grids. A single-sample psd is a spectral line: Gamma = rho(l0).
inline double effective_reflectance(const SpectralCurve &psd, const SpectralCurve &reflectance)
{
    const double lo = psd.min_wavelength(), hi = psd.max_wavelength();
    if (!reflectance.covers(lo, hi))
        throw Error(Errc::DomainMismatch, "reflectance does not cover the source spectrum");
    if (psd.monochromatic())
        return std::clamp(reflectance.at(lo), 0.0, 1.0);
    if (std::abs(psd.integral() - 1.0) > kPsdNormalizationTolerance)
        throw Error(Errc::NotNormalized, "source psd does not integrate to 1");

    std::vector<double> grid(psd.wavelengths());
    for (double w : reflectance.wavelengths())
        if (w > lo && w < hi)
            grid.push_back(w);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    double gamma = 0.0;
    double prev = psd.at(grid.front()) * reflectance.at(grid.front());
    for (std::size_t k = 1; k < grid.size(); ++k)
    {
        const double cur = psd.at(grid[k]) * reflectance.at(grid[k]);
        gamma += 0.5 * (prev + cur) * (grid[k] - grid[k - 1]);
        prev = cur;
    }
    return std::clamp(gamma, 0.0, 1.0);
}

// CSV with header wavelength_nm,value.
inline SpectralCurve read_spectral_csv(std::istream &in, SpectralRole role)
{
    const auto rows = detail::read_numeric_csv(in, {"wavelength_nm", "value"});
    std::vector<double> wl, v;
    for (const auto &r : rows)
    {
        wl.push_back(r[0]);
        v.push_back(r[1]);
    }
    if (wl.empty())
        throw Error(Errc::ParseError, "spectral CSV has no samples");
    return SpectralCurve(std::move(wl), std::move(v), role);
}

} // namespace vlcsim
