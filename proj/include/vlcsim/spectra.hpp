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

// Bundled LED spectra, material reflectances and radiation patterns. The tables
// are synthetic stand-ins (see tools/gen_data.py), sampled at 1 nm over 380-780 nm.

#pragma once

#include <string>
#include <vector>

#include "vlcsim/optics.hpp"
#include "vlcsim/spectra_data.hpp"

namespace vlcsim {

namespace detail {

template <typename Tables>
SpectralCurve bundled_curve(const Tables &tables, std::string_view name, SpectralRole role, std::string_view what)
{
    for (const auto &t : tables)
    {
        if (t.name != name)
            continue;
        std::vector<double> wl(spectra_data::kSamples);
        for (std::size_t k = 0; k < wl.size(); ++k)
            wl[k] = spectra_data::kFirstWavelength + static_cast<double>(k);
        return SpectralCurve(std::move(wl), std::vector<double>(t.values.begin(), t.values.end()), role);
    }
    throw Error(Errc::InvalidArgument, "unknown bundled " + std::string(what) + " '" + std::string(name) + "'");
}

} // namespace detail

inline std::vector<std::string> bundled_led_names()
{
    std::vector<std::string> names;
    for (const auto &t : spectra_data::kLeds)
        names.emplace_back(t.name);
    return names;
}

inline std::vector<std::string> bundled_material_names()
{
    std::vector<std::string> names;
    for (const auto &t : spectra_data::kMaterials)
        names.emplace_back(t.name);
    return names;
}

// Normalized PSD of a bundled LED: white, red, green or blue.
inline SpectralCurve bundled_led_psd(std::string_view name)
{
    return detail::bundled_curve(spectra_data::kLeds, name, SpectralRole::Psd, "LED spectrum").normalized();
}

// Reflectance of a bundled material: floor, pine_wood, plaster or plate_glass.
inline SpectralCurve bundled_reflectance(std::string_view name)
{
    return detail::bundled_curve(spectra_data::kMaterials, name, SpectralRole::Reflectance, "material");
}

// Spectral line at one wavelength (lambda_1 = lambda_2).
inline SpectralCurve monochromatic_psd(double wavelength_nm)
{
    return SpectralCurve({wavelength_nm}, {1.0}, SpectralRole::Psd);
}

inline constexpr double kNarrowBeamHalfAngleDeg = 20.0;
inline constexpr double kNarrowBeamEfficacy = 300.0; // lm/W, cancels in normalization

inline RadiationPattern bundled_pattern(std::string_view name)
{
    if (name == "narrow-beam")
        return pattern_from_luminous(gaussian_beam_grid(kNarrowBeamHalfAngleDeg), kNarrowBeamEfficacy);
    throw Error(Errc::InvalidArgument, "unknown bundled pattern '" + std::string(name) + "'");
}

} // namespace vlcsim
