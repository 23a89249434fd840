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

// Ray powers and delays of the LoS, single-bounce and double-bounce paths, and the
// channel impulse response of every LED-PD link.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "vlcsim/error.hpp"
#include "vlcsim/geometry.hpp"
#include "vlcsim/optics.hpp"
#include "vlcsim/scene.hpp"

namespace vlcsim {

inline constexpr double kSpeedOfLight = 2.99792458e8; // m/s

enum class RayKind { LoS, SingleBounce, DoubleBounce };

struct RayTap
{
    double power = 0.0; // channel gain for a 1 W source
    double delay = 0.0; // s
    RayKind kind = RayKind::LoS;
    int cluster = -1;   // Tx-side cluster for NLoS rays
    int scatterer = -1;

    bool operator==(const RayTap &) const = default;
};

struct Cir
{
    int row = 0, col = 0, pd = 0;
    double time = 0.0;
    std::vector<RayTap> taps; // ascending delay

    double dc_gain() const
    {
        double s = 0.0;
        for (const auto &t : taps)
            s += t.power;
        return s;
    }

    std::optional<RayTap> los() const
    {
        for (const auto &t : taps)
            if (t.kind == RayKind::LoS)
                return t;
        return std::nullopt;
    }
};

// ---------- power kernels: straight products of the ray factors ----------

// F * A_R cos(psi_R) / D^2 * G T V
inline double los_power(double intensity, double rx_area, double cos_rx, double distance, double rx_gain)
{
    return intensity * rx_area * cos_rx / (distance * distance) * rx_gain;
}

// F * A_s cos(psi_in) / d_T^2 * Gamma * cos(psi_out)/pi * A_R cos(psi_R) / d_R^2 * G T V
inline double sb_power(double intensity, double scatterer_area, double cos_in, double d_tx, double gamma, double cos_out,
                       double rx_area, double cos_rx, double d_rx, double rx_gain)
{
    return intensity * (scatterer_area * cos_in / (d_tx * d_tx)) * gamma * (cos_out / kPi) *
           (rx_area * cos_rx / (d_rx * d_rx)) * rx_gain;
}

// The first scatterer re-emits diffusely toward the second, which captures with its own
// area and re-emits diffusely toward the PD.
inline double db_power(double intensity, double area_a, double cos_in_a, double d_tx, double gamma_a, double cos_out_a,
                       double area_z, double cos_in_z, double d_mid, double gamma_z, double cos_out_z, double rx_area,
                       double cos_rx, double d_rx, double rx_gain)
{
    return intensity * (area_a * cos_in_a / (d_tx * d_tx)) * gamma_a * (cos_out_a / kPi) *
           (area_z * cos_in_z / (d_mid * d_mid)) * gamma_z * (cos_out_z / kPi) * (rx_area * cos_rx / (d_rx * d_rx)) * rx_gain;
}

inline constexpr double kMinDistance = 1e-12;

// Evaluates the rays of one (element, PD) link at one snapshot.
class LinkEvaluator
{
public:
    LinkEvaluator(const SceneSnapshot &snap, int row, int col, int pd)
        : snap_(&snap), scene_(&snap.scene()), row_(row), col_(col), pd_(pd)
    {
        const auto &layout = scene_->frame.layout();
        if (row < 0 || row >= layout.rows || col < 0 || col >= layout.cols)
            throw Error(Errc::OutOfRange, "LED element index out of range");
        if (pd < 0 || pd >= static_cast<int>(snap.pd_normals().size()))
            throw Error(Errc::OutOfRange, "PD index out of range");
        led_ = scene_->led(row, col);
        normal_ = snap.pd_normals()[static_cast<std::size_t>(pd)];
        rx_ = snap.rx_position();
    }

    std::optional<RayTap> los() const
    {
        const Vector3 v = rx_ - led_;
        const double d = v.norm();
        if (d < kMinDistance)
            throw Error(Errc::ZeroDistance, "receiver coincides with the LED element");
        const double g = rx_hop_gain(v, d);
        if (g < 0.0)
            return std::nullopt;
        const double f = emitted(rx_);
        const double p = los_power(f, params().receiver.area, cos_rx_, d, g);
        if (!(p > 0.0))
            return std::nullopt;
        return RayTap{p, d / kSpeedOfLight, RayKind::LoS, -1, -1};
    }

    std::optional<RayTap> single_bounce(int cluster, int m) const
    {
        const auto &c = scene_->tx_clusters.at(static_cast<std::size_t>(cluster));
        const Vector3 s = snap_->tx_scatterer(cluster, m);
        const Vector3 vt = s - led_;
        const Vector3 vr = rx_ - s;
        const double dt = vt.norm(), dr = vr.norm();
        if (dt < kMinDistance || dr < kMinDistance)
            throw Error(Errc::ZeroDistance, "scatterer coincides with an endpoint");
        const double cos_in = -dot(vt, c.normal) / dt;
        const double cos_out = dot(c.normal, vr) / dr;
        if (cos_in < 0.0 || cos_out < 0.0)
            return std::nullopt;
        const double g = rx_hop_gain(vr, dr);
        if (g < 0.0)
            return std::nullopt;
        const double f = emitted(s);
        const double p = sb_power(f, c.scatterer_area(), cos_in, dt, c.reflectance, cos_out, params().receiver.area, cos_rx_, dr, g);
        if (!(p > 0.0))
            return std::nullopt;
        return RayTap{p, (dt + dr) / kSpeedOfLight, RayKind::SingleBounce, cluster, m};
    }

    std::optional<RayTap> double_bounce(int cluster, int m) const
    {
        const int z = scene_->partner.at(static_cast<std::size_t>(cluster));
        if (z < 0)
            throw Error(Errc::InvalidArgument, "cluster has no Rx-side partner");
        const auto &ca = scene_->tx_clusters.at(static_cast<std::size_t>(cluster));
        const auto &cz = scene_->rx_clusters.at(static_cast<std::size_t>(z));
        const int mz = m % cz.scatterer_count;
        const Vector3 sa = snap_->tx_scatterer(cluster, m);
        const Vector3 sz = snap_->rx_scatterer(z, mz);
        const Vector3 vt = sa - led_, vs = sz - sa, vr = rx_ - sz;
        const double dt = vt.norm(), ds = vs.norm(), dr = vr.norm();
        if (dt < kMinDistance || ds < kMinDistance || dr < kMinDistance)
            throw Error(Errc::ZeroDistance, "scatterer coincides with an endpoint");
        const double cos_in_a = -dot(vt, ca.normal) / dt;
        const double cos_out_a = dot(ca.normal, vs) / ds;
        const double cos_in_z = -dot(vs, cz.normal) / ds;
        const double cos_out_z = dot(cz.normal, vr) / dr;
        if (cos_in_a < 0.0 || cos_out_a < 0.0 || cos_in_z < 0.0 || cos_out_z < 0.0)
            return std::nullopt;
        const double g = rx_hop_gain(vr, dr);
        if (g < 0.0)
            return std::nullopt;
        const double f = emitted(sa);
        const double p = db_power(f, ca.scatterer_area(), cos_in_a, dt, ca.reflectance, cos_out_a, cz.scatterer_area(), cos_in_z, ds,
                                  cz.reflectance, cos_out_z, params().receiver.area, cos_rx_, dr, g);
        if (!(p > 0.0))
            return std::nullopt;
        return RayTap{p, (dt + ds + dr) / kSpeedOfLight, RayKind::DoubleBounce, cluster, m};
    }

    // Calls fn(const RayTap&) for every non-zero ray, NLoS rays only through clusters the
    // element observes.
    template <typename Fn>
    void for_each(Fn &&fn, bool with_los = true, bool with_nlos = true) const
    {
        if (with_los)
            if (auto t = los())
                fn(*t);
        if (!with_nlos)
            return;
        const auto &vis = scene_->visibility;
        for (int n = 0; n < vis.clusters(); ++n)
        {
            if (!vis.visible(row_, col_, n))
                continue;
            const bool db = scene_->partner[static_cast<std::size_t>(n)] >= 0;
            const int count = scene_->tx_clusters[static_cast<std::size_t>(n)].scatterer_count;
            for (int m = 0; m < count; ++m)
                if (auto t = db ? double_bounce(n, m) : single_bounce(n, m))
                    fn(*t);
        }
    }

private:
    const ScenarioParams &params() const { return *scene_->params; }

    double emitted(const Vector3 &target) const
    {
        const Vector3 local = scene_->frame.to_element_lcs(target, row_, col_);
        return params().array.pattern.intensity(local, local.norm());
    }

    // G T V at the PD for a ray arriving along v (length d); negative when V = 0.
    // Leaves cos(psi_R) in cos_rx_.
    double rx_hop_gain(const Vector3 &v, double d) const
    {
        cos_rx_ = -dot(normal_, v) / d;
        const double psi = std::acos(clamp_unit(cos_rx_));
        const auto &optics = params().receiver.optics;
        if (!visibility(optics, psi))
            return -1.0;
        return concentrator_gain(optics, psi) * filter_gain(optics, psi);
    }

    const SceneSnapshot *snap_;
    const Scene *scene_;
    int row_, col_, pd_;
    Vector3 led_, normal_, rx_;
    mutable double cos_rx_ = 0.0;
};

inline std::optional<RayTap> los_tap(const SceneSnapshot &snap, int row, int col, int pd)
{
    return LinkEvaluator(snap, row, col, pd).los();
}

inline std::optional<RayTap> sb_tap(const SceneSnapshot &snap, int row, int col, int pd, int cluster, int m)
{
    return LinkEvaluator(snap, row, col, pd).single_bounce(cluster, m);
}

inline std::optional<RayTap> db_tap(const SceneSnapshot &snap, int row, int col, int pd, int cluster, int m)
{
    return LinkEvaluator(snap, row, col, pd).double_bounce(cluster, m);
}

inline Cir cir_snapshot(const SceneSnapshot &snap, int row, int col, int pd)
{
    Cir cir{row, col, pd, snap.time(), {}};
    LinkEvaluator(snap, row, col, pd).for_each([&](const RayTap &t) { cir.taps.push_back(t); });
    std::stable_sort(cir.taps.begin(), cir.taps.end(), [](const RayTap &a, const RayTap &b) { return a.delay < b.delay; });
    return cir;
}

// DC gain of a link without materializing its taps.
inline double link_dc_gain(const SceneSnapshot &snap, int row, int col, int pd, bool with_los = true, bool with_nlos = true)
{
    double s = 0.0;
    LinkEvaluator(snap, row, col, pd).for_each([&](const RayTap &t) { s += t.power; }, with_los, with_nlos);
    return s;
}

struct ChannelMatrix
{
    double time = 0.0;
    int rows = 0, cols = 0, pds = 0;
    std::vector<Cir> cirs; // index (row * cols + col) * pds + pd

    const Cir &at(int row, int col, int pd) const { return cirs[static_cast<std::size_t>((row * cols + col) * pds + pd)]; }
};

inline ChannelMatrix channel_matrix(const SceneSnapshot &snap)
{
    const auto &layout = snap.scene().frame.layout();
    ChannelMatrix h{snap.time(), layout.rows, layout.cols, static_cast<int>(snap.pd_normals().size()), {}};
    for (int i = 0; i < h.rows; ++i)
        for (int j = 0; j < h.cols; ++j)
            for (int p = 0; p < h.pds; ++p)
                h.cirs.push_back(cir_snapshot(snap, i, j, p));
    return h;
}

// Full channel at each time of a uniform grid; every sample is evaluated from scratch.
inline std::vector<ChannelMatrix> channel_over_time(const Scene &scene, double t_start, double t_step, int samples)
{
    if (!(t_step > 0.0) || samples < 1)
        throw Error(Errc::InvalidArgument, "time grid needs a positive step and at least one sample");
    std::vector<ChannelMatrix> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k)
        out.push_back(channel_matrix(positions_at(scene, t_start + k * t_step)));
    return out;
}

} // namespace vlcsim
