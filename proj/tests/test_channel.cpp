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

#include <random>

#include <gtest/gtest.h>

#include "vlcsim/channel.hpp"

using namespace vlcsim;

namespace {

// One Tx-side cluster holding one scatterer; the caller moves it around.
Scene one_scatterer_scene(const ScenarioParams &base)
{
    ScenarioParams p = base;
    p.evolution.fixed_cluster_count = 1;
    p.clusters.scatterers = 1;
    p.clusters.sb_ratio = 1.0;
    return build_scene(p, 1, 0);
}

// Lambertian intensity of an element whose normal is +x.
double lambert(double order, const Vector3 &v)
{
    const double c = v.x / v.norm();
    return c > 0.0 ? (order + 1.0) / (2.0 * kPi) * std::pow(c, order) : 0.0;
}

} // namespace

TEST(LineOfSight, HandComputedOnAxisLink)
{
    ScenarioParams p;
    p.evolution.fixed_cluster_count = 1;
    const Scene s = build_scene(p, 1, 0);
    const auto t = los_tap(positions_at(s, 0.0), 0, 0, 0);
    ASSERT_TRUE(t.has_value());
    // (m + 1) / (2 pi) * A_R / D^2 with m = 1, A_R = 1 cm^2, D = 2 m
    EXPECT_NEAR(t->power, 1e-4 / (4.0 * kPi), 1e-18);
    EXPECT_NEAR(t->power, 7.9577e-6, 5e-10);
    EXPECT_NEAR(t->delay, 6.6713e-9, 5e-13);
    EXPECT_EQ(t->kind, RayKind::LoS);
}

TEST(LineOfSight, OffsetElementsFollowCosineLaw)
{
    ScenarioParams p;
    p.evolution.fixed_cluster_count = 1;
    p.array.pattern = RadiationPattern::lambertian(3.0);
    const Scene s = build_scene(p, 1, 0);
    const auto snap = positions_at(s, 0.0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
        {
            const Vector3 v = Vector3{2.0, 0.0, 0.0} - s.led(i, j);
            const double d = v.norm();
            const double cos_rx = v.x / d;
            const double oracle = lambert(3.0, v) * 1e-4 * cos_rx / (d * d);
            const auto t = los_tap(snap, i, j, 0);
            ASSERT_TRUE(t.has_value());
            EXPECT_NEAR(t->power / oracle, 1.0, 1e-12);
            EXPECT_NEAR(t->delay, d / kSpeedOfLight, 1e-20);
        }
}

TEST(LineOfSight, OutsideFovDropped)
{
    ScenarioParams p;
    p.evolution.fixed_cluster_count = 1;
    p.receiver.optics.fov = deg_to_rad(20.0);
    p.array.layout.row_spacing = 1.0;
    const Scene s = build_scene(p, 1, 0);
    const auto snap = positions_at(s, 0.0);
    // L11 sits on the axis; L14 is 3 m off it at 2 m range, about 56 degrees.
    EXPECT_TRUE(los_tap(snap, 0, 0, 0).has_value());
    EXPECT_FALSE(los_tap(snap, 0, 3, 0).has_value());
    for (const auto &t : cir_snapshot(snap, 0, 3, 0).taps)
        EXPECT_NE(t.kind, RayKind::LoS);
}

TEST(SingleBounce, MatchesIndependentProduct)
{
    ScenarioParams p;
    p.array.pattern = RadiationPattern::lambertian(2.0);
    p.receiver.optics.fov = kHalfPi;
    Scene s = one_scatterer_scene(p);
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-3.0, 3.0), ux(0.2, 1.8);
    int evaluated = 0;
    for (int k = 0; k < 300; ++k)
    {
        const Vector3 pos{ux(rng), u(rng), u(rng)};
        auto &c = s.tx_clusters[0];
        c.normal = perpendicular_normal(pos, {}, {2.0, 0.0, 0.0});
        s.tx_scatterers[0][0].position = pos;
        const int i = k % 4, j = (k / 4) % 4;
        const auto t = sb_tap(positions_at(s, 0.0), i, j, 0, 0, 0);

        const Vector3 led = s.led(i, j), rx{2.0, 0.0, 0.0};
        const Vector3 in = pos - led, out = rx - pos;
        const double cin = -dot(in, c.normal) / in.norm();
        const double cout = dot(out, c.normal) / out.norm();
        const double crx = out.x / out.norm(); // PD faces -x
        if (cin < 0 || cout < 0 || crx < 0)
        {
            EXPECT_FALSE(t.has_value());
            continue;
        }
        ASSERT_TRUE(t.has_value());
        const double oracle = lambert(2.0, in) * c.area / c.scatterer_count * cin / (in.norm() * in.norm()) * c.reflectance * cout / kPi *
                              1e-4 * crx / (out.norm() * out.norm());
        EXPECT_NEAR(t->power / oracle, 1.0, 1e-12);
        EXPECT_NEAR(t->delay * kSpeedOfLight, in.norm() + out.norm(), 1e-12);
        ++evaluated;
    }
    EXPECT_GT(evaluated, 50);
}

TEST(DoubleBounce, MatchesIndependentProduct)
{
    ScenarioParams p;
    p.receiver.optics.fov = kHalfPi;
    p.evolution.fixed_cluster_count = 1;
    p.clusters.scatterers = 1;
    p.clusters.sb_ratio = 0.0;
    Scene s = build_scene(p, 2, 0);
    ASSERT_EQ(s.partner[0], 0);
    auto &a = s.tx_clusters[0];
    auto &z = s.rx_clusters[0];
    const Vector3 pa{0.5, 1.0, 0.0}, pz{1.5, -1.0, 0.5};
    a.normal = {0.0, -1.0, 0.0};
    z.normal = normalized({0.0, 1.0, -0.5});
    s.tx_scatterers[0][0].position = pa;
    s.rx_scatterers[0][0].position = pz;
    const auto t = db_tap(positions_at(s, 0.0), 0, 0, 0, 0, 0);
    ASSERT_TRUE(t.has_value());

    const Vector3 rx{2.0, 0.0, 0.0};
    const Vector3 v1 = pa, v2 = pz - pa, v3 = rx - pz;
    const double oracle = lambert(1.0, v1) * (a.area / a.scatterer_count) * (-dot(v1, a.normal) / v1.norm()) / (v1.norm() * v1.norm()) *
                          a.reflectance * (dot(v2, a.normal) / v2.norm()) / kPi * (z.area / z.scatterer_count) *
                          (-dot(v2, z.normal) / v2.norm()) / (v2.norm() * v2.norm()) * z.reflectance * (dot(v3, z.normal) / v3.norm()) / kPi *
                          1e-4 * (v3.x / v3.norm()) / (v3.norm() * v3.norm());
    EXPECT_NEAR(t->power / oracle, 1.0, 1e-12);
    EXPECT_NEAR(t->delay * kSpeedOfLight, v1.norm() + v2.norm() + v3.norm(), 1e-12);
    EXPECT_EQ(t->kind, RayKind::DoubleBounce);
}

TEST(SingleBounce, BackFacingScattererContributesNothing)
{
    ScenarioParams p;
    Scene s = one_scatterer_scene(p);
    s.tx_scatterers[0][0].position = {1.0, 1.0, 0.0};
    s.tx_clusters[0].normal = {0.0, 1.0, 0.0}; // faces away from the link axis
    EXPECT_FALSE(sb_tap(positions_at(s, 0.0), 0, 0, 0, 0, 0).has_value());
}

TEST(Cir, SortedAndConsistentWithDcGain)
{
    ScenarioParams p;
    p.clusters.scatterers = 20;
    const Scene s = build_scene(p, 5, 0);
    const auto snap = positions_at(s, 0.0);
    const Cir c = cir_snapshot(snap, 1, 2, 0);
    ASSERT_GT(c.taps.size(), 2u);
    for (std::size_t k = 1; k < c.taps.size(); ++k)
        EXPECT_LE(c.taps[k - 1].delay, c.taps[k].delay);
    EXPECT_NEAR(link_dc_gain(snap, 1, 2, 0), c.dc_gain(), 1e-15 * c.dc_gain() * c.taps.size());
    EXPECT_NEAR(link_dc_gain(snap, 1, 2, 0, true, false) + link_dc_gain(snap, 1, 2, 0, false, true), c.dc_gain(),
                1e-12 * c.dc_gain());
    for (const auto &t : c.taps)
    {
        EXPECT_GT(t.power, 0.0);
        if (t.kind != RayKind::LoS)
            EXPECT_TRUE(s.visibility.visible(1, 2, t.cluster));
    }
}

TEST(ChannelMatrix, CoversEveryLinkAndTime)
{
    ScenarioParams p;
    p.clusters.scatterers = 2;
    p.receiver.attitude.num_pd = 3;
    const Scene s = build_scene(p, 6, 0);
    const auto h = channel_over_time(s, 0.0, 0.5, 3);
    ASSERT_EQ(h.size(), 3u);
    EXPECT_DOUBLE_EQ(h[2].time, 1.0);
    EXPECT_EQ(h[0].cirs.size(), 48u);
    EXPECT_EQ(h[0].at(3, 1, 2).row, 3);
    EXPECT_EQ(h[0].at(3, 1, 2).col, 1);
    EXPECT_EQ(h[0].at(3, 1, 2).pd, 2);
    EXPECT_THROW(channel_over_time(s, 0.0, 0.0, 3), Error);
}

TEST(Evaluator, BadIndicesRejected)
{
    ScenarioParams p;
    p.evolution.fixed_cluster_count = 1;
    const Scene s = build_scene(p, 1, 0);
    const auto snap = positions_at(s, 0.0);
    EXPECT_THROW(los_tap(snap, 4, 0, 0), Error);
    EXPECT_THROW(los_tap(snap, 0, 0, 1), Error);
}

TEST(Evaluator, ReceiverOnLedThrows)
{
    ScenarioParams p;
    p.evolution.fixed_cluster_count = 1;
    p.receiver.speed = 1.0;
    p.receiver.travel_azimuth = kPi;
    const Scene s = build_scene(p, 1, 0);
    try
    {
        los_tap(positions_at(s, 2.0), 0, 0, 0);
        FAIL();
    }
    catch (const Error &e)
    {
        EXPECT_EQ(e.code(), Errc::ZeroDistance);
    }
}
