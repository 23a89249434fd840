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

#include <gtest/gtest.h>

#include "vlcsim/scene.hpp"

using namespace vlcsim;

namespace {

double mean(const std::vector<double> &v)
{
    double s = 0.0;
    for (double x : v)
        s += x;
    return s / static_cast<double>(v.size());
}

double stddev(const std::vector<double> &v)
{
    const double m = mean(v);
    double s = 0.0;
    for (double x : v)
        s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

} // namespace

TEST(Fold, ElevationPastPoleContinuesOverIt)
{
    const AnglePair a = fold_angles(0.3, kHalfPi + 0.2);
    EXPECT_NEAR(a.elevation(), kHalfPi - 0.2, 1e-12);
    EXPECT_NEAR(a.azimuth(), wrap_two_pi(0.3 + kPi), 1e-12);
    // Folding keeps the direction of the unfolded spherical formula.
    for (double el = -7.0; el < 7.0; el += 0.31)
    {
        const AnglePair f = fold_angles(1.1, el);
        const Vector3 d = direction(f.azimuth(), f.elevation());
        const Vector3 raw = direction(1.1, el);
        EXPECT_NEAR((d - raw).norm(), 0.0, 1e-12) << el;
    }
}

TEST(Clusters, NormalsPerpendicularToLinkAxis)
{
    ScenarioParams p;
    const auto gammas = material_reflectances(p.spectra);
    Engine rng = make_stream(1, 0, StreamPurpose::User);
    for (int k = 0; k < 500; ++k)
    {
        const Cluster tx = sample_cluster(p, ClusterSide::Tx, gammas, rng);
        EXPECT_NEAR(tx.normal.x, 0.0, 1e-9);
        EXPECT_NEAR(tx.normal.norm(), 1.0, 1e-12);
        EXPECT_NEAR((tx.centre - direction(tx.azimuth, tx.elevation) * tx.distance).norm(), 0.0, 1e-12);
        const Cluster rx = sample_cluster(p, ClusterSide::Rx, gammas, rng);
        EXPECT_EQ(rx.anchor, p.receiver.initial_position());
        EXPECT_NEAR(rx.normal.x, 0.0, 1e-9);
    }
}

TEST(Clusters, DistanceAndAngleStatistics)
{
    ScenarioParams p;
    p.receiver.distance = 3.0;
    p.clusters.azimuth_std = deg_to_rad(10.0);
    p.clusters.elevation_std = deg_to_rad(15.0);
    p.clusters.tx_mean_azimuth = 0.5;
    const auto gammas = material_reflectances(p.spectra);
    Engine rng = make_stream(2, 0, StreamPurpose::User);
    std::vector<double> d, az, el;
    std::vector<int> counts(4, 0);
    const int n = 20000;
    for (int k = 0; k < n; ++k)
    {
        const Cluster c = sample_cluster(p, ClusterSide::Tx, gammas, rng);
        d.push_back(c.distance);
        az.push_back(wrap_pi(c.azimuth));
        el.push_back(c.elevation);
        ++counts[static_cast<std::size_t>(c.material)];
        EXPECT_EQ(c.reflectance, gammas[static_cast<std::size_t>(c.material)]);
    }
    // Exponential with mean D / 2: mean and sd both 1.5.
    EXPECT_NEAR(mean(d), 1.5, 5.0 * 1.5 / std::sqrt(n));
    EXPECT_NEAR(stddev(d), 1.5, 0.05);
    EXPECT_NEAR(mean(az), 0.5, 5.0 * deg_to_rad(10.0) / std::sqrt(n));
    EXPECT_NEAR(stddev(az), deg_to_rad(10.0), 0.01);
    EXPECT_NEAR(stddev(el), deg_to_rad(15.0), 0.01);
    const double w[4] = {0.3, 0.2, 0.4, 0.1};
    for (int m = 0; m < 4; ++m)
        EXPECT_NEAR(counts[m] / double(n), w[m], 5.0 * std::sqrt(w[m] * (1 - w[m]) / n)) << m;
}

TEST(Scatterers, SpreadAlongClusterAxes)
{
    Cluster c;
    c.azimuth = 0.7;
    c.elevation = -0.4;
    c.distance = 4.0;
    c.anchor = {1.0, 2.0, 3.0};
    c.sigma_ds = 0.5;
    c.sigma_as = 1.0;
    c.sigma_es = 2.0;
    c.scatterer_count = 20000;
    c.area = 2.0;
    Engine rng = make_stream(3, 0, StreamPurpose::User);
    const auto s = generate_scatterers(c, rng);
    ASSERT_EQ(s.size(), 20000u);
    // Project back onto the radial, azimuthal and elevation axes of the cluster.
    const Vector3 radial = direction(c.azimuth, c.elevation);
    const Vector3 side = direction(c.azimuth + kHalfPi, 0.0);
    const Vector3 up = cross(radial, side);
    std::vector<double> r, a, e;
    for (const auto &sc : s)
    {
        const Vector3 v = sc.position - c.anchor;
        r.push_back(dot(v, radial));
        a.push_back(dot(v, side));
        e.push_back(dot(v, up));
        EXPECT_DOUBLE_EQ(sc.area, 1e-4);
    }
    EXPECT_NEAR(mean(r), 4.0, 0.02);
    EXPECT_NEAR(mean(a), 0.0, 0.04);
    EXPECT_NEAR(stddev(r), 0.5, 0.02);
    EXPECT_NEAR(stddev(a), 1.0, 0.03);
    EXPECT_NEAR(stddev(e), 2.0, 0.06);
}

TEST(Evolution, SurvivalProbabilities)
{
    ArrayLayout l;
    EvolutionParams e;
    EXPECT_DOUBLE_EQ(horizontal_survival(l, e), 1.0); // columns run vertically: cos(pi/2) = 0
    EXPECT_NEAR(vertical_survival(l, e), std::exp(-8.0), 1e-15);
    l.row_spacing = 2.0;
    EXPECT_NEAR(vertical_survival(l, e), std::exp(-16.0), 1e-20);
    EXPECT_NEAR(remain_probability(l, e, 0, 1, 0, 3), std::exp(-32.0), 1e-25);
    EXPECT_NEAR(remain_probability(l, e, 0, 0, 2, 0), 1.0, 1e-15);
    EXPECT_NEAR(remain_probability(l, e, 1, 1, 3, 2), std::exp(-16.0 * 3), 1e-30);
    e.fixed_cluster_count = 5;
    EXPECT_EQ(remain_probability(l, e, 0, 0, 3, 3), 1.0);
}

TEST(Evolution, FirstElementSeesInitialClusters)
{
    ArrayLayout l;
    EvolutionParams e;
    for (std::uint64_t r = 0; r < 20; ++r)
    {
        Engine rng = make_stream(4, r, StreamPurpose::Evolution);
        const auto v = evolve_visibility(l, e, rng);
        EXPECT_EQ(v.count(0, 0), 20);
        // P_H = 1: the first column keeps every cluster and gains none.
        for (int i = 1; i < l.rows; ++i)
            EXPECT_EQ(v.visible_clusters(i, 0), v.visible_clusters(0, 0));
    }
}

TEST(Evolution, FixedCountVisibleEverywhere)
{
    ArrayLayout l;
    EvolutionParams e;
    e.fixed_cluster_count = 7;
    Engine rng = make_stream(5, 0, StreamPurpose::Evolution);
    const auto v = evolve_visibility(l, e, rng);
    EXPECT_EQ(v.clusters(), 7);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            EXPECT_EQ(v.count(i, j), 7);
}

TEST(Evolution, SurvivalAlongRowMatchesProbability)
{
    ArrayLayout l;
    l.cols = 3;
    l.row_spacing = 0.1; // P_V = exp(-0.8)
    EvolutionParams e;
    const double pv = vertical_survival(l, e);
    double kept1 = 0, kept2 = 0, start = 0;
    const int n = 4000;
    for (int r = 0; r < n; ++r)
    {
        Engine rng = make_stream(6, static_cast<std::uint64_t>(r), StreamPurpose::Evolution);
        const auto v = evolve_visibility(l, e, rng);
        for (int c : v.visible_clusters(0, 0))
        {
            start += 1;
            kept1 += v.visible(0, 1, c);
            kept2 += v.visible(0, 2, c);
        }
    }
    EXPECT_NEAR(kept1 / start, pv, 5.0 * std::sqrt(pv * (1 - pv) / start));
    EXPECT_NEAR(kept2 / start, pv * pv, 5.0 * std::sqrt(pv * pv * (1 - pv * pv) / start));
}

TEST(Evolution, SbDbSplit)
{
    EXPECT_EQ(db_cluster_count(20, 0.9), 2);
    EXPECT_EQ(db_cluster_count(25, 0.88), 3);
    EXPECT_EQ(db_cluster_count(10, 1.0), 0);
    Engine rng = make_stream(7, 0, StreamPurpose::Pairing);
    const auto partner = split_sb_db(30, 0.8, 6, rng);
    int db = 0;
    std::vector<int> used(6, 0);
    for (int p : partner)
        if (p >= 0)
        {
            ++db;
            ++used[static_cast<std::size_t>(p)];
        }
    EXPECT_EQ(db, 6);
    for (int u : used)
        EXPECT_EQ(u, 1);
}

TEST(SceneBuild, DeterministicPerSeedAndRealization)
{
    ScenarioParams p;
    p.clusters.scatterers = 10;
    const Scene a = build_scene(p, 9, 3);
    const Scene b = build_scene(p, 9, 3);
    const Scene c = build_scene(p, 9, 4);
    ASSERT_EQ(a.tx_clusters.size(), b.tx_clusters.size());
    EXPECT_TRUE(a.visibility == b.visibility);
    EXPECT_EQ(a.partner, b.partner);
    for (std::size_t n = 0; n < a.tx_scatterers.size(); ++n)
        for (std::size_t m = 0; m < a.tx_scatterers[n].size(); ++m)
            EXPECT_EQ(a.tx_scatterers[n][m].position, b.tx_scatterers[n][m].position);
    EXPECT_FALSE(a.tx_scatterers[0][0].position == c.tx_scatterers[0][0].position);
    EXPECT_EQ(static_cast<int>(a.rx_clusters.size()), db_cluster_count(static_cast<int>(a.tx_clusters.size()), 0.9));
}

TEST(SceneBuild, ClusterStreamsIndependentOfCount)
{
    // Cluster n is drawn from its own stream, so changing the evolution leaves the
    // clusters both scenes share untouched.
    ScenarioParams p;
    p.clusters.scatterers = 3;
    ScenarioParams q = p;
    q.evolution.fixed_cluster_count = 5;
    const Scene a = build_scene(p, 10, 0);
    const Scene b = build_scene(q, 10, 0);
    for (std::size_t n = 0; n < 5; ++n)
        EXPECT_EQ(a.tx_clusters[n].centre, b.tx_clusters[n].centre);
}

TEST(Snapshot, MotionIsLinearInTime)
{
    ScenarioParams p;
    p.clusters.scatterers = 4;
    p.clusters.speed = 0.3;
    p.clusters.travel_azimuth = 1.0;
    p.receiver.speed = 0.5;
    p.receiver.travel_elevation = kHalfPi;
    p.receiver.attitude.elevation_rate = 0.1;
    const Scene s = build_scene(p, 11, 0);
    const auto s0 = positions_at(s, 0.0);
    const auto s2 = positions_at(s, 2.0);
    const auto s2b = positions_at(positions_at(s, 0.5), 1.5);
    EXPECT_NEAR((s2.rx_position() - Vector3{2.0, 0.0, 1.0}).norm(), 0.0, 1e-12);
    EXPECT_NEAR((s2.tx_scatterer(0, 1) - s0.tx_scatterer(0, 1) - direction(1.0, 0.0) * 0.6).norm(), 0.0, 1e-12);
    EXPECT_EQ(s2.tx_scatterer(1, 2), s2b.tx_scatterer(1, 2));
    EXPECT_NEAR((s2.pd_normals()[0] - direction(kPi, 0.2)).norm(), 0.0, 1e-12);
    EXPECT_THROW(positions_at(s, -0.1), Error);
}

TEST(SceneBuild, InvalidParamsRejected)
{
    ScenarioParams p;
    p.clusters.sb_ratio = 1.5;
    EXPECT_THROW(build_scene(p, 1, 0), Error);
    p = ScenarioParams{};
    p.evolution.death_rate = 0.0;
    EXPECT_THROW(build_scene(p, 1, 0), Error);
    p = ScenarioParams{};
    p.spectra.materials.clear();
    EXPECT_THROW(p.validate(), Error);
}
