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

#include "vlcsim/geometry.hpp"

using namespace vlcsim;

namespace {

void expect_near(const Vector3 &a, const Vector3 &b, double tol)
{
    EXPECT_NEAR(a.x, b.x, tol);
    EXPECT_NEAR(a.y, b.y, tol);
    EXPECT_NEAR(a.z, b.z, tol);
}

// Random orthogonal row/column directions expressed as array orientation angles.
ArrayOrientation random_orientation(std::mt19937_64 &rng)
{
    std::normal_distribution<double> n;
    Vector3 row = normalized({n(rng), n(rng), n(rng)});
    Vector3 tmp{n(rng), n(rng), n(rng)};
    Vector3 col = normalized(tmp - row * dot(tmp, row));
    const auto r = cart_to_sph(row).angles;
    const auto c = cart_to_sph(col).angles;
    return {r.azimuth(), r.elevation(), c.azimuth(), c.elevation()};
}

} // namespace

TEST(Angles, WrapIntoRange)
{
    EXPECT_DOUBLE_EQ(wrap_two_pi(-kHalfPi), 1.5 * kPi);
    EXPECT_DOUBLE_EQ(wrap_two_pi(kTwoPi), 0.0);
    EXPECT_NEAR(wrap_pi(1.5 * kPi), -kHalfPi, 1e-15);
    EXPECT_DOUBLE_EQ(wrap_pi(kPi), kPi);
    for (double a = -20.0; a < 20.0; a += 0.37)
    {
        const double w = wrap_two_pi(a);
        EXPECT_GE(w, 0.0);
        EXPECT_LT(w, kTwoPi);
        EXPECT_NEAR(std::cos(w), std::cos(a), 1e-12);
        EXPECT_NEAR(std::sin(w), std::sin(a), 1e-12);
    }
}

TEST(Angles, ElevationOutsideHalfPiRejected)
{
    EXPECT_THROW(AnglePair(0.0, 2.0), Error);
    EXPECT_NO_THROW(AnglePair(7.0, -kHalfPi));
    EXPECT_NEAR(AnglePair(7.0, 0.0).azimuth(), 7.0 - kTwoPi, 1e-15);
}

TEST(Spherical, RoundTrip)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int k = 0; k < 1000; ++k)
    {
        const Vector3 v{u(rng), u(rng), u(rng)};
        const auto s = cart_to_sph(v);
        expect_near(sph_to_cart(s.angles, s.length), v, 1e-12);
    }
}

TEST(Spherical, ZeroVectorThrows)
{
    try
    {
        cart_to_sph({});
        FAIL();
    }
    catch (const Error &e)
    {
        EXPECT_EQ(e.code(), Errc::ZeroVector);
    }
    EXPECT_THROW(normalized({}), Error);
    EXPECT_THROW(sph_to_cart(AnglePair(0.0, 0.0), -1.0), Error);
}

TEST(Spherical, AngleBetweenMatchesDotProduct)
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> az(0.0, kTwoPi), el(-kHalfPi, kHalfPi);
    for (int k = 0; k < 500; ++k)
    {
        const AnglePair a(az(rng), el(rng)), b(az(rng), el(rng));
        const double oracle = std::acos(clamp_unit(dot(direction(a.azimuth(), a.elevation()), direction(b.azimuth(), b.elevation()))));
        EXPECT_NEAR(angle_between(a, b), oracle, 1e-7);
    }
}

TEST(Frames, DefaultOrientationIsIdentity)
{
    const FrameMatrix m = gcs_to_lcs11(ArrayOrientation{});
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            EXPECT_NEAR(m(r, c), r == c ? 1.0 : 0.0, 1e-12);
}

TEST(Frames, ColumnsAreNormalRowAndColumnDirections)
{
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k)
    {
        const auto o = random_orientation(rng);
        const FrameMatrix m = gcs_to_lcs11(o);
        const Vector3 row = direction(o.row_azimuth, o.row_elevation);
        const Vector3 col = direction(o.column_azimuth, o.column_elevation);
        const Vector3 normal = cross(row, col);
        expect_near({m(0, 0), m(1, 0), m(2, 0)}, normal, 1e-12);
        expect_near({m(0, 1), m(1, 1), m(2, 1)}, row, 1e-12);
        expect_near({m(0, 2), m(1, 2), m(2, 2)}, col, 1e-12);
        EXPECT_NEAR(std::abs(m.determinant()), 1.0, 1e-9);
    }
}

TEST(Frames, InverseUndoesTransform)
{
    std::mt19937_64 rng(6);
    std::normal_distribution<double> n;
    for (int k = 0; k < 100; ++k)
    {
        const FrameMatrix m = gcs_to_lcs11(random_orientation(rng));
        const Vector3 v{n(rng), n(rng), n(rng)};
        expect_near(m.inverse() * (m * v), v, 1e-12);
    }
}

TEST(Frames, ParallelRowAndColumnIsSingular)
{
    ArrayOrientation o;
    o.column_azimuth = o.row_azimuth;
    o.column_elevation = o.row_elevation;
    try
    {
        gcs_to_lcs11(o);
        FAIL();
    }
    catch (const Error &e)
    {
        EXPECT_EQ(e.code(), Errc::SingularFrame);
    }
}

TEST(Frames, PdFrameIsOrthonormalWithNormalColumn)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> az(0.0, kTwoPi), el(-kHalfPi, kHalfPi);
    for (int k = 0; k < 200; ++k)
    {
        const double a = az(rng), e = el(rng);
        const FrameMatrix m = gcs_to_lcs_pd(a, e);
        const FrameMatrix mtm = FrameMatrix({{{m(0, 0), m(1, 0), m(2, 0)}, {m(0, 1), m(1, 1), m(2, 1)}, {m(0, 2), m(1, 2), m(2, 2)}}}) * m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                EXPECT_NEAR(mtm(r, c), r == c ? 1.0 : 0.0, 1e-12);
        expect_near(m * Vector3{0, 0, 1}, direction(a, e), 1e-12);
    }
}

TEST(Array, DefaultLayoutPositions)
{
    ArrayLayout l;
    l.row_spacing = 1.5;
    l.column_spacing = 2.0;
    for (int i = 0; i < l.rows; ++i)
        for (int j = 0; j < l.cols; ++j)
            expect_near(led_position(i, j, l), {0.0, 1.5 * j, 2.0 * i}, 1e-12);
}

TEST(Array, ElementLcsIsTranslatedArrayLcs)
{
    std::mt19937_64 rng(8);
    std::normal_distribution<double> n;
    ArrayLayout l;
    l.orientation = random_orientation(rng);
    const ArrayFrame f(l);
    for (int i = 0; i < l.rows; ++i)
        for (int j = 0; j < l.cols; ++j)
        {
            expect_near(f.to_element_lcs(led_position(i, j, l), i, j), {}, 1e-12);
            const Vector3 p{n(rng), n(rng), n(rng)};
            // The local frame is rigid: distances are preserved.
            EXPECT_NEAR(f.to_element_lcs(p, i, j).norm(), (p - led_position(i, j, l)).norm(), 1e-12);
        }
}

TEST(Array, DepartureAnglesInDefaultFrame)
{
    ArrayLayout l;
    const AnglePair a = point_to_lcs_ij({2.0, 0.0, 0.0}, 0, 0, l);
    EXPECT_NEAR(a.azimuth(), 0.0, 1e-15);
    EXPECT_NEAR(a.elevation(), 0.0, 1e-15);
    // From L12 (at y = 1) the point lies at azimuth -atan(1/2).
    const AnglePair b = point_to_lcs_ij({2.0, 0.0, 0.0}, 0, 1, l);
    EXPECT_NEAR(b.azimuth(), kTwoPi - std::atan(0.5), 1e-12);
    EXPECT_THROW(point_to_lcs_ij({1, 0, 0}, 4, 0, l), Error);
}

TEST(Array, InvalidLayoutRejected)
{
    ArrayLayout l;
    l.rows = 0;
    EXPECT_THROW(l.validate(), Error);
    l.rows = 2;
    l.row_spacing = 0.0;
    EXPECT_THROW(l.validate(), Error);
}

TEST(Receiver, SidePdsInclinedAndEvenlySpaced)
{
    ReceiverAttitude rx;
    rx.num_pd = 5;
    rx.pd_inclination = deg_to_rad(30.0);
    rx.azimuth = 2.0;
    rx.elevation = 0.4;
    const auto n = adr_pd_normals(rx, 0.0);
    ASSERT_EQ(n.size(), 5u);
    expect_near(n[0], direction(2.0, 0.4), 1e-12);
    for (int p = 1; p < 5; ++p)
    {
        EXPECT_NEAR(std::acos(clamp_unit(dot(n[0], n[p]))), rx.pd_inclination, 1e-12);
        const int q = p == 4 ? 1 : p + 1;
        // Neighbouring side PDs are a quarter turn apart around the top normal.
        const Vector3 a = normalized(n[p] - n[0] * dot(n[p], n[0]));
        const Vector3 b = normalized(n[q] - n[0] * dot(n[q], n[0]));
        EXPECT_NEAR(dot(a, b), 0.0, 1e-12);
    }
}

TEST(Receiver, RotationAdvancesAngles)
{
    ReceiverAttitude rx;
    rx.azimuth_rate = kPi / 4;
    expect_near(adr_pd_normals(rx, 2.0)[0], direction(kPi + kHalfPi, 0.0), 1e-12);
}

TEST(Receiver, InvalidAdrRejected)
{
    ReceiverAttitude rx;
    rx.num_pd = 0;
    EXPECT_THROW(rx.validate(), Error);
    rx.num_pd = 3;
    rx.pd_inclination = kHalfPi;
    EXPECT_THROW(adr_pd_initial_angles(rx), Error);
}

TEST(ClusterNormal, PerpendicularToAxisAndPointingAtIt)
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> az(0.0, kTwoPi), el(-1.4, 1.4), d(0.1, 5.0);
    for (int k = 0; k < 1000; ++k)
    {
        const double a = az(rng), e = el(rng), r = d(rng);
        const Vector3 c = direction(a, e) * r;
        const Vector3 nrm = cluster_equivalent_normal(r, a, e);
        EXPECT_NEAR(nrm.norm(), 1.0, 1e-12);
        EXPECT_NEAR(nrm.x, 0.0, 1e-9);
        const Vector3 foot{c.x, 0.0, 0.0};
        EXPECT_GT(dot(nrm, foot - c), 0.0);
        expect_near(nrm, perpendicular_normal(c, {}, {2.0, 0.0, 0.0}), 1e-9);
    }
}

TEST(ClusterNormal, CentreOnAxisIsDegenerate)
{
    try
    {
        cluster_equivalent_normal(1.0, 0.0, 0.0);
        FAIL();
    }
    catch (const Error &e)
    {
        EXPECT_EQ(e.code(), Errc::DegenerateNormal);
    }
    EXPECT_THROW(perpendicular_normal({3, 0, 0}, {}, {1, 0, 0}), Error);
}
