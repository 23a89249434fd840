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

// Coordinate systems used by the channel model.
//
// GCS: origin at the benchmark LED element L11, receiver initially at (D, 0, 0).
// LCS_11 / LCS_ij: x' is the element normal, y' runs along the array row, z' along the column.
// LCS_PD: z_R is the top photodiode normal.
//
// Angles follow the geographic convention: azimuth in [0, 2pi) measured from +x toward +y,
// elevation in [-pi/2, pi/2] measured from the xy plane.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "vlcsim/error.hpp"

namespace vlcsim {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

struct Vector3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vector3 operator+(const Vector3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vector3 operator-(const Vector3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vector3 operator-() const { return {-x, -y, -z}; }
    constexpr Vector3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vector3 operator/(double s) const { return {x / s, y / s, z / s}; }
    constexpr Vector3 &operator+=(const Vector3 &o)
    {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr bool operator==(const Vector3 &) const = default;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

constexpr Vector3 operator*(double s, const Vector3 &v) { return v * s; }
constexpr double dot(const Vector3 &a, const Vector3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vector3 cross(const Vector3 &a, const Vector3 &b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline constexpr double kZeroVectorTolerance = 1e-15;

inline Vector3 normalized(const Vector3 &v)
{
    const double n = v.norm();
    if (n < kZeroVectorTolerance)
        throw Error(Errc::ZeroVector, "cannot normalize a zero-length vector");
    return v / n;
}

inline double clamp_unit(double c) { return std::clamp(c, -1.0, 1.0); }

// Reduces an angle into [0, 2pi).
inline double wrap_two_pi(double angle)
{
    double w = std::fmod(angle, kTwoPi);
    if (w < 0.0)
        w += kTwoPi;
    if (w >= kTwoPi)
        w -= kTwoPi;
    return w;
}

// Reduces an angle into (-pi, pi].
inline double wrap_pi(double angle)
{
    double w = wrap_two_pi(angle);
    return w > kPi ? w - kTwoPi : w;
}

class AnglePair
{
public:
    AnglePair() = default;

    // Azimuth is reduced modulo 2pi; elevations outside [-pi/2, pi/2] are rejected.
    AnglePair(double azimuth, double elevation)
    {
        constexpr double slack = 1e-12;
        if (!(elevation >= -kHalfPi - slack && elevation <= kHalfPi + slack))
            throw Error(Errc::OutOfRange, "elevation " + std::to_string(elevation) + " outside [-pi/2, pi/2]");
        azimuth_ = wrap_two_pi(azimuth);
        elevation_ = std::clamp(elevation, -kHalfPi, kHalfPi);
    }

    double azimuth() const { return azimuth_; }
    double elevation() const { return elevation_; }

private:
    double azimuth_ = 0.0;
    double elevation_ = 0.0;
};

// Unit direction for arbitrary (azimuth, elevation); elevation need not be reduced.
inline Vector3 direction(double azimuth, double elevation)
{
    const double ce = std::cos(elevation);
    return {ce * std::cos(azimuth), ce * std::sin(azimuth), std::sin(elevation)};
}

struct Spherical
{
    AnglePair angles;
    double length = 0.0;
};

inline Spherical cart_to_sph(const Vector3 &v)
{
    const double r = v.norm();
    if (r < kZeroVectorTolerance)
        throw Error(Errc::ZeroVector, "cart_to_sph of a zero vector");
    // atan2 form of asin(z / r): same value, better conditioned near the poles.
    const double el = std::atan2(v.z, std::hypot(v.x, v.y));
    return {AnglePair(std::atan2(v.y, v.x), el), r};
}

inline Vector3 sph_to_cart(const AnglePair &a, double r)
{
    if (r < 0.0)
        throw Error(Errc::OutOfRange, "negative radius");
    return direction(a.azimuth(), a.elevation()) * r;
}

// Angle between two directions given by their spherical angles, in [0, pi].
inline double angle_between(const AnglePair &x, const AnglePair &y)
{
    const double c = std::cos(x.elevation()) * std::cos(y.elevation()) * std::cos(x.azimuth() - y.azimuth()) +
                     std::sin(x.elevation()) * std::sin(y.elevation());
    return std::acos(clamp_unit(c));
}

inline constexpr double kSingularTolerance = 1e-9;

// Row-major 3x3 matrix. Columns hold the local axes expressed in GCS, so
// p_gcs = M * p_lcs and p_lcs = M^-1 * p_gcs.
class FrameMatrix
{
public:
    using Rows = std::array<std::array<double, 3>, 3>;

    constexpr FrameMatrix() : m_{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}} {}
    explicit constexpr FrameMatrix(const Rows &rows) : m_(rows) {}

    constexpr double operator()(int r, int c) const { return m_[r][c]; }
    constexpr const Rows &rows() const { return m_; }

    constexpr double determinant() const
    {
        return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
               m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
               m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
    }

    // Adjugate inverse.
    FrameMatrix inverse() const
    {
        const double det = determinant();
        if (std::abs(det) < kSingularTolerance)
            throw Error(Errc::SingularFrame, "frame matrix is singular (|det| = " + std::to_string(std::abs(det)) + ")");
        const auto &a = m_;
        Rows inv{};
        inv[0][0] = (a[1][1] * a[2][2] - a[1][2] * a[2][1]) / det;
        inv[0][1] = (a[0][2] * a[2][1] - a[0][1] * a[2][2]) / det;
        inv[0][2] = (a[0][1] * a[1][2] - a[0][2] * a[1][1]) / det;
        inv[1][0] = (a[1][2] * a[2][0] - a[1][0] * a[2][2]) / det;
        inv[1][1] = (a[0][0] * a[2][2] - a[0][2] * a[2][0]) / det;
        inv[1][2] = (a[0][2] * a[1][0] - a[0][0] * a[1][2]) / det;
        inv[2][0] = (a[1][0] * a[2][1] - a[1][1] * a[2][0]) / det;
        inv[2][1] = (a[0][1] * a[2][0] - a[0][0] * a[2][1]) / det;
        inv[2][2] = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / det;
        return FrameMatrix(inv);
    }

    constexpr Vector3 operator*(const Vector3 &v) const
    {
        return {m_[0][0] * v.x + m_[0][1] * v.y + m_[0][2] * v.z,
                m_[1][0] * v.x + m_[1][1] * v.y + m_[1][2] * v.z,
                m_[2][0] * v.x + m_[2][1] * v.y + m_[2][2] * v.z};
    }

    constexpr FrameMatrix operator*(const FrameMatrix &o) const
    {
        Rows r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r[i][j] = m_[i][0] * o.m_[0][j] + m_[i][1] * o.m_[1][j] + m_[i][2] * o.m_[2][j];
        return FrameMatrix(r);
    }

private:
    Rows m_;
};

// Orientation of the LED array: direction of a row (beta_V) and of a column (beta_H).
// Defaults put rows along +y and columns along +z, so elements face +x.
struct ArrayOrientation
{
    double row_azimuth = kHalfPi;     // beta_{V,A}
    double row_elevation = 0.0;       // beta_{V,E}
    double column_azimuth = kPi;      // beta_{H,A}
    double column_elevation = kHalfPi; // beta_{H,E}

    bool operator==(const ArrayOrientation &) const = default;
};

// Transition matrix from GCS to LCS_11. Column 0 is the element normal (row x column),
// column 1 the row direction and column 2 the column direction.
inline FrameMatrix gcs_to_lcs11(const ArrayOrientation &o)
{
    const double cVE = std::cos(o.row_elevation), sVE = std::sin(o.row_elevation);
    const double cVA = std::cos(o.row_azimuth), sVA = std::sin(o.row_azimuth);
    const double cHE = std::cos(o.column_elevation), sHE = std::sin(o.column_elevation);
    const double cHA = std::cos(o.column_azimuth), sHA = std::sin(o.column_azimuth);

    const FrameMatrix m({{{cVE * sVA * sHE - sVE * cHE * sHA, cVE * cVA, cHE * cHA},
                          {sVE * cHE * cHA - cVE * cVA * sHE, cVE * sVA, cHE * sHA},
                          {cVE * cHE * std::sin(o.column_azimuth - o.row_azimuth), sVE, sHE}}});
    if (std::abs(m.determinant()) < kSingularTolerance)
        throw Error(Errc::SingularFrame, "array row and column directions are parallel");
    return m;
}

// Transition matrix from GCS to LCS_PD for a top-PD normal at (azimuth, elevation).
// Orthonormal: columns are (sinA, -cosA, 0), (sinE cosA, sinE sinA, -cosE) and the normal.
inline FrameMatrix gcs_to_lcs_pd(double azimuth, double elevation)
{
    const double cE = std::cos(elevation), sE = std::sin(elevation);
    const double cA = std::cos(azimuth), sA = std::sin(azimuth);
    return FrameMatrix({{{sA, sE * cA, cE * cA},
                         {-cA, sE * sA, cE * sA},
                         {0.0, -cE, sE}}});
}

struct ArrayLayout
{
    int rows = 4;                 // M_I
    int cols = 4;                 // M_J
    double row_spacing = 1.0;     // delta_V: between neighbours within a row (column index step)
    double column_spacing = 1.0;  // delta_H: between neighbours within a column (row index step)
    ArrayOrientation orientation;

    bool operator==(const ArrayLayout &) const = default;

    void validate() const
    {
        if (rows < 1 || cols < 1)
            throw Error(Errc::InvalidArgument, "LED array needs at least one row and one column");
        if (!(row_spacing > 0.0) || !(column_spacing > 0.0))
            throw Error(Errc::InvalidArgument, "LED spacings must be positive");
    }
};

// GCS position of element (row, col); indices are zero-based, (0, 0) is L11.
inline Vector3 led_position(int row, int col, const ArrayLayout &layout)
{
    const auto &o = layout.orientation;
    const double dv = col * layout.row_spacing;
    const double dh = row * layout.column_spacing;
    return {dv * std::cos(o.row_elevation) * std::cos(o.row_azimuth) + dh * std::cos(o.column_elevation) * std::cos(o.column_azimuth),
            dv * std::cos(o.row_elevation) * std::sin(o.row_azimuth) + dh * std::cos(o.column_elevation) * std::sin(o.column_azimuth),
            dv * std::sin(o.row_elevation) + dh * std::sin(o.column_elevation)};
}

// Cached GCS <-> LCS transforms of one array.
class ArrayFrame
{
public:
    ArrayFrame() : ArrayFrame(ArrayLayout{}) {}

    explicit ArrayFrame(const ArrayLayout &layout)
        : layout_(layout), to_gcs_(gcs_to_lcs11(layout.orientation)), to_lcs_(to_gcs_.inverse())
    {
        layout_.validate();
    }

    const ArrayLayout &layout() const { return layout_; }
    const FrameMatrix &lcs11_to_gcs() const { return to_gcs_; }
    const FrameMatrix &gcs_to_lcs() const { return to_lcs_; }

    // Coordinates of a GCS point in LCS_ij: rotate into LCS_11, then translate.
    Vector3 to_element_lcs(const Vector3 &p_gcs, int row, int col) const
    {
        Vector3 local = to_lcs_ * p_gcs;
        local.y -= col * layout_.row_spacing;
        local.z -= row * layout_.column_spacing;
        return local;
    }

    AnglePair element_angles(const Vector3 &p_gcs, int row, int col) const
    {
        return cart_to_sph(to_element_lcs(p_gcs, row, col)).angles;
    }

private:
    ArrayLayout layout_;
    FrameMatrix to_gcs_;
    FrameMatrix to_lcs_;
};

// Departure angles (elevation, azimuth in LCS_ij) of the ray from element (row, col) to p.
inline AnglePair point_to_lcs_ij(const Vector3 &p_gcs, int row, int col, const ArrayLayout &layout)
{
    if (row < 0 || row >= layout.rows || col < 0 || col >= layout.cols)
        throw Error(Errc::OutOfRange, "LED element index out of range");
    return ArrayFrame(layout).element_angles(p_gcs, row, col);
}

// Photodiode arrangement and its rotation. The top PD normal at t0 is (azimuth, elevation).
struct ReceiverAttitude
{
    int num_pd = 1;                  // N_PD: 1 top PD + N_PD - 1 side PDs
    double pd_inclination = kPi / 4; // theta_PD
    double azimuth = kPi;            // beta_A^R
    double elevation = 0.0;          // beta_E^R
    double azimuth_rate = 0.0;       // omega_A^R, rad/s
    double elevation_rate = 0.0;     // omega_E^R, rad/s

    bool operator==(const ReceiverAttitude &) const = default;

    void validate() const
    {
        if (num_pd < 1)
            throw Error(Errc::InvalidAdr, "receiver needs at least one photodiode");
        if (num_pd > 1 && !(pd_inclination > 0.0 && pd_inclination < kHalfPi))
            throw Error(Errc::InvalidAdr, "side-PD inclination must lie in (0, pi/2)");
    }
};

// GCS spherical angles of every PD normal at t0; index 0 is the top PD.
inline std::vector<AnglePair> adr_pd_initial_angles(const ReceiverAttitude &rx)
{
    rx.validate();
    std::vector<AnglePair> out;
    out.reserve(rx.num_pd);
    out.emplace_back(rx.azimuth, std::clamp(rx.elevation, -kHalfPi, kHalfPi));
    if (rx.num_pd == 1)
        return out;

    const FrameMatrix m = gcs_to_lcs_pd(rx.azimuth, rx.elevation);
    const double gamma = kHalfPi - rx.pd_inclination;
    for (int p = 1; p < rx.num_pd; ++p)
    {
        const double omega = 2.0 * (p - 1) * kPi / (rx.num_pd - 1);
        const Vector3 local{std::cos(gamma) * std::cos(omega), std::cos(gamma) * std::sin(omega), std::sin(gamma)};
        out.push_back(cart_to_sph(m * local).angles);
    }
    return out;
}

// Unit normals of all PDs at time t. Every PD's GCS angles advance linearly with the
// receiver's rotation rates.
inline std::vector<Vector3> adr_pd_normals(const ReceiverAttitude &rx, double t)
{
    std::vector<Vector3> normals;
    for (const auto &a : adr_pd_initial_angles(rx))
        normals.push_back(direction(a.azimuth() + rx.azimuth_rate * t, a.elevation() + rx.elevation_rate * t));
    return normals;
}

inline constexpr double kDegenerateNormalTolerance = 1e-12;

// Equivalent normal of a cluster centred at distance d and angles (phi_A, phi_E) from L11:
// the unit vector through the centre, perpendicular to the L11-Rx axis (+x), pointing at the axis.
inline Vector3 cluster_equivalent_normal(double distance, double azimuth, double elevation)
{
    const double num_az = distance * std::cos(elevation) * std::sin(azimuth);
    const double num_el = distance * std::sin(elevation);
    // Closed form of sqrt((d cosE)^2 + d_tmp^2 - 2 d cosE d_tmp cosA) with d_tmp = d cosA cosE.
    const double lateral = std::abs(num_az);
    if (std::hypot(num_az, num_el) <= kDegenerateNormalTolerance * std::max(1.0, std::abs(distance)))
        throw Error(Errc::DegenerateNormal, "cluster centre lies on the L11-Rx axis");

    // The azimuth denominator d_tmp - d cosE cosA vanishes: arctan(num / 0) = sign(num) pi/2.
    double beta_a = 0.0;
    if (num_az > 0.0)
        beta_a = wrap_two_pi(kTwoPi - kHalfPi);
    else if (num_az < 0.0)
        beta_a = wrap_two_pi(kTwoPi + kHalfPi);
    const double beta_e = -std::atan2(num_el, lateral);
    return direction(beta_a, beta_e);
}

// Same construction for an arbitrary centre and axis: unit vector from the centre to its
// perpendicular foot on the line through axis_from and axis_to.
inline Vector3 perpendicular_normal(const Vector3 &centre, const Vector3 &axis_from, const Vector3 &axis_to)
{
    const Vector3 u = normalized(axis_to - axis_from);
    const Vector3 rel = centre - axis_from;
    const Vector3 foot = axis_from + u * dot(rel, u);
    const Vector3 toward = foot - centre;
    if (toward.norm() <= kDegenerateNormalTolerance * std::max(1.0, rel.norm()))
        throw Error(Errc::DegenerateNormal, "cluster centre lies on the L11-Rx axis");
    return normalized(toward);
}

} // namespace vlcsim
