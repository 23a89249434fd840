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

// Scenario parameters, random cluster/scatterer generation, cluster birth-death over
// the LED array and time snapshots of a realized scene.

#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vlcsim/error.hpp"
#include "vlcsim/geometry.hpp"
#include "vlcsim/optics.hpp"
#include "vlcsim/random.hpp"
#include "vlcsim/spectra.hpp"

namespace vlcsim {

struct LedArray
{
    ArrayLayout layout;
    RadiationPattern pattern = RadiationPattern::lambertian(1.0);
    double tx_power = 1.0;              // W per element
    std::vector<double> element_powers; // optional row-major override, rows * cols entries

    bool operator==(const LedArray &) const = default;

    double power(int row, int col) const
    {
        return element_powers.empty() ? tx_power : element_powers[static_cast<std::size_t>(row * layout.cols + col)];
    }

    void validate() const
    {
        layout.validate();
        if (!(tx_power >= 0.0))
            throw Error(Errc::OutOfRange, "transmit power must be non-negative");
        if (!element_powers.empty())
        {
            if (element_powers.size() != static_cast<std::size_t>(layout.rows * layout.cols))
                throw Error(Errc::InvalidArgument, "element_powers needs rows * cols entries");
            for (double p : element_powers)
                if (!(p >= 0.0))
                    throw Error(Errc::OutOfRange, "transmit power must be non-negative");
        }
    }
};

struct ReceiverConfig
{
    ReceiverAttitude attitude;
    double area = 1e-4;      // A_R, m^2
    RxOptics optics;
    double distance = 2.0;   // D: initial position is (D, 0, 0)
    double speed = 0.0;      // v^R, m/s
    double travel_azimuth = 0.0;
    double travel_elevation = 0.0;

    bool operator==(const ReceiverConfig &) const = default;

    Vector3 initial_position() const { return {distance, 0.0, 0.0}; }
    Vector3 velocity() const { return direction(travel_azimuth, travel_elevation) * speed; }

    void validate() const
    {
        attitude.validate();
        optics.validate();
        if (!(area > 0.0))
            throw Error(Errc::OutOfRange, "receiver area must be positive");
        if (!(distance > 0.0))
            throw Error(Errc::OutOfRange, "Tx-Rx distance must be positive");
        if (!(speed >= 0.0))
            throw Error(Errc::OutOfRange, "receiver speed must be non-negative");
    }
};

struct EvolutionParams
{
    double birth_rate = 80.0;         // lambda_B, 1/m
    double death_rate = 4.0;          // lambda_D, 1/m
    double correlation_factor = 10.0; // D_c^A, m
    // When > 0, the birth-death process is skipped: this many clusters, visible everywhere.
    int fixed_cluster_count = 0;

    bool operator==(const EvolutionParams &) const = default;

    int initial_count() const { return static_cast<int>(std::lround(birth_rate / death_rate)); }

    void validate() const
    {
        if (fixed_cluster_count < 0)
            throw Error(Errc::OutOfRange, "fixed cluster count must be non-negative");
        if (fixed_cluster_count == 0 && !(birth_rate > 0.0 && death_rate > 0.0 && correlation_factor > 0.0))
            throw Error(Errc::OutOfRange, "birth rate, death rate and correlation factor must be positive");
    }
};

struct ClusterParams
{
    double tx_mean_azimuth = 0.0;
    double tx_mean_elevation = 0.0;
    double rx_mean_azimuth = kPi;
    double rx_mean_elevation = 0.0;
    double azimuth_std = deg_to_rad(40.0);
    double elevation_std = deg_to_rad(40.0);
    std::optional<double> distance_mean; // exponential mean; D/2 when unset
    double sigma_ds = 1.0;
    double sigma_as = 1.0;
    double sigma_es = 1.0;
    int scatterers = 100;  // M_n
    double area = 1.0;     // A_c,eff, m^2
    double sb_ratio = 0.9; // eta_SB
    double speed = 0.0;
    double travel_azimuth = 0.0;
    double travel_elevation = 0.0;

    bool operator==(const ClusterParams &) const = default;

    void validate() const
    {
        if (!(azimuth_std >= 0.0 && elevation_std >= 0.0))
            throw Error(Errc::OutOfRange, "angle standard deviations must be non-negative");
        if (distance_mean && !(*distance_mean > 0.0))
            throw Error(Errc::OutOfRange, "cluster distance mean must be positive");
        if (!(sigma_ds >= 0.0 && sigma_as >= 0.0 && sigma_es >= 0.0))
            throw Error(Errc::OutOfRange, "scatterer spreads must be non-negative");
        if (scatterers < 1)
            throw Error(Errc::OutOfRange, "clusters need at least one scatterer");
        if (!(area > 0.0))
            throw Error(Errc::OutOfRange, "cluster area must be positive");
        if (!(sb_ratio >= 0.0 && sb_ratio <= 1.0))
            throw Error(Errc::OutOfRange, "SB ratio must lie in [0, 1]");
        if (!(speed >= 0.0))
            throw Error(Errc::OutOfRange, "cluster speed must be non-negative");
    }
};

struct Material
{
    std::string name;
    SpectralCurve reflectance;
    double weight = 1.0;

    bool operator==(const Material &) const = default;
};

inline std::vector<Material> default_materials()
{
    return {{"floor", bundled_reflectance("floor"), 0.3},
            {"pine_wood", bundled_reflectance("pine_wood"), 0.2},
            {"plaster", bundled_reflectance("plaster"), 0.4},
            {"plate_glass", bundled_reflectance("plate_glass"), 0.1}};
}

struct SpectralParams
{
    std::string led = "white"; // label only; psd holds the data
    SpectralCurve psd = bundled_led_psd("white");
    std::vector<Material> materials = default_materials();

    bool operator==(const SpectralParams &) const = default;

    void validate() const
    {
        if (materials.empty())
            throw Error(Errc::InvalidArgument, "at least one material is required");
        double total = 0.0;
        for (const auto &m : materials)
        {
            if (!(m.weight >= 0.0))
                throw Error(Errc::OutOfRange, "material weights must be non-negative");
            total += m.weight;
        }
        if (!(total > 0.0))
            throw Error(Errc::OutOfRange, "material weights sum to zero");
    }
};

struct ScenarioParams
{
    LedArray array;
    ReceiverConfig receiver;
    EvolutionParams evolution;
    ClusterParams clusters;
    SpectralParams spectra;

    bool operator==(const ScenarioParams &) const = default;

    double distance_mean() const { return clusters.distance_mean.value_or(receiver.distance / 2.0); }

    void validate() const
    {
        array.validate();
        receiver.validate();
        evolution.validate();
        clusters.validate();
        spectra.validate();
    }
};

// ---------- clusters and scatterers ----------

enum class ClusterSide { Tx, Rx };

struct Cluster
{
    ClusterSide side = ClusterSide::Tx;
    double azimuth = 0.0;   // seen from the anchor
    double elevation = 0.0;
    double distance = 1.0;
    Vector3 anchor;         // L11 for Tx-side clusters, the initial Rx position for Rx-side ones
    Vector3 centre;
    Vector3 normal;         // equivalent normal
    Vector3 velocity;
    double sigma_ds = 0.0, sigma_as = 0.0, sigma_es = 0.0;
    int scatterer_count = 1;
    double area = 1.0;
    int material = 0;
    double reflectance = 0.0; // Gamma

    double scatterer_area() const { return area / scatterer_count; }
};

struct Scatterer
{
    Vector3 position; // at t0
    double area = 0.0;
};

// Gaussian angle pair folded onto the sphere: elevations past a pole continue over it.
inline AnglePair fold_angles(double azimuth, double elevation)
{
    double el = wrap_pi(elevation);
    double az = azimuth;
    if (el > kHalfPi)
    {
        el = kPi - el;
        az += kPi;
    }
    else if (el < -kHalfPi)
    {
        el = -kPi - el;
        az += kPi;
    }
    return AnglePair(az, el);
}

inline std::vector<double> material_reflectances(const SpectralParams &spectra)
{
    std::vector<double> gammas;
    for (const auto &m : spectra.materials)
        gammas.push_back(effective_reflectance(spectra.psd, m.reflectance));
    return gammas;
}

inline constexpr int kMaxClusterAttempts = 100;

// Draws one cluster's angles, distance and material; clusters whose centre falls on the
// L11-Rx axis are redrawn.
inline Cluster sample_cluster(const ScenarioParams &p, ClusterSide side, const std::vector<double> &gammas, Engine &rng)
{
    const auto &cp = p.clusters;
    const bool tx = side == ClusterSide::Tx;
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::exponential_distribution<double> expo(1.0 / p.distance_mean());
    std::vector<double> weights;
    for (const auto &m : p.spectra.materials)
        weights.push_back(m.weight);
    std::discrete_distribution<int> pick(weights.begin(), weights.end());

    Cluster c;
    c.side = side;
    c.anchor = tx ? Vector3{} : p.receiver.initial_position();
    c.velocity = direction(cp.travel_azimuth, cp.travel_elevation) * cp.speed;
    c.sigma_ds = cp.sigma_ds;
    c.sigma_as = cp.sigma_as;
    c.sigma_es = cp.sigma_es;
    c.scatterer_count = cp.scatterers;
    c.area = cp.area;

    for (int attempt = 0; attempt < kMaxClusterAttempts; ++attempt)
    {
        const double y_e = gauss(rng);
        const double y_a = gauss(rng);
        const double el = cp.elevation_std * y_e + (tx ? cp.tx_mean_elevation : cp.rx_mean_elevation);
        const double az = cp.azimuth_std * y_a + (tx ? cp.tx_mean_azimuth : cp.rx_mean_azimuth);
        const AnglePair a = fold_angles(az, el);
        c.azimuth = a.azimuth();
        c.elevation = a.elevation();
        c.distance = expo(rng);
        c.material = pick(rng);
        c.reflectance = gammas.at(static_cast<std::size_t>(c.material));
        c.centre = c.anchor + direction(c.azimuth, c.elevation) * c.distance;
        try
        {
            c.normal = perpendicular_normal(c.centre, Vector3{}, p.receiver.initial_position());
            return c;
        }
        catch (const Error &e)
        {
            if (e.code() != Errc::DegenerateNormal)
                throw;
        }
    }
    throw Error(Errc::DegenerateNormal, "cluster centre kept falling on the L11-Rx axis");
}

// M_n scatterers: Gaussian offsets (x', y', z') rotated by the cluster's elevation then
// azimuth, shifted out to the cluster distance and placed relative to the anchor.
inline std::vector<Scatterer> generate_scatterers(const Cluster &c, Engine &rng)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double ca = std::cos(c.azimuth), sa = std::sin(c.azimuth);
    const double ce = std::cos(c.elevation), se = std::sin(c.elevation);
    std::vector<Scatterer> out;
    out.reserve(static_cast<std::size_t>(c.scatterer_count));
    for (int m = 0; m < c.scatterer_count; ++m)
    {
        const double x = c.sigma_ds * gauss(rng) + c.distance;
        const double y = c.sigma_as * gauss(rng);
        const double z = c.sigma_es * gauss(rng);
        // R_y(elevation) then R_z(azimuth)
        const double x1 = ce * x - se * z;
        const double z1 = se * x + ce * z;
        const Vector3 local{ca * x1 - sa * y, sa * x1 + ca * y, z1};
        out.push_back({c.anchor + local, c.scatterer_area()});
    }
    return out;
}

// ---------- birth-death over the array ----------

class VisibilityTensor
{
public:
    VisibilityTensor() = default;
    VisibilityTensor(int rows, int cols, int clusters)
        : rows_(rows), cols_(cols), clusters_(clusters), bits_(static_cast<std::size_t>(rows * cols * clusters), 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int clusters() const { return clusters_; }

    bool visible(int row, int col, int cluster) const { return bits_[index(row, col, cluster)] != 0; }
    void set(int row, int col, int cluster, bool v) { bits_[index(row, col, cluster)] = v ? 1 : 0; }

    int count(int row, int col) const
    {
        int n = 0;
        for (int c = 0; c < clusters_; ++c)
            n += visible(row, col, c);
        return n;
    }

    std::vector<int> visible_clusters(int row, int col) const
    {
        std::vector<int> out;
        for (int c = 0; c < clusters_; ++c)
            if (visible(row, col, c))
                out.push_back(c);
        return out;
    }

    bool operator==(const VisibilityTensor &) const = default;

private:
    std::size_t index(int row, int col, int cluster) const
    {
        return (static_cast<std::size_t>(row) * cols_ + col) * clusters_ + cluster;
    }

    int rows_ = 0, cols_ = 0, clusters_ = 0;
    std::vector<std::uint8_t> bits_;
};

// exp(-lambda_B * spacing * cos(elevation) / D_c); cosines below 1e-12 count as 0.
inline double survival_probability(double spacing, double elevation, const EvolutionParams &e)
{
    double c = std::cos(elevation);
    if (std::abs(c) < 1e-12)
        c = 0.0;
    return std::exp(-e.birth_rate * spacing * c / e.correlation_factor);
}

inline double horizontal_survival(const ArrayLayout &a, const EvolutionParams &e)
{
    return survival_probability(a.column_spacing, a.orientation.column_elevation, e);
}

inline double vertical_survival(const ArrayLayout &a, const EvolutionParams &e)
{
    return survival_probability(a.row_spacing, a.orientation.row_elevation, e);
}

// Probability that a cluster seen by element a is still seen by element b along the
// evolution path (down the first column, then along the rows).
inline double remain_probability(const ArrayLayout &a, const EvolutionParams &e, int row_a, int col_a, int row_b, int col_b)
{
    if (e.fixed_cluster_count > 0)
        return 1.0;
    const double ph = horizontal_survival(a, e), pv = vertical_survival(a, e);
    if (row_a == row_b)
        return std::pow(pv, std::abs(col_a - col_b));
    return std::pow(pv, col_a) * std::pow(ph, std::abs(row_a - row_b)) * std::pow(pv, col_b);
}

inline VisibilityTensor evolve_visibility(const ArrayLayout &layout, const EvolutionParams &e, Engine &rng)
{
    if (e.fixed_cluster_count > 0)
    {
        VisibilityTensor v(layout.rows, layout.cols, e.fixed_cluster_count);
        for (int i = 0; i < layout.rows; ++i)
            for (int j = 0; j < layout.cols; ++j)
                for (int n = 0; n < e.fixed_cluster_count; ++n)
                    v.set(i, j, n, true);
        return v;
    }

    const double mean_count = e.birth_rate / e.death_rate;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int next_id = e.initial_count();

    const auto step = [&](const std::vector<int> &from, double survive) {
        std::vector<int> to;
        for (int id : from)
            if (unit(rng) < survive)
                to.push_back(id);
        const double births = mean_count * (1.0 - survive);
        if (births > 0.0)
        {
            std::poisson_distribution<int> poisson(births);
            for (int k = poisson(rng); k > 0; --k)
                to.push_back(next_id++);
        }
        return to;
    };

    const double ph = horizontal_survival(layout, e), pv = vertical_survival(layout, e);
    std::vector<std::vector<int>> sets(static_cast<std::size_t>(layout.rows * layout.cols));
    auto at = [&](int i, int j) -> std::vector<int> & { return sets[static_cast<std::size_t>(i * layout.cols + j)]; };
    for (int n = 0; n < next_id; ++n)
        at(0, 0).push_back(n);
    for (int i = 1; i < layout.rows; ++i)
        at(i, 0) = step(at(i - 1, 0), ph);
    for (int i = 0; i < layout.rows; ++i)
        for (int j = 1; j < layout.cols; ++j)
            at(i, j) = step(at(i, j - 1), pv);

    VisibilityTensor v(layout.rows, layout.cols, next_id);
    for (int i = 0; i < layout.rows; ++i)
        for (int j = 0; j < layout.cols; ++j)
            for (int n : at(i, j))
                v.set(i, j, n, true);
    return v;
}

// Number of Rx-side clusters for a DB share of 1 - eta; the guard keeps 20 * (1 - 0.9) at 2.
inline int db_cluster_count(int total, double sb_ratio)
{
    return static_cast<int>(std::ceil(total * (1.0 - sb_ratio) - 1e-9));
}

// partner[n] is the Rx-side cluster paired with Tx-side cluster n, or -1 for SB paths.
// DB clusters are a random subset; pairing cycles through the rx_count Rx-side clusters.
inline std::vector<int> split_sb_db(int total, double sb_ratio, int rx_count, Engine &rng)
{
    std::vector<int> partner(static_cast<std::size_t>(total), -1);
    const int db = std::min(total, db_cluster_count(total, sb_ratio));
    if (db == 0 || rx_count == 0)
        return partner;
    std::vector<int> order(static_cast<std::size_t>(total));
    for (int n = 0; n < total; ++n)
        order[static_cast<std::size_t>(n)] = n;
    for (int k = 0; k < db; ++k) // partial Fisher-Yates
    {
        std::uniform_int_distribution<int> pick(k, total - 1);
        std::swap(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(pick(rng))]);
    }
    std::sort(order.begin(), order.begin() + db);
    for (int k = 0; k < db; ++k)
        partner[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k % rx_count;
    return partner;
}

// ---------- realized scene ----------

struct Scene
{
    std::shared_ptr<const ScenarioParams> params;
    std::uint64_t seed = 0;
    std::uint64_t realization = 0;
    ArrayFrame frame;
    std::vector<Vector3> leds; // row-major
    std::vector<AnglePair> pd_angles;
    std::vector<double> material_gammas;
    VisibilityTensor visibility;
    std::vector<Cluster> tx_clusters;
    std::vector<Cluster> rx_clusters;
    std::vector<std::vector<Scatterer>> tx_scatterers;
    std::vector<std::vector<Scatterer>> rx_scatterers;
    std::vector<int> partner;

    const Vector3 &led(int row, int col) const { return leds[static_cast<std::size_t>(row * frame.layout().cols + col)]; }
};

inline Scene build_scene(std::shared_ptr<const ScenarioParams> params, std::uint64_t seed, std::uint64_t realization)
{
    const ScenarioParams &p = *params;
    p.validate();
    Scene s;
    s.params = params;
    s.seed = seed;
    s.realization = realization;
    s.frame = ArrayFrame(p.array.layout);
    for (int i = 0; i < p.array.layout.rows; ++i)
        for (int j = 0; j < p.array.layout.cols; ++j)
            s.leds.push_back(led_position(i, j, p.array.layout));
    s.pd_angles = adr_pd_initial_angles(p.receiver.attitude);
    s.material_gammas = material_reflectances(p.spectra);

    Engine evo = make_stream(seed, realization, StreamPurpose::Evolution);
    s.visibility = evolve_visibility(p.array.layout, p.evolution, evo);

    const int total = s.visibility.clusters();
    for (int n = 0; n < total; ++n)
    {
        Engine rng = make_stream(seed, realization, StreamPurpose::TxCluster, static_cast<std::uint64_t>(n));
        s.tx_clusters.push_back(sample_cluster(p, ClusterSide::Tx, s.material_gammas, rng));
        Engine srng = make_stream(seed, realization, StreamPurpose::TxScatterers, static_cast<std::uint64_t>(n));
        s.tx_scatterers.push_back(generate_scatterers(s.tx_clusters.back(), srng));
    }

    const int rx_count = db_cluster_count(total, p.clusters.sb_ratio);
    for (int k = 0; k < rx_count; ++k)
    {
        Engine rng = make_stream(seed, realization, StreamPurpose::RxCluster, static_cast<std::uint64_t>(k));
        s.rx_clusters.push_back(sample_cluster(p, ClusterSide::Rx, s.material_gammas, rng));
        Engine srng = make_stream(seed, realization, StreamPurpose::RxScatterers, static_cast<std::uint64_t>(k));
        s.rx_scatterers.push_back(generate_scatterers(s.rx_clusters.back(), srng));
    }

    Engine pair = make_stream(seed, realization, StreamPurpose::Pairing);
    s.partner = split_sb_db(total, p.clusters.sb_ratio, rx_count, pair);
    return s;
}

inline Scene build_scene(const ScenarioParams &params, std::uint64_t seed, std::uint64_t realization)
{
    return build_scene(std::make_shared<const ScenarioParams>(params), seed, realization);
}

// Positions and orientations at time t. Scatterer positions are evaluated on demand as
// S(t0) + v t, so advancing a snapshot by dt equals taking the snapshot at t + dt.
class SceneSnapshot
{
public:
    SceneSnapshot(const Scene &scene, double t) : scene_(&scene), t_(t)
    {
        const auto &rx = scene.params->receiver;
        rx_position_ = rx.initial_position() + rx.velocity() * t;
        for (const auto &a : scene.pd_angles)
            pd_normals_.push_back(direction(a.azimuth() + rx.attitude.azimuth_rate * t, a.elevation() + rx.attitude.elevation_rate * t));
    }

    const Scene &scene() const { return *scene_; }
    double time() const { return t_; }
    const Vector3 &rx_position() const { return rx_position_; }
    const std::vector<Vector3> &pd_normals() const { return pd_normals_; }

    Vector3 tx_scatterer(int cluster, int m) const
    {
        const auto &c = scene_->tx_clusters[static_cast<std::size_t>(cluster)];
        return scene_->tx_scatterers[static_cast<std::size_t>(cluster)][static_cast<std::size_t>(m)].position + c.velocity * t_;
    }

    Vector3 rx_scatterer(int cluster, int m) const
    {
        const auto &c = scene_->rx_clusters[static_cast<std::size_t>(cluster)];
        return scene_->rx_scatterers[static_cast<std::size_t>(cluster)][static_cast<std::size_t>(m)].position + c.velocity * t_;
    }

private:
    const Scene *scene_;
    double t_;
    Vector3 rx_position_;
    std::vector<Vector3> pd_normals_;
};

inline SceneSnapshot positions_at(const Scene &scene, double t)
{
    if (!(t >= 0.0))
        throw Error(Errc::OutOfRange, "snapshot time must be non-negative");
    return SceneSnapshot(scene, t);
}

inline SceneSnapshot positions_at(const SceneSnapshot &snap, double dt)
{
    return positions_at(snap.scene(), snap.time() + dt);
}

} // namespace vlcsim
