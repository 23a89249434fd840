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

// Channel statistics: transfer function, DC gain and received power, 3-dB bandwidth,
// RMS delay spread, path loss with close-in fitting, and ensemble correlation functions.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "vlcsim/channel.hpp"
#include "vlcsim/error.hpp"
#include "vlcsim/random.hpp"
#include "vlcsim/scene.hpp"

namespace vlcsim {

using Complex = std::complex<double>;

struct FrequencyGrid
{
    double start = 0.0;    // Hz
    double stop = 200e6;   // Hz
    int points = 2048;

    bool operator==(const FrequencyGrid &) const = default;

    void validate() const
    {
        if (points < 2 || !(stop > start) || !(start >= 0.0))
            throw Error(Errc::InvalidArgument, "frequency grid needs start >= 0, stop > start and >= 2 points");
    }

    double step() const { return (stop - start) / (points - 1); }
    double at(int k) const { return start + k * step(); }

    std::vector<double> values() const
    {
        std::vector<double> f(static_cast<std::size_t>(points));
        for (int k = 0; k < points; ++k)
            f[static_cast<std::size_t>(k)] = at(k);
        return f;
    }
};

// ---------- transfer function ----------

inline Complex phasor(double f, double tau)
{
    const double a = -kTwoPi * f * tau;
    return {std::cos(a), std::sin(a)};
}

inline Complex ctf_at(const Cir &cir, double f)
{
    if (cir.taps.empty())
        throw Error(Errc::EmptyCir, "transfer function of an empty CIR");
    Complex h{};
    for (const auto &t : cir.taps)
        h += t.power * phasor(f, t.delay);
    return h;
}

inline std::vector<Complex> ctf(const Cir &cir, const std::vector<double> &freqs)
{
    if (cir.taps.empty())
        throw Error(Errc::EmptyCir, "transfer function of an empty CIR");
    std::vector<Complex> h;
    h.reserve(freqs.size());
    for (double f : freqs)
        h.push_back(ctf_at(cir, f));
    return h;
}

// Evaluates H on a uniform grid one frequency at a time by rotating every tap's phasor.
class CtfSweep
{
public:
    CtfSweep(const Cir &cir, const FrequencyGrid &grid) : grid_(grid)
    {
        if (cir.taps.empty())
            throw Error(Errc::EmptyCir, "transfer function of an empty CIR");
        grid.validate();
        const std::size_t n = cir.taps.size();
        p_.resize(n);
        re_.resize(n);
        im_.resize(n);
        sre_.resize(n);
        sim_.resize(n);
        for (std::size_t k = 0; k < n; ++k)
        {
            p_[k] = cir.taps[k].power;
            const Complex z = phasor(grid.start, cir.taps[k].delay);
            const Complex s = phasor(grid.step(), cir.taps[k].delay);
            re_[k] = z.real();
            im_[k] = z.imag();
            sre_[k] = s.real();
            sim_[k] = s.imag();
        }
    }

    int index() const { return k_; }
    double frequency() const { return grid_.at(k_); }

    Complex value() const
    {
        double hr = 0.0, hi = 0.0;
        for (std::size_t k = 0; k < p_.size(); ++k)
        {
            hr += p_[k] * re_[k];
            hi += p_[k] * im_[k];
        }
        return {hr, hi};
    }

    bool next()
    {
        if (k_ + 1 >= grid_.points)
            return false;
        ++k_;
        for (std::size_t k = 0; k < p_.size(); ++k)
        {
            const double r = re_[k] * sre_[k] - im_[k] * sim_[k];
            const double i = re_[k] * sim_[k] + im_[k] * sre_[k];
            re_[k] = r;
            im_[k] = i;
        }
        return true;
    }

private:
    FrequencyGrid grid_;
    int k_ = 0;
    std::vector<double> p_, re_, im_, sre_, sim_;
};

inline std::vector<Complex> ctf(const Cir &cir, const FrequencyGrid &grid)
{
    CtfSweep sweep(cir, grid);
    std::vector<Complex> h{sweep.value()};
    while (sweep.next())
        h.push_back(sweep.value());
    return h;
}

inline double dc_gain(const Cir &cir) { return cir.dc_gain(); }

// ---------- received power ----------

// P_R of every element (row-major) for one PD, plus their sum.
struct ReceivedPower
{
    std::vector<double> per_element;
    double total = 0.0;
};

inline ReceivedPower received_power(const ChannelMatrix &h, const LedArray &array, int pd)
{
    ReceivedPower r;
    for (int i = 0; i < h.rows; ++i)
        for (int j = 0; j < h.cols; ++j)
        {
            const double pt = array.power(i, j);
            if (!(pt >= 0.0))
                throw Error(Errc::OutOfRange, "transmit power must be non-negative");
            r.per_element.push_back(pt * h.at(i, j, pd).dc_gain());
        }
    for (double v : r.per_element)
        r.total += v;
    return r;
}

// Total received power of one PD at a snapshot, without building the channel matrix.
inline double total_received_power(const SceneSnapshot &snap, int pd, bool with_los = true, bool with_nlos = true)
{
    const auto &array = snap.scene().params->array;
    double total = 0.0;
    for (int i = 0; i < array.layout.rows; ++i)
        for (int j = 0; j < array.layout.cols; ++j)
            total += array.power(i, j) * link_dc_gain(snap, i, j, pd, with_los, with_nlos);
    return total;
}

// ---------- 3-dB bandwidth ----------

inline constexpr double kBandwidthRelativeTolerance = 1e-6;

// Smallest f on the grid where |H(f)|^2 <= |H(0)|^2 / 2, refined by bisection;
// nullopt when |H| stays above the threshold up to the grid maximum.
inline std::optional<double> bandwidth_3db(const Cir &cir, const FrequencyGrid &grid)
{
    if (cir.taps.empty())
        throw Error(Errc::EmptyCir, "bandwidth of an empty CIR");
    const double h0 = cir.dc_gain();
    if (!(h0 > 0.0))
        return std::nullopt;
    const double threshold = 0.5 * h0 * h0;
    double peak = 0.0;
    for (const auto &t : cir.taps)
        peak = std::max(peak, t.power);
    // |H(f)| >= peak - (h0 - peak) everywhere
    if (peak - (h0 - peak) > std::sqrt(0.5) * h0)
        return std::nullopt;

    CtfSweep sweep(cir, grid);
    double prev_f = sweep.frequency();
    if (std::norm(sweep.value()) <= threshold)
        return prev_f;
    while (sweep.next())
    {
        const double f = sweep.frequency();
        if (std::norm(sweep.value()) <= threshold)
        {
            double lo = prev_f, hi = f;
            while (hi - lo > kBandwidthRelativeTolerance * hi)
            {
                const double mid = 0.5 * (lo + hi);
                (std::norm(ctf_at(cir, mid)) <= threshold ? hi : lo) = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev_f = f;
    }
    return std::nullopt;
}

// ---------- delay spread ----------

inline double mean_delay(const Cir &cir)
{
    double p = 0.0, tp = 0.0;
    for (const auto &t : cir.taps)
    {
        p += t.power;
        tp += t.delay * t.power;
    }
    if (!(p > 0.0))
        throw Error(Errc::ZeroGain, "mean delay of a CIR without power");
    return tp / p;
}

inline double rms_delay_spread(const Cir &cir)
{
    const double mu = mean_delay(cir);
    double p = 0.0, s = 0.0;
    for (const auto &t : cir.taps)
    {
        p += t.power;
        s += (t.delay - mu) * (t.delay - mu) * t.power;
    }
    return std::sqrt(s / p);
}

// ---------- path loss ----------

inline double path_loss_db(double transmitted, double received)
{
    if (!(transmitted > 0.0) || !(received > 0.0))
        throw Error(Errc::NonPositivePower, "path loss needs positive powers");
    return 10.0 * std::log10(transmitted / received);
}

struct PathLossSample
{
    double distance = 0.0; // m
    double pl = 0.0;       // dB
};

struct PathLossFit
{
    double reference_distance = 1.0; // d0, m
    double pl_reference = 0.0;       // PL(d0), dB
    double exponent = 0.0;           // gamma
    std::vector<PathLossSample> samples;
    std::vector<double> residuals;   // dB, sample minus model

    double model(double d) const { return pl_reference + 10.0 * exponent * std::log10(d / reference_distance); }
};

// Close-in model PL(d) = PL(d0) + 10 gamma log10(d / d0), least squares in (10 log10(d/d0), PL).
inline PathLossFit fit_ci(const std::vector<PathLossSample> &samples, double reference_distance = 1.0)
{
    if (!(reference_distance > 0.0))
        throw Error(Errc::InvalidArgument, "reference distance must be positive");
    if (samples.size() < 2)
        throw Error(Errc::DegenerateFit, "close-in fit needs at least two samples");
    const double n = static_cast<double>(samples.size());
    double sx = 0.0, sy = 0.0;
    std::vector<double> xs;
    for (const auto &s : samples)
    {
        if (!(s.distance > 0.0))
            throw Error(Errc::InvalidArgument, "sample distances must be positive");
        xs.push_back(10.0 * std::log10(s.distance / reference_distance));
        sx += xs.back();
        sy += s.pl;
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k)
    {
        sxx += (xs[k] - mx) * (xs[k] - mx);
        sxy += (xs[k] - mx) * (samples[k].pl - my);
    }
    if (!(sxx > 1e-12 * std::max(1.0, mx * mx) * n))
        throw Error(Errc::DegenerateFit, "all sample distances are equal");

    PathLossFit fit;
    fit.reference_distance = reference_distance;
    fit.exponent = sxy / sxx;
    fit.pl_reference = my - fit.exponent * mx;
    fit.samples = samples;
    for (const auto &s : samples)
        fit.residuals.push_back(s.pl - fit.model(s.distance));
    return fit;
}

inline double normal_cdf(double x, double mean, double sd)
{
    return 0.5 * std::erfc(-(x - mean) / (sd * std::sqrt(2.0)));
}

// Kolmogorov-Smirnov distance between the samples and N(mean, sd^2).
inline double ks_distance_normal(std::vector<double> samples, double mean, double sd)
{
    if (samples.empty())
        throw Error(Errc::TooFewSamples, "KS distance of an empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k)
    {
        const double f = sd > 0.0 ? normal_cdf(samples[k], mean, sd) : (samples[k] >= mean ? 1.0 : 0.0);
        d = std::max({d, (static_cast<double>(k) + 1.0) / n - f, f - static_cast<double>(k) / n});
    }
    return d;
}

// Asymptotic 5% critical value of the one-sample KS statistic.
inline double ks_critical_5pct(std::size_t n) { return 1.358 / std::sqrt(static_cast<double>(n)); }

inline constexpr std::size_t kMinShadowingSamples = 30;

struct ShadowingSummary
{
    double mean = 0.0;
    double std_dev = 0.0;
    std::vector<double> sorted;    // residuals, ascending
    std::vector<double> ecdf;      // (k + 1) / n
    double ks_distance = 0.0;
    double ks_critical = 0.0;
    bool gaussian = false;         // ks_distance < ks_critical
};

inline ShadowingSummary shadowing_stats(const PathLossFit &fit)
{
    const auto &r = fit.residuals;
    if (r.size() < kMinShadowingSamples)
        throw Error(Errc::TooFewSamples, "shadowing statistics need at least 30 residuals");
    ShadowingSummary s;
    const double n = static_cast<double>(r.size());
    for (double v : r)
        s.mean += v;
    s.mean /= n;
    double ss = 0.0;
    for (double v : r)
        ss += (v - s.mean) * (v - s.mean);
    s.std_dev = std::sqrt(ss / (n - 1.0));
    s.sorted = r;
    std::sort(s.sorted.begin(), s.sorted.end());
    for (std::size_t k = 0; k < s.sorted.size(); ++k)
        s.ecdf.push_back((static_cast<double>(k) + 1.0) / n);
    if (s.std_dev == 0.0)
    {
        s.ks_distance = 0.0;
    }
    else
    {
        s.ks_distance = ks_distance_normal(r, s.mean, s.std_dev);
    }
    s.ks_critical = ks_critical_5pct(r.size());
    s.gaussian = s.ks_distance < s.ks_critical;
    return s;
}

// ---------- ensembles ----------

// Independent realizations of one scenario. Scenes are either built on demand from
// (params, seed, k) or supplied explicitly.
class Ensemble
{
public:
    Ensemble(std::shared_ptr<const ScenarioParams> params, std::uint64_t seed, int size)
        : params_(std::move(params)), seed_(seed), size_(size)
    {
        if (size < 1)
            throw Error(Errc::InvalidArgument, "ensemble needs at least one realization");
        params_->validate();
    }

    Ensemble(const ScenarioParams &params, std::uint64_t seed, int size)
        : Ensemble(std::make_shared<const ScenarioParams>(params), seed, size) {}

    explicit Ensemble(std::vector<Scene> scenes) : scenes_(std::make_shared<std::vector<Scene>>(std::move(scenes)))
    {
        if (scenes_->empty())
            throw Error(Errc::InvalidArgument, "ensemble needs at least one realization");
        params_ = scenes_->front().params;
        for (const auto &s : *scenes_)
            if (s.params != params_ && !(*s.params == *params_))
                throw Error(Errc::ConfigMismatch, "ensemble runs differ in scenario parameters");
        size_ = static_cast<int>(scenes_->size());
    }

    int size() const { return size_; }
    std::uint64_t seed() const { return seed_; }
    const ScenarioParams &params() const { return *params_; }

    template <typename Fn>
    auto with_scene(int k, Fn &&fn) const
    {
        if (scenes_)
            return fn((*scenes_)[static_cast<std::size_t>(k)]);
        const Scene scene = build_scene(params_, seed_, static_cast<std::uint64_t>(k));
        return fn(scene);
    }

private:
    std::shared_ptr<const ScenarioParams> params_;
    std::shared_ptr<std::vector<Scene>> scenes_;
    std::uint64_t seed_ = 0;
    int size_ = 0;
};

// Evaluates fn(scene) for every realization; results are indexed by realization, so
// the output does not depend on the thread count.
template <typename T>
std::vector<T> map_ensemble(const Ensemble &ensemble, unsigned threads, const std::function<T(const Scene &)> &fn)
{
    std::vector<T> out(static_cast<std::size_t>(ensemble.size()));
    parallel_for(out.size(), threads, [&](std::size_t k) {
        out[k] = ensemble.with_scene(static_cast<int>(k), [&](const Scene &s) { return fn(s); });
    });
    return out;
}

struct MeanEstimate
{
    double mean = 0.0;
    double std_error = 0.0;
};

inline MeanEstimate estimate_mean(const std::vector<double> &v)
{
    MeanEstimate e;
    if (v.empty())
        return e;
    CompensatedSum s;
    for (double x : v)
        s.add(x);
    const double n = static_cast<double>(v.size());
    e.mean = s.value() / n;
    if (v.size() > 1)
    {
        CompensatedSum q;
        for (double x : v)
            q.add((x - e.mean) * (x - e.mean));
        e.std_error = std::sqrt(q.value() / (n - 1.0) / n);
    }
    return e;
}

// ---------- correlation functions ----------

struct LinkId
{
    int row = 0, col = 0, pd = 0;
    bool operator==(const LinkId &) const = default;
};

struct CorrelationTarget
{
    LinkId link;     // second link (i~, j~, p~)
    double dt = 0.0; // s
    double df = 0.0; // Hz
};

enum class CorrelationKind { Stfcf, Acf, Ccf, Fcf };

struct CorrelationRequest
{
    LinkId anchor;  // (i, j, p)
    double t = 0.0; // anchor time, s
    double f = 0.0; // anchor frequency, Hz
    std::vector<CorrelationTarget> targets;
};

struct CorrelationPoint
{
    CorrelationTarget target;
    Complex value;               // ensemble mean of H_a(t, f) H_b*(t + dt, f + df)
    double std_error = 0.0;
    Complex normalized;          // value / E|H_a(t, f)|^2
    double normalized_std_error = 0.0;
    // Split of the estimate into the LoS-LoS term, the NLoS-NLoS term weighted by the
    // cluster survival probability between the two elements, and the LoS-NLoS cross terms.
    Complex los;
    Complex nlos;
    Complex cross;
    double remain_probability = 1.0;
};

struct CorrelationSeries
{
    CorrelationKind kind = CorrelationKind::Stfcf;
    LinkId anchor;
    double t = 0.0, f = 0.0;
    int ensemble_size = 0;
    double zero_lag = 0.0; // E|H_a(t, f)|^2
    std::vector<CorrelationPoint> points;
};

namespace detail {

struct SplitH
{
    Complex los;
    Complex nlos;
    Complex total() const { return los + nlos; }
};

struct TapList
{
    std::vector<RayTap> taps;

    SplitH at(double f) const
    {
        SplitH h;
        for (const auto &t : taps)
            (t.kind == RayKind::LoS ? h.los : h.nlos) += t.power * phasor(f, t.delay);
        return h;
    }
};

inline TapList collect_taps(const SceneSnapshot &snap, const LinkId &l)
{
    TapList list;
    LinkEvaluator(snap, l.row, l.col, l.pd).for_each([&](const RayTap &t) { list.taps.push_back(t); });
    return list;
}

struct RunTerms
{
    double zero = 0.0;                // |H_a|^2
    std::vector<Complex> value, los, nlos, cross;
};

inline Complex mean_of(const std::vector<RunTerms> &runs, std::size_t l, std::vector<Complex> RunTerms::*field)
{
    CompensatedComplexSum s;
    for (const auto &r : runs)
        s.add((r.*field)[l]);
    return s.value() / static_cast<double>(runs.size());
}

} // namespace detail

inline CorrelationSeries stfcf(const Ensemble &ensemble, const CorrelationRequest &req, unsigned threads = 0,
                               CorrelationKind kind = CorrelationKind::Stfcf)
{
    for (const auto &tg : req.targets)
        if (!(req.t + tg.dt >= 0.0))
            throw Error(Errc::OutOfRange, "correlation lag reaches before t = 0");

    const auto runs = map_ensemble<detail::RunTerms>(ensemble, threads, [&](const Scene &scene) {
        detail::RunTerms r;
        const detail::SplitH ha = detail::collect_taps(positions_at(scene, req.t), req.anchor).at(req.f);
        r.zero = std::norm(ha.total());
        std::map<std::pair<double, std::tuple<int, int, int>>, detail::TapList> cache;
        for (const auto &tg : req.targets)
        {
            const auto key = std::make_pair(req.t + tg.dt, std::make_tuple(tg.link.row, tg.link.col, tg.link.pd));
            auto it = cache.find(key);
            if (it == cache.end())
                it = cache.emplace(key, detail::collect_taps(positions_at(scene, key.first), tg.link)).first;
            const detail::SplitH hb = it->second.at(req.f + tg.df);
            r.value.push_back(ha.total() * std::conj(hb.total()));
            r.los.push_back(ha.los * std::conj(hb.los));
            r.nlos.push_back(ha.nlos * std::conj(hb.nlos));
            r.cross.push_back(ha.los * std::conj(hb.nlos) + ha.nlos * std::conj(hb.los));
        }
        return r;
    });

    CorrelationSeries out;
    out.kind = kind;
    out.anchor = req.anchor;
    out.t = req.t;
    out.f = req.f;
    out.ensemble_size = ensemble.size();
    const double n = static_cast<double>(runs.size());
    {
        CompensatedSum z;
        for (const auto &r : runs)
            z.add(r.zero);
        out.zero_lag = z.value() / n;
    }

    const auto &params = ensemble.params();
    for (std::size_t l = 0; l < req.targets.size(); ++l)
    {
        CorrelationPoint pt;
        pt.target = req.targets[l];
        pt.value = detail::mean_of(runs, l, &detail::RunTerms::value);
        pt.normalized = out.zero_lag > 0.0 ? pt.value / out.zero_lag : Complex{};
        double var = 0.0, var_norm = 0.0;
        for (const auto &r : runs)
        {
            var += std::norm(r.value[l] - pt.value);
            if (out.zero_lag > 0.0)
                var_norm += std::norm((r.value[l] - pt.normalized * r.zero) / out.zero_lag);
        }
        if (runs.size() > 1)
        {
            pt.std_error = std::sqrt(var / (n - 1.0) / n);
            pt.normalized_std_error = std::sqrt(var_norm / (n - 1.0) / n);
        }
        pt.remain_probability = remain_probability(params.array.layout, params.evolution, req.anchor.row, req.anchor.col,
                                                   pt.target.link.row, pt.target.link.col);
        pt.los = detail::mean_of(runs, l, &detail::RunTerms::los);
        pt.nlos = pt.remain_probability * detail::mean_of(runs, l, &detail::RunTerms::nlos);
        pt.cross = detail::mean_of(runs, l, &detail::RunTerms::cross);
        out.points.push_back(pt);
    }
    return out;
}

// Temporal ACF of one link: targets (same link, dt, 0).
inline CorrelationSeries acf(const Ensemble &ensemble, const LinkId &link, double t, double f, const std::vector<double> &time_lags,
                             unsigned threads = 0)
{
    CorrelationRequest req{link, t, f, {}};
    for (double dt : time_lags)
        req.targets.push_back({link, dt, 0.0});
    return stfcf(ensemble, req, threads, CorrelationKind::Acf);
}

// Spatial CCF between the anchor link and each of `others` at the same t and f.
inline CorrelationSeries ccf(const Ensemble &ensemble, const LinkId &anchor, const std::vector<LinkId> &others, double t, double f,
                             unsigned threads = 0)
{
    CorrelationRequest req{anchor, t, f, {}};
    for (const auto &o : others)
        req.targets.push_back({o, 0.0, 0.0});
    return stfcf(ensemble, req, threads, CorrelationKind::Ccf);
}

// FCF of one link: targets (same link, 0, df).
inline CorrelationSeries fcf(const Ensemble &ensemble, const LinkId &link, double t, double f, const std::vector<double> &freq_lags,
                             unsigned threads = 0)
{
    CorrelationRequest req{link, t, f, {}};
    for (double df : freq_lags)
        req.targets.push_back({link, 0.0, df});
    return stfcf(ensemble, req, threads, CorrelationKind::Fcf);
}

} // namespace vlcsim
