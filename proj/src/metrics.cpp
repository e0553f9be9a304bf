// SPDX-License-Identifier: Apache-2.0
//
// ssfgen - spatially consistent multi-frequency small-scale fading generator
// Copyright (C) 2026 ssfgen contributors
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

#include "ssfgen/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "ssfgen/rng.hpp"
#include "ssfgen/ssf.hpp"

namespace ssfgen
{

namespace
{

double total_power(std::span<const double> power)
{
    double s = 0.0;
    for (double p : power)
    {
        if (!(p >= 0.0))
            throw std::invalid_argument("spread estimator: powers must be non-negative");
        s += p;
    }
    return s;
}

} // namespace

double delay_spread(std::span<const double> tau_s, std::span<const double> power)
{
    if (tau_s.size() != power.size() || tau_s.empty())
        throw std::invalid_argument("delay_spread: size mismatch or empty input");
    const double ptot = total_power(power);
    if (!(ptot > 0.0))
        throw std::invalid_argument("delay_spread: total power must be positive");
    double mean = 0.0;
    for (std::size_t l = 0; l < tau_s.size(); ++l)
        mean += power[l] * tau_s[l];
    mean /= ptot;
    double var = 0.0;
    for (std::size_t l = 0; l < tau_s.size(); ++l)
    {
        const double d = tau_s[l] - mean;
        var += power[l] * d * d;
    }
    return std::sqrt(std::max(var / ptot, 0.0));
}

double angular_spread(std::span<const double> angle_rad, std::span<const double> power)
{
    if (angle_rad.size() != power.size() || angle_rad.empty())
        throw std::invalid_argument("angular_spread: size mismatch or empty input");
    const double ptot = total_power(power);
    if (!(ptot > 0.0))
        throw std::invalid_argument("angular_spread: total power must be positive");

    // power-weighted mean direction; removes the dependence on the reference angle
    std::complex<double> resultant(0.0, 0.0);
    for (std::size_t l = 0; l < angle_rad.size(); ++l)
        resultant += power[l] * std::complex<double>(std::cos(angle_rad[l]), std::sin(angle_rad[l]));
    const double delta = std::atan2(resultant.imag(), resultant.real());

    double mean = 0.0;
    for (std::size_t l = 0; l < angle_rad.size(); ++l)
        mean += power[l] * wrap_pi(angle_rad[l] - delta);
    mean /= ptot;
    double var = 0.0;
    for (std::size_t l = 0; l < angle_rad.size(); ++l)
    {
        const double d = wrap_pi(angle_rad[l] - delta) - mean;
        var += power[l] * d * d;
    }
    return std::sqrt(std::max(var / ptot, 0.0));
}

double kf_estimate(std::span<const double> power)
{
    if (power.size() < 2)
        throw std::invalid_argument("kf_estimate: need at least two paths");
    double rest = 0.0;
    for (std::size_t l = 1; l < power.size(); ++l)
        rest += power[l];
    if (rest <= 0.0)
        return std::numeric_limits<double>::infinity();
    return power[0] / rest;
}

EmpiricalCdf EmpiricalCdf::from_samples(std::vector<double> samples)
{
    if (samples.empty())
        throw std::invalid_argument("EmpiricalCdf: empty sample set");
    std::sort(samples.begin(), samples.end());
    EmpiricalCdf cdf;
    cdf.prob.resize(samples.size());
    const double n = static_cast<double>(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        cdf.prob[i] = static_cast<double>(i + 1) / n;
    cdf.values = std::move(samples);
    return cdf;
}

double EmpiricalCdf::median() const
{
    // lower median: first value with cumulative probability >= 1/2
    return values[(values.size() + 1) / 2 - 1];
}

double EmpiricalCdf::fraction_above(double x) const
{
    const auto it = std::upper_bound(values.begin(), values.end(), x);
    return static_cast<double>(values.end() - it) / static_cast<double>(values.size());
}

SpreadReport compute_spread_report(const PathTable &table)
{
    SpreadReport r;
    const std::size_t nf = table.frequency_count();
    r.ds_s.resize(nf);
    r.asd_rad.resize(nf);
    r.asa_rad.resize(nf);
    r.esd_rad.resize(nf);
    r.esa_rad.resize(nf);
    r.kf_linear.resize(nf);
    for (std::size_t f = 0; f < nf; ++f)
    {
        const std::span<const double> p(table.power[f]);
        r.ds_s[f] = delay_spread(table.delay_s, p);
        r.asd_rad[f] = angular_spread(table.aod_az, p);
        r.asa_rad[f] = angular_spread(table.aoa_az, p);
        r.esd_rad[f] = angular_spread(table.aod_el, p);
        r.esa_rad[f] = angular_spread(table.aoa_el, p);
        r.kf_linear[f] = kf_estimate(p);
    }
    return r;
}

std::vector<MaxAsPoint> max_as_sweep(std::span<const double> kf_grid_db, double target_as_rad,
                                     AngleDimension dimension, const ScenarioConfig &cfg,
                                     std::uint64_t seed, int n_seeds)
{
    if (kf_grid_db.empty())
        throw std::invalid_argument("max_as_sweep: empty K-factor grid");
    if (n_seeds < 1)
        throw std::invalid_argument("max_as_sweep: need at least one seed");

    // fixed evaluation link; single carrier, requested spread in all four dimensions
    const LinkGeometry geom({0.0, 0.0, 10.0}, {100.0, 0.0, 1.5});
    const AcfSpec delay_acf(cfg.delay_decorr_m);
    const AcfSpec angle_acf(cfg.angle_decorr_m);

    ScenarioConfig run_cfg = cfg;
    run_cfg.frequencies_ghz = {cfg.frequencies_ghz.front()};

    std::vector<MaxAsPoint> curve(kf_grid_db.size());
    const std::int64_t n_pts = static_cast<std::int64_t>(kf_grid_db.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n_pts; ++i)
    {
        const double kf_db = kf_grid_db[static_cast<std::size_t>(i)];
        LsfSample lsf;
        lsf.ds_s = {100e-9};
        lsf.asd_rad = {target_as_rad};
        lsf.asa_rad = {target_as_rad};
        lsf.esd_rad = {target_as_rad};
        lsf.esa_rad = {target_as_rad};
        lsf.kf_linear = {std::pow(10.0, kf_db / 10.0)};

        double acc = 0.0;
        for (int s = 0; s < n_seeds; ++s)
        {
            const std::uint64_t fs = derive_seed(
                derive_seed(derive_seed(seed, seed_stream::sweep), static_cast<std::uint64_t>(i)),
                static_cast<std::uint64_t>(s));
            const FieldSet fields(fs, run_cfg.path_count, delay_acf, angle_acf,
                                  run_cfg.sos_sinusoids);
            const PathTable table = generate_paths(fields, geom, lsf, run_cfg);
            const std::span<const double> p(table.power[0]);
            acc += (dimension == AngleDimension::azimuth) ? angular_spread(table.aoa_az, p)
                                                          : angular_spread(table.aoa_el, p);
        }
        curve[static_cast<std::size_t>(i)] = {kf_db, acc / n_seeds};
    }
    return curve;
}

} // namespace ssfgen
