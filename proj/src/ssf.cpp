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

#include "ssfgen/ssf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ssfgen
{

namespace
{

// -0.0 would flip the branch of atan2 at the axes; reciprocity needs the
// reversed displacement to reproduce the forward arrival values bit-exactly.
inline double negated(double v) { return v == 0.0 ? 0.0 : -v; }

inline double square(double v) { return v * v; }

} // namespace

double reciprocal_uniform(double at_tx, double at_rx, double rho_tr)
{
    if (!(rho_tr >= 0.0 && rho_tr <= 1.0))
        throw std::invalid_argument("reciprocal_uniform: correlation must be in [0,1]");
    if (!std::isfinite(at_tx) || !std::isfinite(at_rx))
        throw std::invalid_argument("reciprocal_uniform: field values must be finite");
    // the sum of the two end values has variance 2(1+rho); the denominator
    // restores a unit-variance argument so the output stays uniform for any
    // TX-RX distance
    return 0.5 * std::erfc(-(at_tx + at_rx) / (2.0 * std::sqrt(rho_tr + 1.0)));
}

std::vector<double> gen_initial_delays(const FieldSet &fields, const LinkGeometry &geom)
{
    const std::size_t n_paths = fields.path_count();
    const double rho = acf_target(geom.distance_3d(), fields.delay_field(0).acf());
    std::vector<double> tau(n_paths, 0.0);
    for (std::size_t l = 1; l < n_paths; ++l)
    {
        const SosField &field = fields.delay_field(l - 1);
        const double u = reciprocal_uniform(field.evaluate(geom.tx_pos),
                                            field.evaluate(geom.rx_pos), rho);
        tau[l] = -std::log(u);
    }
    return tau;
}

InitialAngles gen_initial_angles(const FieldSet &fields, const LinkGeometry &geom)
{
    const std::size_t n_paths = fields.path_count();
    InitialAngles out;
    out.dep_az.assign(n_paths, 0.0);
    out.arr_az.assign(n_paths, 0.0);
    out.dep_el.assign(n_paths, 0.0);
    out.arr_el.assign(n_paths, 0.0);

    auto uniform_angle = [](double a, double b) {
        // maps the two independent normals to a uniform angle on (-pi/2, pi/2)
        return (pi / 2.0) * std::erfc(-(a + b) / 2.0) - pi / 2.0;
    };
    for (std::size_t l = 1; l < n_paths; ++l)
    {
        // departure couples field A at the TX with field B at the RX; arrival
        // uses the same pair with the ends exchanged
        out.dep_az[l] = uniform_angle(fields.azimuth_a(l - 1).evaluate(geom.tx_pos),
                                      fields.azimuth_b(l - 1).evaluate(geom.rx_pos));
        out.arr_az[l] = uniform_angle(fields.azimuth_b(l - 1).evaluate(geom.tx_pos),
                                      fields.azimuth_a(l - 1).evaluate(geom.rx_pos));
        out.dep_el[l] = uniform_angle(fields.elevation_a(l - 1).evaluate(geom.tx_pos),
                                      fields.elevation_b(l - 1).evaluate(geom.rx_pos));
        out.arr_el[l] = uniform_angle(fields.elevation_b(l - 1).evaluate(geom.tx_pos),
                                      fields.elevation_a(l - 1).evaluate(geom.rx_pos));
    }
    return out;
}

std::vector<double> normalize_ds(std::span<const double> ds)
{
    if (ds.empty())
        throw std::invalid_argument("normalize_ds: empty frequency list");
    double lo = ds[0], hi = ds[0];
    for (double v : ds)
    {
        if (!(v > 0.0))
            throw std::invalid_argument("normalize_ds: delay spreads must be positive");
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    std::vector<double> out(ds.size());
    for (std::size_t f = 0; f < ds.size(); ++f)
        out[f] = std::clamp(ds[f] / (hi + lo), 0.15, 0.85);
    return out;
}

namespace
{

std::vector<double> normalize_as(std::span<const double> as)
{
    if (as.empty())
        throw std::invalid_argument("compute_scaling_coeffs: empty frequency list");
    double hi = as[0];
    for (double v : as)
    {
        if (!(v > 0.0))
            throw std::invalid_argument("compute_scaling_coeffs: angle spreads must be positive");
        hi = std::max(hi, v);
    }
    std::vector<double> out(as.size());
    for (std::size_t f = 0; f < as.size(); ++f)
        out[f] = std::max(0.75 * as[f] / hi, 0.25);
    return out;
}

double log_coeff(double scale, double inner_scale, double inner_offset, double x)
{
    const double arg = inner_scale * x - inner_offset;
    if (!(arg > 0.0))
        throw std::logic_error("compute_scaling_coeffs: non-positive log argument");
    return -scale * std::log(arg);
}

} // namespace

ScalingCoeffs compute_scaling_coeffs(const LsfSample &lsf)
{
    const std::size_t nf = lsf.frequency_count();
    if (nf == 0 || lsf.asd_rad.size() != nf || lsf.asa_rad.size() != nf ||
        lsf.esd_rad.size() != nf || lsf.esa_rad.size() != nf || lsf.kf_linear.size() != nf)
        throw std::invalid_argument("compute_scaling_coeffs: inconsistent frequency counts");

    const std::vector<double> ds_bar = normalize_ds(lsf.ds_s);
    const std::vector<double> asd_bar = normalize_as(lsf.asd_rad);
    const std::vector<double> asa_bar = normalize_as(lsf.asa_rad);
    const std::vector<double> esd_bar = normalize_as(lsf.esd_rad);
    const std::vector<double> esa_bar = normalize_as(lsf.esa_rad);

    ScalingCoeffs g;
    g.ds.resize(nf);
    g.asd.resize(nf);
    g.asa.resize(nf);
    g.esd.resize(nf);
    g.esa.resize(nf);
    for (std::size_t f = 0; f < nf; ++f)
    {
        g.ds[f] = log_coeff(1.5, 1.2, 0.15, ds_bar[f]);
        g.asd[f] = log_coeff(2.2, 1.5, 0.35, asd_bar[f]);
        g.asa[f] = log_coeff(2.2, 1.5, 0.35, asa_bar[f]);
        g.esd[f] = log_coeff(3.4, 1.2, 0.10, esd_bar[f]);
        g.esa[f] = log_coeff(3.4, 1.2, 0.10, esa_bar[f]);
    }
    return g;
}

std::vector<std::vector<double>> gen_initial_powers(std::span<const double> tau,
                                                    const InitialAngles &angles,
                                                    const ScalingCoeffs &coeffs)
{
    const std::size_t n_paths = tau.size();
    const std::size_t nf = coeffs.ds.size();
    if (angles.dep_az.size() != n_paths || angles.arr_az.size() != n_paths ||
        angles.dep_el.size() != n_paths || angles.arr_el.size() != n_paths)
        throw std::invalid_argument("gen_initial_powers: inconsistent path counts");

    std::vector<std::vector<double>> p(nf, std::vector<double>(n_paths));
    for (std::size_t f = 0; f < nf; ++f)
    {
        for (std::size_t l = 0; l < n_paths; ++l)
        {
            // azimuth terms enter squared, elevation terms by magnitude; the
            // exponent is grouped so a departure/arrival exchange commutes
            // bit-exactly
            const double az = square(angles.dep_az[l]) * coeffs.asd[f] +
                              square(angles.arr_az[l]) * coeffs.asa[f];
            const double el = std::abs(angles.dep_el[l]) * coeffs.esd[f] +
                              std::abs(angles.arr_el[l]) * coeffs.esa[f];
            p[f][l] = std::exp(-(tau[l] * coeffs.ds[f] + az + el));
        }
    }
    return p;
}

std::vector<std::vector<double>> apply_kf(const std::vector<std::vector<double>> &p_tilde,
                                          std::span<const double> kf)
{
    if (p_tilde.size() != kf.size())
        throw std::invalid_argument("apply_kf: frequency count mismatch");
    std::vector<std::vector<double>> out = p_tilde;
    for (std::size_t f = 0; f < out.size(); ++f)
    {
        std::vector<double> &p = out[f];
        if (p.size() < 2)
            throw std::invalid_argument("apply_kf: need at least two paths");
        double rest = 0.0;
        for (std::size_t l = 1; l < p.size(); ++l)
            rest += p[l];
        if (!(rest > 0.0) || !std::isfinite(rest))
            throw std::invalid_argument("apply_kf: non-LOS power sum is zero or invalid");
        if (!(kf[f] >= 0.0) || !std::isfinite(kf[f]))
            throw std::invalid_argument("apply_kf: K-factor must be finite and non-negative");
        p[0] = kf[f] * rest;
        const double total = p[0] + rest;
        for (double &v : p)
            v /= total;
    }
    return out;
}

std::vector<double> scale_delays(std::span<const double> tau_tilde,
                                 const std::vector<std::vector<double>> &power,
                                 std::span<const double> ds_target_s)
{
    if (power.size() != ds_target_s.size() || power.empty())
        throw std::invalid_argument("scale_delays: frequency count mismatch");
    double ratio_sum = 0.0;
    for (std::size_t f = 0; f < power.size(); ++f)
    {
        const double est = delay_spread(tau_tilde, power[f]);
        if (!(est > 0.0))
            throw std::invalid_argument("scale_delays: estimated delay spread is zero");
        if (!(ds_target_s[f] > 0.0))
            throw std::invalid_argument("scale_delays: target delay spread must be positive");
        ratio_sum += ds_target_s[f] / est;
    }
    const double scale = ratio_sum / static_cast<double>(power.size());
    std::vector<double> tau(tau_tilde.size());
    for (std::size_t l = 0; l < tau.size(); ++l)
        tau[l] = tau_tilde[l] * scale;
    return tau;
}

std::vector<double> scale_angles(std::span<const double> initial_angles,
                                 const std::vector<std::vector<double>> &power,
                                 std::span<const double> as_target_rad, AngleKind kind,
                                 AngleScaleInfo *info)
{
    if (power.size() != as_target_rad.size() || power.empty())
        throw std::invalid_argument("scale_angles: frequency count mismatch");
    double ratio_sum = 0.0;
    for (std::size_t f = 0; f < power.size(); ++f)
    {
        const double est = angular_spread(initial_angles, power[f]);
        if (!(est > 0.0))
            throw std::invalid_argument("scale_angles: estimated angle spread is zero");
        if (!(as_target_rad[f] > 0.0))
            throw std::invalid_argument("scale_angles: target angle spread must be positive");
        ratio_sum += as_target_rad[f] / est;
    }
    const double cap = (kind == AngleKind::azimuth) ? 3.0 : 1.5;
    const double unclamped = ratio_sum / static_cast<double>(power.size());
    const double s = std::min(unclamped, cap);
    if (info)
    {
        info->factor = s;
        info->factor_unclamped = unclamped;
        info->capped = unclamped >= cap;
    }
    std::vector<double> out(initial_angles.size());
    for (std::size_t l = 0; l < out.size(); ++l)
        out[l] = wrap_pi(initial_angles[l] * s);
    return out;
}

LosAngles los_angles(const LinkGeometry &geom)
{
    const double dx = geom.rx_pos.x - geom.tx_pos.x;
    const double dy = geom.rx_pos.y - geom.tx_pos.y;
    const double dz = geom.rx_pos.z - geom.tx_pos.z;
    const double d2d = std::hypot(dx, dy);

    LosAngles a;
    a.dep_az = std::atan2(dy, dx);
    a.dep_el = std::atan2(dz, d2d);
    // the arrival direction is evaluated from the reversed displacement rather
    // than by adding pi, so a TX/RX swap reproduces it bit-exactly
    a.arr_az = std::atan2(negated(dy), negated(dx));
    a.arr_el = std::atan2(negated(dz), d2d);
    return a;
}

void rotate_to_los(std::span<double> az, std::span<double> el, double los_az, double los_el)
{
    if (az.size() != el.size())
        throw std::invalid_argument("rotate_to_los: size mismatch");
    const double ct = std::cos(los_el), st = std::sin(los_el);
    const double cp = std::cos(los_az), sp = std::sin(los_az);
    for (std::size_t l = 0; l < az.size(); ++l)
    {
        const double ce = std::cos(el[l]), se = std::sin(el[l]);
        const double ca = std::cos(az[l]), sa = std::sin(az[l]);
        // unit vector of the path direction
        const double cx = ce * ca, cy = ce * sa, cz = se;
        // rotation about y by the LOS elevation, then about z by the LOS azimuth
        const double x = ct * cp * cx - sp * cy - st * cp * cz;
        const double y = ct * sp * cx + cp * cy - st * sp * cz;
        const double z = st * cx + ct * cz;
        az[l] = std::atan2(y, x);
        el[l] = std::atan2(z, std::hypot(x, y));
    }
}

PathTable generate_paths(const FieldSet &fields, const LinkGeometry &geom, const LsfSample &lsf,
                         const ScenarioConfig &cfg, PathDiagnostics *diag)
{
    if (fields.path_count() != cfg.path_count)
        throw std::invalid_argument("generate_paths: field set does not match configured path count");
    const std::size_t nf = lsf.frequency_count();
    if (nf == 0)
        throw std::invalid_argument("generate_paths: need at least one frequency");

    const std::vector<double> tau_tilde = gen_initial_delays(fields, geom);
    const InitialAngles initial = gen_initial_angles(fields, geom);

    const ScalingCoeffs coeffs = compute_scaling_coeffs(lsf);
    const std::vector<std::vector<double>> p_tilde = gen_initial_powers(tau_tilde, initial, coeffs);
    std::vector<std::vector<double>> power = apply_kf(p_tilde, lsf.kf_linear);

    PathTable table;
    table.delay_s = scale_delays(tau_tilde, power, lsf.ds_s);

    PathDiagnostics local;
    PathDiagnostics &d = diag ? *diag : local;
    table.aod_az = scale_angles(initial.dep_az, power, lsf.asd_rad, AngleKind::azimuth,
                                &d.angle_scale[0]);
    table.aoa_az = scale_angles(initial.arr_az, power, lsf.asa_rad, AngleKind::azimuth,
                                &d.angle_scale[1]);
    table.aod_el = scale_angles(initial.dep_el, power, lsf.esd_rad, AngleKind::elevation,
                                &d.angle_scale[2]);
    table.aoa_el = scale_angles(initial.arr_el, power, lsf.esa_rad, AngleKind::elevation,
                                &d.angle_scale[3]);

    const LosAngles los = los_angles(geom);
    rotate_to_los(table.aod_az, table.aod_el, los.dep_az, los.dep_el);
    rotate_to_los(table.aoa_az, table.aoa_el, los.arr_az, los.arr_el);

    table.power = std::move(power);
    return table;
}

} // namespace ssfgen
