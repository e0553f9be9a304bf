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

#ifndef SSFGEN_LSF_HPP
#define SSFGEN_LSF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ssfgen/geometry.hpp"

namespace ssfgen
{

enum class Condition
{
    los,
    nlos
};

inline const char *to_string(Condition c) { return c == Condition::los ? "los" : "nlos"; }

/// Affine model for a log10-domain (or dB-domain) distribution moment:
///   value = clamp(base + per_log1f*log10(1+f_GHz) + per_d2d_km*d2D_km
///                 + per_dh_abs*|h_rx-h_tx| + per_dh_pos*max(h_rx-h_tx, 0),
///                 min, max)
/// This covers the frequency- and distance-dependent entries of the
/// 3GPP TR 38.901 parameter tables.
struct AffineLogParam
{
    double base = 0.0;
    double per_log1f = 0.0;
    double per_d2d_km = 0.0;
    double per_dh_abs = 0.0;
    double per_dh_pos = 0.0;
    double min = -1e30;
    double max = 1e30;

    double eval(double f_ghz, double d2d_m, double dh_m) const;
};

/// One large-scale parameter distribution: log10-normal (dB-normal for the
/// K-factor) with affine mean and standard deviation.
struct ParamDistribution
{
    AffineLogParam mu;
    AffineLogParam sigma;
};

/// Scenario parameters for one propagation condition.
struct ScenarioConfig
{
    std::string scenario;
    Condition condition = Condition::los;
    ParamDistribution ds;     // log10(seconds)
    ParamDistribution asd;    // log10(degrees)
    ParamDistribution asa;    // log10(degrees)
    ParamDistribution esd;    // log10(degrees)
    ParamDistribution esa;    // log10(degrees)
    ParamDistribution kf_db;  // dB
    std::vector<double> frequencies_ghz;
    std::size_t path_count = 0;
    double delay_decorr_m = 15.0;
    double angle_decorr_m = 15.0;
    std::size_t sos_sinusoids = 500;

    void validate() const; // throws std::invalid_argument naming the bad field
};

/// Both condition blocks of one scenario file.
struct ScenarioFile
{
    std::string scenario;
    ScenarioConfig los;
    ScenarioConfig nlos;

    const ScenarioConfig &get(Condition c) const { return c == Condition::los ? los : nlos; }
};

/// Load and strictly validate a scenario config. Unknown keys are rejected;
/// violations name the offending field.
ScenarioFile load_config(const std::string &path);

/// Per-link large-scale parameters, one entry per carrier frequency.
struct LsfSample
{
    std::vector<double> ds_s;      // delay spread, seconds
    std::vector<double> asd_rad;   // azimuth spread of departure
    std::vector<double> asa_rad;   // azimuth spread of arrival
    std::vector<double> esd_rad;   // elevation spread of departure
    std::vector<double> esa_rad;   // elevation spread of arrival
    std::vector<double> kf_linear; // Ricean K-factor, linear power ratio

    std::size_t frequency_count() const { return ds_s.size(); }
};

/// Draw one link's large-scale parameters. One standard-normal deviate per
/// parameter class is shared across frequencies, so a link keeps its relative
/// position in the distribution at every carrier.
LsfSample sample_lsf(const ScenarioConfig &cfg, const LinkGeometry &geom, std::uint64_t seed);

/// Exchange the departure and arrival roles (ASD<->ASA, ESD<->ESA); the
/// counterpart of swapping the link's endpoints.
LsfSample swap_link_roles(const LsfSample &sample);

} // namespace ssfgen

#endif
