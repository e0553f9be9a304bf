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

#ifndef SSFGEN_SSF_HPP
#define SSFGEN_SSF_HPP

#include <array>
#include <span>
#include <vector>

#include "ssfgen/corr_field.hpp"
#include "ssfgen/geometry.hpp"
#include "ssfgen/lsf.hpp"
#include "ssfgen/metrics.hpp"

namespace ssfgen
{

// Path-generation pipeline. Initial delays and angles come from spatially
// correlated fields shared between the two link ends, which makes every
// output a continuous function of the TX and RX positions and gives exact
// reciprocity under an endpoint swap. Path order is fixed throughout; no
// stage sorts or permutes paths.

/// Map two field values (one per link end) to a uniform (0,1) variate that is
/// symmetric in its endpoints. `rho_tr` is the field correlation at the
/// TX-RX distance; the denominator keeps the variate uniform when the two
/// ends are close and their field values nearly coincide.
double reciprocal_uniform(double at_tx, double at_rx, double rho_tr);

/// Initial dimensionless delays: first path 0, the rest unit-mean exponential
/// variates driven by the delay fields. Invariant under swapping TX and RX.
std::vector<double> gen_initial_delays(const FieldSet &fields, const LinkGeometry &geom);

/// Initial angles per path for the four angle dimensions, radians.
/// The first path is 0 in every dimension; the rest are uniform on
/// (-pi/2, pi/2). Swapping TX and RX exchanges departure and arrival exactly.
struct InitialAngles
{
    std::vector<double> dep_az, arr_az, dep_el, arr_el;
};
InitialAngles gen_initial_angles(const FieldSet &fields, const LinkGeometry &geom);

/// Delay-spread normalization across frequencies; output in [0.15, 0.85].
std::vector<double> normalize_ds(std::span<const double> ds);

/// Per-frequency exponents shaping the initial path powers so that the
/// relative spread differences between carriers are reflected in the powers.
struct ScalingCoeffs
{
    std::vector<double> ds, asd, asa, esd, esa; // one entry per frequency
};
ScalingCoeffs compute_scaling_coeffs(const LsfSample &lsf);

/// Initial path powers, indexed [frequency][path].
std::vector<std::vector<double>> gen_initial_powers(std::span<const double> tau,
                                                    const InitialAngles &angles,
                                                    const ScalingCoeffs &coeffs);

/// Set the first-path power from the K-factor and normalize each frequency's
/// profile to unit total power. After this, power[f][0] divided by the sum of
/// the other entries equals kf[f] up to rounding.
std::vector<std::vector<double>> apply_kf(const std::vector<std::vector<double>> &p_tilde,
                                          std::span<const double> kf);

/// Scale the dimensionless delays so the delay spread recomputed from
/// (delays, powers) matches the target; with several frequencies the scale is
/// the mean of the per-frequency ratios.
std::vector<double> scale_delays(std::span<const double> tau_tilde,
                                 const std::vector<std::vector<double>> &power,
                                 std::span<const double> ds_target_s);

enum class AngleKind
{
    azimuth, // scale factor capped at 3.0
    elevation // scale factor capped at 1.5
};

struct AngleScaleInfo
{
    double factor = 1.0;          // applied factor
    double factor_unclamped = 1.0;
    bool capped = false;
};

/// Scale initial angles toward the target spread and wrap to (-pi, pi].
std::vector<double> scale_angles(std::span<const double> initial_angles,
                                 const std::vector<std::vector<double>> &power,
                                 std::span<const double> as_target_rad, AngleKind kind,
                                 AngleScaleInfo *info = nullptr);

/// Line-of-sight departure/arrival angles from the link geometry.
struct LosAngles
{
    double dep_az = 0.0, arr_az = 0.0, dep_el = 0.0, arr_el = 0.0;
};
LosAngles los_angles(const LinkGeometry &geom);

/// Rotate per-path (azimuth, elevation) pairs so the direction that was at
/// (0,0) points along the given line-of-sight direction. In place; preserves
/// pairwise angular separations.
void rotate_to_los(std::span<double> az, std::span<double> el, double los_az, double los_el);

/// Generated paths: delays and angles shared by all frequencies, powers per
/// frequency. power[f] sums to one for every f.
struct PathTable
{
    std::vector<double> delay_s;
    std::vector<std::vector<double>> power; // [frequency][path]
    std::vector<double> aod_az, aoa_az, aod_el, aoa_el;

    std::size_t path_count() const { return delay_s.size(); }
    std::size_t frequency_count() const { return power.size(); }
};

/// Per-dimension scaling diagnostics of one generate_paths run, in the order
/// dep_az, arr_az, dep_el, arr_el.
struct PathDiagnostics
{
    std::array<AngleScaleInfo, 4> angle_scale;
};

/// Full pipeline: initial delays/angles -> power shaping -> K-factor ->
/// delay/angle spread application -> line-of-sight rotation.
PathTable generate_paths(const FieldSet &fields, const LinkGeometry &geom, const LsfSample &lsf,
                         const ScenarioConfig &cfg, PathDiagnostics *diag = nullptr);

} // namespace ssfgen

#endif
