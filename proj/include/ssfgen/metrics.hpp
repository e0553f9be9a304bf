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

#ifndef SSFGEN_METRICS_HPP
#define SSFGEN_METRICS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ssfgen/lsf.hpp"

namespace ssfgen
{

struct PathTable; // ssf.hpp

/// Power-weighted rms delay spread.
double delay_spread(std::span<const double> tau_s, std::span<const double> power);

/// Power-weighted rms angular spread: angles are re-centered on the
/// power-weighted circular mean direction and rewrapped before the rms is
/// taken, so the result does not depend on the angular reference.
double angular_spread(std::span<const double> angle_rad, std::span<const double> power);

/// Ratio of first-path power to the summed power of all other paths.
/// Returns +infinity when the non-LOS power is zero.
double kf_estimate(std::span<const double> power);

/// Step CDF over a sample set.
struct EmpiricalCdf
{
    std::vector<double> values; // sorted ascending
    std::vector<double> prob;   // i-th entry (i+1)/n

    static EmpiricalCdf from_samples(std::vector<double> samples);

    double median() const;
    /// Fraction of samples strictly above x.
    double fraction_above(double x) const;
};

/// Spreads and K-factor recomputed from a generated path table, per frequency.
struct SpreadReport
{
    std::vector<double> ds_s;
    std::vector<double> asd_rad;
    std::vector<double> asa_rad;
    std::vector<double> esd_rad;
    std::vector<double> esa_rad;
    std::vector<double> kf_linear;
};

SpreadReport compute_spread_report(const PathTable &table);

struct MaxAsPoint
{
    double kf_db = 0.0;
    double achieved_as_rad = 0.0;
};

enum class AngleDimension
{
    azimuth,
    elevation
};

/// Achievable angular spread versus K-factor: for each grid point the full
/// path-generation pipeline runs with the requested spread set to `target_as_rad`
/// in all four angle dimensions, and the spread recomputed from the generated
/// paths (arrival side) is averaged over `n_seeds` independent realizations.
std::vector<MaxAsPoint> max_as_sweep(std::span<const double> kf_grid_db, double target_as_rad,
                                     AngleDimension dimension, const ScenarioConfig &cfg,
                                     std::uint64_t seed, int n_seeds = 100);

} // namespace ssfgen

#endif
