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

#ifndef SSFGEN_CORR_FIELD_HPP
#define SSFGEN_CORR_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ssfgen/geometry.hpp"

namespace ssfgen
{

/// Target autocorrelation of a spatially correlated parameter: Gaussian decay
/// inside one decorrelation distance, exponential decay beyond it.
struct AcfSpec
{
    double decorr_dist_m = 15.0;

    explicit AcfSpec(double d_lambda_m = 15.0);
};

/// Target correlation between two points separated by `distance_m`.
/// Equals 1 at zero separation and exp(-1) at the decorrelation distance.
double acf_target(double distance_m, const AcfSpec &spec);

constexpr std::size_t default_sinusoid_count = 500;

/// Spatially correlated standard-normal random field over 3-D positions,
/// realized as a sum of sinusoids. Wave vectors are drawn from a nonnegative
/// radial spectral density fitted numerically to the composite autocorrelation;
/// radial wavenumbers use a stratified inverse-CDF table so that a single
/// realization already reproduces the target correlation closely.
///
/// Immutable after construction; concurrent evaluation is safe.
class SosField
{
  public:
    SosField(std::uint64_t seed, const AcfSpec &acf,
             std::size_t n_sinusoids = default_sinusoid_count);

    /// Field value at a position. Deterministic in (seed, position).
    double evaluate(const Vec3 &pos) const;

    /// Batch evaluation, parallelized across positions with OpenMP.
    /// Bit-identical to calling evaluate() per position.
    void evaluate_many(std::span<const Vec3> pos, std::span<double> out) const;

    /// Serial reference for evaluate_many, kept for tests and benchmarks.
    void evaluate_many_serial(std::span<const Vec3> pos, std::span<double> out) const;

    std::uint64_t seed() const { return seed_; }
    const AcfSpec &acf() const { return acf_; }
    std::size_t sinusoid_count() const { return phase_.size(); }

  private:
    std::uint64_t seed_;
    AcfSpec acf_;
    double amplitude_;
    std::vector<double> kx_, ky_, kz_, phase_;
};

/// Bank of independent fields backing one link's path generation:
/// per NLOS path one delay field plus an A/B field pair for azimuth and an
/// A/B pair for elevation. The A/B pairing is what couples departure and
/// arrival angles under a TX/RX swap.
class FieldSet
{
  public:
    FieldSet(std::uint64_t seed, std::size_t path_count, const AcfSpec &delay_acf,
             const AcfSpec &angle_acf, std::size_t n_sinusoids = default_sinusoid_count);

    std::size_t path_count() const { return path_count_; }
    std::uint64_t seed() const { return seed_; }

    // Accessors are indexed by NLOS path: nlos = 0 refers to path l = 2.
    const SosField &delay_field(std::size_t nlos) const { return delay_[nlos]; }
    const SosField &azimuth_a(std::size_t nlos) const { return az_a_[nlos]; }
    const SosField &azimuth_b(std::size_t nlos) const { return az_b_[nlos]; }
    const SosField &elevation_a(std::size_t nlos) const { return el_a_[nlos]; }
    const SosField &elevation_b(std::size_t nlos) const { return el_b_[nlos]; }

  private:
    std::uint64_t seed_;
    std::size_t path_count_;
    std::vector<SosField> delay_, az_a_, az_b_, el_a_, el_b_;
};

namespace detail
{

/// Normalized inverse-CDF table for radial wavenumber sampling at unit
/// decorrelation distance. Computed once per process; wavenumbers for other
/// decorrelation distances follow by scaling.
struct SpectralTable
{
    std::vector<double> edges; // bin edges of the piecewise-constant density
    std::vector<double> cdf;   // cumulative mass at the edges, cdf.front()=0, cdf.back()=1

    /// Inverse CDF: maps u in [0,1] to a radial wavenumber.
    double sample(double u) const;

    /// Ensemble correlation this table produces at unit-decorrelation distance d.
    double expected_acf(double d) const;
};

const SpectralTable &unit_spectral_table();

} // namespace detail

} // namespace ssfgen

#endif
