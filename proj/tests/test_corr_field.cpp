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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "ssfgen/corr_field.hpp"
#include "ssfgen/rng.hpp"

using namespace ssfgen;

TEST_CASE("acf_target: values and branch continuity")
{
    const AcfSpec spec(15.0);
    CHECK(acf_target(0.0, spec) == 1.0);
    CHECK(acf_target(15.0, spec) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(acf_target(7.5, spec) == doctest::Approx(std::exp(-0.25)).epsilon(1e-12));
    CHECK(acf_target(30.0, spec) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    // both branches agree at the decorrelation distance
    CHECK(acf_target(15.0 - 1e-9, spec) ==
          doctest::Approx(acf_target(15.0 + 1e-9, spec)).epsilon(1e-6));
    CHECK_THROWS_AS(acf_target(-1.0, spec), std::invalid_argument);
    CHECK_THROWS_AS(AcfSpec(0.0), std::invalid_argument);
    CHECK_THROWS_AS(AcfSpec(-3.0), std::invalid_argument);
}

TEST_CASE("spectral table: fitted density reproduces the target ACF")
{
    const auto &table = detail::unit_spectral_table();
    double worst = 0.0;
    for (int i = 0; i <= 80; ++i)
    {
        const double d = 4.0 * i / 80.0;
        const double target = (d < 1.0) ? std::exp(-d * d) : std::exp(-d);
        worst = std::max(worst, std::abs(table.expected_acf(d) - target));
    }
    // the composite ACF is not positive definite in 3-D; the nonnegative fit
    // carries a small irreducible error near the branch junction
    CHECK(worst < 0.035);
}

TEST_CASE("SosField: deterministic and seed-sensitive")
{
    const AcfSpec spec(15.0);
    const SosField f1(1, spec, 500);
    const SosField f1b(1, spec, 500);
    const SosField f2(2, spec, 500);

    const Vec3 p{3.0, -17.5, 2.25};
    CHECK(f1.evaluate(p) == f1.evaluate(p));
    CHECK(f1.evaluate(p) == f1b.evaluate(p));
    CHECK(f1.evaluate(p) != f2.evaluate(p));

    // sample correlation between two seeds over many positions stays near zero
    Rng rng(99);
    double s11 = 0.0, s22 = 0.0, s12 = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i)
    {
        const Vec3 q{rng.uniform(0.0, 2000.0), rng.uniform(0.0, 2000.0), rng.uniform(0.0, 2000.0)};
        const double a = f1.evaluate(q), b = f2.evaluate(q);
        s11 += a * a;
        s22 += b * b;
        s12 += a * b;
    }
    CHECK(std::abs(s12 / std::sqrt(s11 * s22)) < 0.1);

    CHECK_THROWS_AS(SosField(1, spec, 0), std::invalid_argument);
    CHECK_THROWS_AS(f1.evaluate({std::nan(""), 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("SosField: standard-normal marginal and pair correlation at d_lambda")
{
    const AcfSpec spec(15.0);
    const Vec3 p{100.0, 50.0, 1.5};
    const int n = 10000;
    Rng dir_rng(5);
    double sum = 0.0, sum_sq = 0.0, pair = 0.0;
    for (int s = 0; s < n; ++s)
    {
        const SosField f(static_cast<std::uint64_t>(s), spec, 300);
        const double v = f.evaluate(p);
        sum += v;
        sum_sq += v * v;
        const double cz = dir_rng.uniform(-1.0, 1.0);
        const double az = dir_rng.uniform(0.0, two_pi);
        const double sz = std::sqrt(1.0 - cz * cz);
        const Vec3 q = p + 15.0 * Vec3{sz * std::cos(az), sz * std::sin(az), cz};
        pair += v * f.evaluate(q);
    }
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    CHECK(mean > -0.05);
    CHECK(mean < 0.05);
    CHECK(var > 0.9);
    CHECK(var < 1.1);
    // correlation at the decorrelation distance
    CHECK(pair / n > std::exp(-1.0) - 0.07);
    CHECK(pair / n < std::exp(-1.0) + 0.07);
}

namespace
{

// empirical two-point correlation of one realization at a fixed distance,
// averaged over random pair directions
double empirical_rho(const SosField &field, double d, int n_pairs, Rng &rng, double origin)
{
    std::vector<Vec3> a(static_cast<std::size_t>(n_pairs)), b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        a[i] = {origin + rng.uniform(0.0, 800.0), origin + rng.uniform(0.0, 800.0),
                origin + rng.uniform(0.0, 800.0)};
        const double cz = rng.uniform(-1.0, 1.0);
        const double az = rng.uniform(0.0, two_pi);
        const double sz = std::sqrt(1.0 - cz * cz);
        b[i] = a[i] + d * Vec3{sz * std::cos(az), sz * std::sin(az), cz};
    }
    std::vector<double> va(a.size()), vb(a.size());
    field.evaluate_many(a, va);
    field.evaluate_many(b, vb);
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += va[i] * vb[i];
    return acc / static_cast<double>(a.size());
}

} // namespace

TEST_CASE("SosField: empirical ACF within 0.05 of target over [0, 4 d_lambda]")
{
    const AcfSpec spec(15.0);
    const SosField field(7, spec, 500);
    Rng rng(11);
    double worst = 0.0;
    for (int i = 0; i <= 16; ++i)
    {
        const double d = 60.0 * i / 16.0;
        const double emp = empirical_rho(field, d, 10000, rng, 0.0);
        worst = std::max(worst, std::abs(emp - acf_target(d, spec)));
    }
    CHECK(worst < 0.05);
}

TEST_CASE("SosField: stationarity - distant regions give the same ACF")
{
    const AcfSpec spec(15.0);
    const SosField field(13, spec, 500);
    Rng rng(17);
    for (double d : {7.5, 15.0, 30.0})
    {
        const double near_origin = empirical_rho(field, d, 8000, rng, 0.0);
        const double far_away = empirical_rho(field, d, 8000, rng, 50000.0);
        CHECK(std::abs(near_origin - acf_target(d, spec)) < 0.05);
        CHECK(std::abs(far_away - acf_target(d, spec)) < 0.05);
    }
}

TEST_CASE("SosField: smoothness over d_lambda/1000 displacements")
{
    const AcfSpec spec(15.0);
    Rng rng(23);
    double worst = 0.0;
    for (int s = 0; s < 50; ++s)
    {
        const SosField f(1000 + static_cast<std::uint64_t>(s), spec, 500);
        for (int i = 0; i < 200; ++i)
        {
            const Vec3 p{rng.uniform(0.0, 500.0), rng.uniform(0.0, 500.0),
                         rng.uniform(0.0, 500.0)};
            const Vec3 q = p + Vec3{0.015, 0.0, 0.0};
            worst = std::max(worst, std::abs(f.evaluate(p) - f.evaluate(q)));
        }
    }
    CHECK(worst < 0.02);
}

TEST_CASE("SosField: evaluate_many matches the serial reference bit-exactly")
{
    const SosField field(31, AcfSpec(10.0), 400);
    Rng rng(3);
    std::vector<Vec3> pos(2000);
    for (Vec3 &p : pos)
        p = {rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0)};
    std::vector<double> parallel(pos.size()), serial(pos.size());
    field.evaluate_many(pos, parallel);
    field.evaluate_many_serial(pos, serial);
    for (std::size_t i = 0; i < pos.size(); ++i)
    {
        CHECK(parallel[i] == serial[i]);
        CHECK(parallel[i] == field.evaluate(pos[i]));
    }
}

TEST_CASE("FieldSet: structure, determinism and mutual independence of sub-seeds")
{
    const AcfSpec delay_acf(12.0), angle_acf(18.0);
    const FieldSet fs(42, 5, delay_acf, angle_acf, 200);
    CHECK(fs.path_count() == 5);
    CHECK(fs.delay_field(0).acf().decorr_dist_m == 12.0);
    CHECK(fs.azimuth_a(0).acf().decorr_dist_m == 18.0);

    const FieldSet fs2(42, 5, delay_acf, angle_acf, 200);
    const Vec3 p{1.0, 2.0, 3.0};
    CHECK(fs.delay_field(3).evaluate(p) == fs2.delay_field(3).evaluate(p));

    // different roles and path indices get different fields
    CHECK(fs.delay_field(0).evaluate(p) != fs.delay_field(1).evaluate(p));
    CHECK(fs.azimuth_a(0).evaluate(p) != fs.azimuth_b(0).evaluate(p));
    CHECK(fs.azimuth_a(0).evaluate(p) != fs.elevation_a(0).evaluate(p));
    CHECK(fs.delay_field(0).evaluate(p) != fs.azimuth_a(0).evaluate(p));

    CHECK_THROWS_AS(FieldSet(1, 1, delay_acf, angle_acf), std::invalid_argument);
}
