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

// Test-side reference implementations, kept independent of the library's
// estimator code paths. These spell the moment formulas out literally and
// use their own accumulation order.

#ifndef SSFGEN_TESTS_ORACLES_HPP
#define SSFGEN_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracles
{

// rms delay spread in the raw second-moment form
inline double naive_delay_spread(const std::vector<double> &tau, const std::vector<double> &p)
{
    double ptot = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t l = 0; l < tau.size(); ++l)
    {
        ptot += p[l];
        m1 += p[l] * tau[l];
        m2 += p[l] * tau[l] * tau[l];
    }
    m1 /= ptot;
    m2 /= ptot;
    return std::sqrt(std::max(m2 - m1 * m1, 0.0));
}

inline double naive_wrap(double a)
{
    while (a > 3.141592653589793)
        a -= 6.283185307179586;
    while (a <= -3.141592653589793)
        a += 6.283185307179586;
    return a;
}

// circular-mean removal, rewrap, then the raw second-moment rms
inline double naive_angular_spread(const std::vector<double> &phi, const std::vector<double> &p)
{
    double re = 0.0, im = 0.0, ptot = 0.0;
    for (std::size_t l = 0; l < phi.size(); ++l)
    {
        re += p[l] * std::cos(phi[l]);
        im += p[l] * std::sin(phi[l]);
        ptot += p[l];
    }
    const double delta = std::atan2(im, re);
    double m1 = 0.0, m2 = 0.0;
    for (std::size_t l = 0; l < phi.size(); ++l)
    {
        const double shifted = naive_wrap(phi[l] - delta);
        m1 += p[l] * shifted;
        m2 += p[l] * shifted * shifted;
    }
    m1 /= ptot;
    m2 /= ptot;
    return std::sqrt(std::max(m2 - m1 * m1, 0.0));
}

// Largest angular spread reachable when the first path sits at angle zero
// with the power share fixed by the K-factor and the remaining power may be
// placed anywhere on the circle. Grid search over one- and two-group
// placements with a free power split, then local refinement.
inline double max_as_bruteforce(double kf_linear)
{
    const double p1 = kf_linear / (1.0 + kf_linear);
    const double q = 1.0 - p1;
    const double deg = 3.141592653589793 / 180.0;

    auto spread = [&](double a, double b, double lambda) {
        const std::vector<double> phi{0.0, a, b};
        const std::vector<double> p{p1, q * lambda, q * (1.0 - lambda)};
        return naive_angular_spread(phi, p);
    };

    double best = 0.0, best_a = 0.0, best_b = 0.0, best_l = 0.5;
    for (int ia = 0; ia <= 180; ++ia)
    {
        const double a = ia * deg;
        // single group
        double v = spread(a, 0.0, 1.0);
        if (v > best)
        {
            best = v;
            best_a = a;
            best_b = 0.0;
            best_l = 1.0;
        }
        // symmetric and asymmetric two-group placements
        for (int ib = 0; ib <= 180; ib += 2)
        {
            const double b = -ib * deg;
            for (double lambda : {0.25, 0.5, 0.75})
            {
                v = spread(a, b, lambda);
                if (v > best)
                {
                    best = v;
                    best_a = a;
                    best_b = b;
                    best_l = lambda;
                }
            }
        }
    }
    // local refinement with shrinking steps
    double step_ang = 1.0 * deg, step_l = 0.1;
    for (int it = 0; it < 60; ++it)
    {
        bool improved = false;
        for (double da : {-step_ang, 0.0, step_ang})
            for (double db : {-step_ang, 0.0, step_ang})
                for (double dl : {-step_l, 0.0, step_l})
                {
                    const double l2 = std::clamp(best_l + dl, 0.0, 1.0);
                    const double v = spread(best_a + da, best_b + db, l2);
                    if (v > best)
                    {
                        best = v;
                        best_a += da;
                        best_b += db;
                        best_l = l2;
                        improved = true;
                    }
                }
        if (!improved)
        {
            step_ang *= 0.5;
            step_l *= 0.5;
        }
    }
    return best;
}

// Kolmogorov-Smirnov distance of a sample set to the uniform law on [lo, hi]
inline double ks_distance_uniform(std::vector<double> samples, double lo, double hi)
{
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i)
    {
        const double f = (samples[i] - lo) / (hi - lo);
        worst = std::max(worst, std::abs((i + 1) / n - f));
        worst = std::max(worst, std::abs(f - i / n));
    }
    return worst;
}

// great-circle angle between two (azimuth, elevation) directions
inline double central_angle(double az1, double el1, double az2, double el2)
{
    const double x1 = std::cos(el1) * std::cos(az1), y1 = std::cos(el1) * std::sin(az1),
                 z1 = std::sin(el1);
    const double x2 = std::cos(el2) * std::cos(az2), y2 = std::cos(el2) * std::sin(az2),
                 z2 = std::sin(el2);
    const double dot = std::clamp(x1 * x2 + y1 * y2 + z1 * z2, -1.0, 1.0);
    const double cx = y1 * z2 - z1 * y2, cy = z1 * x2 - x1 * z2, cz = x1 * y2 - y1 * x2;
    return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), dot);
}

} // namespace oracles

#endif
