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

#ifndef SSFGEN_GEOMETRY_HPP
#define SSFGEN_GEOMETRY_HPP

#include <cmath>
#include <stdexcept>

namespace ssfgen
{

constexpr double pi = 3.141592653589793;
constexpr double two_pi = 6.283185307179586;
constexpr double deg2rad = pi / 180.0;
constexpr double rad2deg = 180.0 / pi;

/// 3-D position in metric Cartesian coordinates.
struct Vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline Vec3 operator+(const Vec3 &a, const Vec3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3 &a, const Vec3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3 &v) { return {s * v.x, s * v.y, s * v.z}; }

inline double norm(const Vec3 &v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

/// TX/RX endpoint positions of one link. Both ends may be mobile.
struct LinkGeometry
{
    Vec3 tx_pos;
    Vec3 rx_pos;

    LinkGeometry(const Vec3 &tx, const Vec3 &rx) : tx_pos(tx), rx_pos(rx)
    {
        if (!tx.finite() || !rx.finite())
            throw std::invalid_argument("link geometry: positions must be finite");
        if (tx.x == rx.x && tx.y == rx.y && tx.z == rx.z)
            throw std::invalid_argument("link geometry: TX and RX positions coincide");
    }

    double distance_2d() const
    {
        return std::hypot(rx_pos.x - tx_pos.x, rx_pos.y - tx_pos.y);
    }

    double distance_3d() const { return norm(rx_pos - tx_pos); }

    LinkGeometry swapped() const { return LinkGeometry(rx_pos, tx_pos); }
};

/// Wrap an angle to (-pi, pi].
inline double wrap_pi(double a)
{
    double w = std::remainder(a, two_pi);
    if (w <= -pi)
        w = pi;
    return w;
}

/// Shortest signed angular difference a-b on the circle.
inline double ang_diff(double a, double b) { return wrap_pi(a - b); }

} // namespace ssfgen

#endif
