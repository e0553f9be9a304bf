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

#ifndef SSFGEN_RNG_HPP
#define SSFGEN_RNG_HPP

#include <cmath>
#include <cstdint>

namespace ssfgen
{

/// SplitMix64 finalizer. Bijective on 64-bit integers, used for seed mixing.
inline std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Derive an independent sub-seed from a base seed and a stream index.
/// Counter-based, so the mapping is stable across platforms and processes.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream)
{
    return mix64(base ^ mix64(stream + 0x632BE59BD9B4E019ULL));
}

// Stream tags used when splitting a master seed. Values are arbitrary but fixed.
namespace seed_stream
{
    constexpr std::uint64_t delay_field = 0x01;
    constexpr std::uint64_t azimuth_field_a = 0x02;
    constexpr std::uint64_t azimuth_field_b = 0x03;
    constexpr std::uint64_t elevation_field_a = 0x04;
    constexpr std::uint64_t elevation_field_b = 0x05;
    constexpr std::uint64_t mt_placement = 0x10;
    constexpr std::uint64_t lsf_los = 0x11;
    constexpr std::uint64_t lsf_nlos = 0x12;
    constexpr std::uint64_t fields_los = 0x13;
    constexpr std::uint64_t fields_nlos = 0x14;
    constexpr std::uint64_t sweep = 0x20;
} // namespace seed_stream

/// Minimal counter-free PRNG built on the SplitMix64 stream. All draws are
/// computed from raw 64-bit words with explicit arithmetic, so sequences are
/// bit-identical on every conforming platform.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64()
    {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw on the open interval (0,1); never returns 0 or 1.
    double uniform01()
    {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller. Consumes two uniforms per draw.
    double normal()
    {
        double u1 = uniform01();
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

  private:
    std::uint64_t state_;
};

} // namespace ssfgen

#endif
