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

#ifndef SSFGEN_RUNNER_HPP
#define SSFGEN_RUNNER_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ssfgen/lsf.hpp"
#include "ssfgen/metrics.hpp"
#include "ssfgen/ssf.hpp"

namespace ssfgen
{

// Drop evaluation and diagnostic runs behind the CLI subcommands. All runs are
// deterministic in (config, seed): per-MT work is parallelized with seeds
// derived from the MT index, and output files are written in MT order on one
// thread, so the thread count never changes a byte of output.

struct RunSpec
{
    std::uint64_t seed = 1;
    int mt_count = 500;
    double radius_m = 200.0;
    double bs_height_m = 10.0;
    double mt_height_m = 1.5;
    std::string out_dir = "out";
    int threads = 0; // 0: OpenMP default

    void validate() const;
};

/// One mobile terminal's evaluation record: the drawn large-scale input and
/// the spreads recomputed from the generated paths, for both conditions.
struct MtEvalRecord
{
    Vec3 mt_pos;
    std::array<LsfSample, 2> input;       // indexed by Condition
    std::array<SpreadReport, 2> output;
    std::array<PathDiagnostics, 2> diag;
};

struct EvalResult
{
    std::vector<double> frequencies_ghz;
    std::vector<MtEvalRecord> mts;
};

/// Input-vs-output distribution run: place MTs uniformly in the disk, draw
/// large-scale parameters, generate paths and recompute the spreads for both
/// propagation conditions of the scenario.
EvalResult run_eval(const ScenarioFile &scenario, const RunSpec &spec);

/// Per-parameter CSV bodies (keys ds, asd, asa, esd, esa) with columns
/// frequency_ghz, condition, input_value, output_value. Delay spreads in
/// seconds, angle spreads in degrees.
std::map<std::string, std::string> eval_csv_tables(const EvalResult &result);

/// Median summary CSV: parameter, condition, frequency_ghz, input_median,
/// output_median, output_input_ratio.
std::string eval_summary_csv(const EvalResult &result);

struct MaxAsResult
{
    std::vector<MaxAsPoint> azimuth;
    std::vector<MaxAsPoint> elevation;
};

MaxAsResult run_max_as(const ScenarioFile &scenario, const RunSpec &spec, double kf_min_db,
                       double kf_max_db, double kf_step_db, double target_as_deg, int n_seeds);

std::string max_as_csv(const MaxAsResult &result);

struct AcfRow
{
    double distance_m = 0.0;
    double empirical_rho = 0.0;
    double target_rho = 0.0;
};

struct AcfCheckResult
{
    std::vector<AcfRow> delay_rows;
    std::vector<AcfRow> angle_rows;
};

/// Empirical-vs-target autocorrelation of freshly built fields, one row set
/// per configured decorrelation-distance class.
AcfCheckResult run_acf_check(double delay_decorr_m, double angle_decorr_m, std::uint64_t seed,
                             std::size_t n_sinusoids = default_sinusoid_count);

std::string acf_csv(const std::vector<AcfRow> &rows);

struct GenResult
{
    std::string scenario;
    Condition condition = Condition::los;
    std::vector<double> frequencies_ghz;
    Vec3 tx_pos, rx_pos;
    LsfSample lsf;
    PathTable table;
};

/// Generate one link's path table for inspection or downstream consumption.
GenResult run_gen(const ScenarioFile &scenario, Condition condition, const Vec3 &tx,
                  const Vec3 &rx, std::uint64_t seed);

std::string gen_json(const GenResult &result, std::uint64_t seed);

/// Write a file, creating the directory if needed. Throws on failure.
void write_text_file(const std::string &dir, const std::string &name, const std::string &body);

/// Fixed-format floating point used in all CSV output.
std::string csv_double(double v);

} // namespace ssfgen

#endif
