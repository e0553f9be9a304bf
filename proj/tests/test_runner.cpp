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
#include <string>

#include "ssfgen/runner.hpp"

using namespace ssfgen;

#ifndef SSFGEN_CONFIG_DIR
#define SSFGEN_CONFIG_DIR "configs"
#endif

namespace
{

const ScenarioFile &umi()
{
    static const ScenarioFile scen = load_config(std::string(SSFGEN_CONFIG_DIR) + "/umi.yaml");
    return scen;
}

} // namespace

TEST_CASE("run_eval: byte-identical output for equal seeds and any thread count")
{
    RunSpec spec;
    spec.seed = 99;
    spec.mt_count = 12;

    spec.threads = 1;
    const EvalResult serial = run_eval(umi(), spec);
    spec.threads = 2;
    const EvalResult parallel = run_eval(umi(), spec);
    const EvalResult repeat = run_eval(umi(), spec);

    const auto t_serial = eval_csv_tables(serial);
    const auto t_parallel = eval_csv_tables(parallel);
    const auto t_repeat = eval_csv_tables(repeat);
    REQUIRE(t_serial.size() == 5);
    for (const auto &[name, body] : t_serial)
    {
        CHECK(body == t_parallel.at(name));
        CHECK(body == t_repeat.at(name));
    }
    CHECK(eval_summary_csv(serial) == eval_summary_csv(parallel));

    // different seed changes the bytes
    spec.seed = 100;
    const EvalResult other = run_eval(umi(), spec);
    CHECK(eval_csv_tables(other).at("ds") != t_serial.at("ds"));
}

TEST_CASE("run_eval: single MT, row layout and units")
{
    RunSpec spec;
    spec.seed = 5;
    spec.mt_count = 1;
    const EvalResult r = run_eval(umi(), spec);
    REQUIRE(r.mts.size() == 1);

    const auto tables = eval_csv_tables(r);
    // header + 2 conditions x 3 frequencies
    for (const auto &[name, body] : tables)
    {
        const std::size_t rows = static_cast<std::size_t>(std::count(body.begin(), body.end(), '\n'));
        CHECK(rows == 1 + 2 * 3);
    }
    CHECK(tables.at("ds").rfind("frequency_ghz,condition,input_value,output_value\n", 0) == 0);

    const std::string summary = eval_summary_csv(r);
    CHECK(summary.find("esd,los,") != std::string::npos);
    CHECK(summary.find("esd,nlos,") != std::string::npos);

    // inside the disk, at the configured height
    CHECK(std::hypot(r.mts[0].mt_pos.x, r.mts[0].mt_pos.y) <= spec.radius_m);
    CHECK(r.mts[0].mt_pos.z == spec.mt_height_m);
}

TEST_CASE("run_eval: invalid run specs are rejected")
{
    RunSpec spec;
    spec.mt_count = 0;
    CHECK_THROWS_AS(run_eval(umi(), spec), std::invalid_argument);
    spec.mt_count = 1;
    spec.radius_m = -5.0;
    CHECK_THROWS_AS(run_eval(umi(), spec), std::invalid_argument);
}

TEST_CASE("run_gen: path-table JSON invariants and reciprocity of delays")
{
    const GenResult fwd = run_gen(umi(), Condition::los, {0.0, 0.0, 10.0}, {60.0, 25.0, 1.5}, 7);
    REQUIRE(fwd.table.frequency_count() == 3);
    REQUIRE(fwd.table.path_count() == 12);
    for (const auto &p : fwd.table.power)
    {
        double total = 0.0;
        for (double v : p)
            total += v;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }

    const std::string json = gen_json(fwd, 7);
    CHECK(json.find("\"delays_s\"") != std::string::npos);
    CHECK(json.find("\"powers\"") != std::string::npos);
    CHECK(json.find("\"condition\": \"los\"") != std::string::npos);

    // swapped endpoints with the same seed describe the same channel:
    // identical delays, departure and arrival exchanged
    const GenResult rev = run_gen(umi(), Condition::los, {60.0, 25.0, 1.5}, {0.0, 0.0, 10.0}, 7);
    CHECK(fwd.table.delay_s == rev.table.delay_s);
    CHECK(fwd.table.aod_az == rev.table.aoa_az);
    CHECK(fwd.table.aoa_az == rev.table.aod_az);
    CHECK(fwd.table.aod_el == rev.table.aoa_el);
    CHECK(fwd.table.aoa_el == rev.table.aod_el);

    // repeat call is byte-identical
    const GenResult again = run_gen(umi(), Condition::los, {0.0, 0.0, 10.0}, {60.0, 25.0, 1.5}, 7);
    CHECK(gen_json(fwd, 7) == gen_json(again, 7));
}

TEST_CASE("run_acf_check: endpoints and targets")
{
    const AcfCheckResult r = run_acf_check(15.0, 15.0, 3, 300);
    REQUIRE(r.delay_rows.size() == 33);
    CHECK(r.delay_rows[0].distance_m == 0.0);
    CHECK(r.delay_rows[0].target_rho == 1.0);
    CHECK(std::abs(r.delay_rows[0].empirical_rho - 1.0) < 0.05);

    // row at d_lambda: target exp(-1), empirical within +-0.07
    const AcfRow &at_dl = r.delay_rows[8];
    CHECK(at_dl.distance_m == 15.0);
    CHECK(at_dl.target_rho == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(std::abs(at_dl.empirical_rho - std::exp(-1.0)) < 0.07);

    const AcfRow &at_2dl = r.delay_rows[16];
    CHECK(at_2dl.target_rho == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));

    const std::string csv = acf_csv(r.delay_rows);
    CHECK(csv.rfind("distance_m,empirical_rho,target_rho\n", 0) == 0);
}

TEST_CASE("run_max_as: csv shape")
{
    RunSpec spec;
    spec.seed = 2;
    const MaxAsResult r = run_max_as(umi(), spec, -30.0, -30.0, 2.0, 100.0, 5);
    REQUIRE(r.azimuth.size() == 1);
    REQUIRE(r.elevation.size() == 1);
    const std::string csv = max_as_csv(r);
    CHECK(csv.rfind("kf_db,dimension,achieved_as_deg\n", 0) == 0);
    CHECK(csv.find(",azimuth,") != std::string::npos);
    CHECK(csv.find(",elevation,") != std::string::npos);
    CHECK_THROWS_AS(run_max_as(umi(), spec, 0.0, -10.0, 2.0, 100.0, 5), std::invalid_argument);
}
