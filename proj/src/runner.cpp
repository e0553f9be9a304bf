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

#include "ssfgen/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

#include "ssfgen/rng.hpp"

namespace ssfgen
{

namespace
{

int resolve_threads(int requested)
{
#ifdef _OPENMP
    return requested > 0 ? requested : omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

Vec3 place_mt(std::uint64_t master_seed, int mt_index, const RunSpec &spec)
{
    Rng rng(derive_seed(derive_seed(master_seed, seed_stream::mt_placement),
                        static_cast<std::uint64_t>(mt_index)));
    const double r = spec.radius_m * std::sqrt(rng.uniform01());
    const double ang = rng.uniform(0.0, two_pi);
    return {r * std::cos(ang), r * std::sin(ang), spec.mt_height_m};
}

MtEvalRecord eval_one_mt(const ScenarioFile &scenario, const RunSpec &spec, int mt_index)
{
    MtEvalRecord rec;
    rec.mt_pos = place_mt(spec.seed, mt_index, spec);
    const LinkGeometry geom({0.0, 0.0, spec.bs_height_m}, rec.mt_pos);

    const std::uint64_t lsf_tags[2] = {seed_stream::lsf_los, seed_stream::lsf_nlos};
    const std::uint64_t field_tags[2] = {seed_stream::fields_los, seed_stream::fields_nlos};
    for (int c = 0; c < 2; ++c)
    {
        const ScenarioConfig &cfg = scenario.get(static_cast<Condition>(c));
        const std::uint64_t lsf_seed = derive_seed(derive_seed(spec.seed, lsf_tags[c]),
                                                   static_cast<std::uint64_t>(mt_index));
        const std::uint64_t field_seed = derive_seed(derive_seed(spec.seed, field_tags[c]),
                                                     static_cast<std::uint64_t>(mt_index));
        rec.input[c] = sample_lsf(cfg, geom, lsf_seed);
        const FieldSet fields(field_seed, cfg.path_count, AcfSpec(cfg.delay_decorr_m),
                              AcfSpec(cfg.angle_decorr_m), cfg.sos_sinusoids);
        const PathTable table = generate_paths(fields, geom, rec.input[c], cfg, &rec.diag[c]);
        rec.output[c] = compute_spread_report(table);
    }
    return rec;
}

double median_of(std::vector<double> v)
{
    return EmpiricalCdf::from_samples(std::move(v)).median();
}

struct ParamView
{
    const char *name;
    const std::vector<double> &(*input)(const LsfSample &);
    const std::vector<double> &(*output)(const SpreadReport &);
    bool in_degrees;
};

const ParamView param_views[5] = {
    {"ds", [](const LsfSample &s) -> const std::vector<double> & { return s.ds_s; },
     [](const SpreadReport &r) -> const std::vector<double> & { return r.ds_s; }, false},
    {"asd", [](const LsfSample &s) -> const std::vector<double> & { return s.asd_rad; },
     [](const SpreadReport &r) -> const std::vector<double> & { return r.asd_rad; }, true},
    {"asa", [](const LsfSample &s) -> const std::vector<double> & { return s.asa_rad; },
     [](const SpreadReport &r) -> const std::vector<double> & { return r.asa_rad; }, true},
    {"esd", [](const LsfSample &s) -> const std::vector<double> & { return s.esd_rad; },
     [](const SpreadReport &r) -> const std::vector<double> & { return r.esd_rad; }, true},
    {"esa", [](const LsfSample &s) -> const std::vector<double> & { return s.esa_rad; },
     [](const SpreadReport &r) -> const std::vector<double> & { return r.esa_rad; }, true},
};

} // namespace

void RunSpec::validate() const
{
    if (mt_count < 1)
        throw std::invalid_argument("run spec: MT count must be >= 1");
    if (!(radius_m > 0.0))
        throw std::invalid_argument("run spec: radius must be positive");
    if (bs_height_m < 0.0 || mt_height_m < 0.0)
        throw std::invalid_argument("run spec: heights must be non-negative");
}

EvalResult run_eval(const ScenarioFile &scenario, const RunSpec &spec)
{
    spec.validate();
    EvalResult result;
    result.frequencies_ghz = scenario.los.frequencies_ghz;
    result.mts.resize(static_cast<std::size_t>(spec.mt_count));

    const int n_threads = resolve_threads(spec.threads);
#pragma omp parallel for schedule(dynamic) num_threads(n_threads)
    for (int mt = 0; mt < spec.mt_count; ++mt)
        result.mts[static_cast<std::size_t>(mt)] = eval_one_mt(scenario, spec, mt);
    return result;
}

std::string csv_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::map<std::string, std::string> eval_csv_tables(const EvalResult &result)
{
    std::map<std::string, std::string> tables;
    for (const ParamView &view : param_views)
    {
        std::string csv = "frequency_ghz,condition,input_value,output_value\n";
        for (const MtEvalRecord &rec : result.mts)
            for (int c = 0; c < 2; ++c)
                for (std::size_t f = 0; f < result.frequencies_ghz.size(); ++f)
                {
                    const double unit = view.in_degrees ? rad2deg : 1.0;
                    csv += csv_double(result.frequencies_ghz[f]);
                    csv += ',';
                    csv += to_string(static_cast<Condition>(c));
                    csv += ',';
                    csv += csv_double(view.input(rec.input[c])[f] * unit);
                    csv += ',';
                    csv += csv_double(view.output(rec.output[c])[f] * unit);
                    csv += '\n';
                }
        tables[view.name] = std::move(csv);
    }
    return tables;
}

std::string eval_summary_csv(const EvalResult &result)
{
    std::string csv = "parameter,condition,frequency_ghz,input_median,output_median,"
                      "output_input_ratio\n";
    for (const ParamView &view : param_views)
        for (int c = 0; c < 2; ++c)
            for (std::size_t f = 0; f < result.frequencies_ghz.size(); ++f)
            {
                const double unit = view.in_degrees ? rad2deg : 1.0;
                std::vector<double> in, out;
                in.reserve(result.mts.size());
                out.reserve(result.mts.size());
                for (const MtEvalRecord &rec : result.mts)
                {
                    in.push_back(view.input(rec.input[c])[f] * unit);
                    out.push_back(view.output(rec.output[c])[f] * unit);
                }
                const double med_in = median_of(std::move(in));
                const double med_out = median_of(std::move(out));
                csv += view.name;
                csv += ',';
                csv += to_string(static_cast<Condition>(c));
                csv += ',';
                csv += csv_double(result.frequencies_ghz[f]);
                csv += ',';
                csv += csv_double(med_in);
                csv += ',';
                csv += csv_double(med_out);
                csv += ',';
                csv += csv_double(med_out / med_in);
                csv += '\n';
            }
    return csv;
}

MaxAsResult run_max_as(const ScenarioFile &scenario, const RunSpec &spec, double kf_min_db,
                       double kf_max_db, double kf_step_db, double target_as_deg, int n_seeds)
{
    spec.validate();
    if (!(kf_step_db > 0.0) || kf_max_db < kf_min_db)
        throw std::invalid_argument("max-as: invalid K-factor grid");
    std::vector<double> grid;
    for (double kf = kf_min_db; kf <= kf_max_db + 1e-9; kf += kf_step_db)
        grid.push_back(kf);

    // the sweep treats the K-factor as a free model input; the LOS section
    // supplies the path count and field setup
    const ScenarioConfig &cfg = scenario.los;
    MaxAsResult result;
    result.azimuth = max_as_sweep(grid, target_as_deg * deg2rad, AngleDimension::azimuth, cfg,
                                  spec.seed, n_seeds);
    result.elevation = max_as_sweep(grid, target_as_deg * deg2rad, AngleDimension::elevation, cfg,
                                    spec.seed, n_seeds);
    return result;
}

std::string max_as_csv(const MaxAsResult &result)
{
    std::string csv = "kf_db,dimension,achieved_as_deg\n";
    for (const MaxAsPoint &p : result.azimuth)
        csv += csv_double(p.kf_db) + ",azimuth," + csv_double(p.achieved_as_rad * rad2deg) + "\n";
    for (const MaxAsPoint &p : result.elevation)
        csv += csv_double(p.kf_db) + ",elevation," + csv_double(p.achieved_as_rad * rad2deg) + "\n";
    return csv;
}

namespace
{

std::vector<AcfRow> acf_rows_for(double decorr_m, std::uint64_t seed, std::size_t n_sinusoids)
{
    const AcfSpec spec(decorr_m);
    constexpr int n_fields = 4;
    constexpr int pairs_per_field = 1200;
    constexpr int n_lags = 33; // 0 .. 4 d_lambda in d_lambda/8 steps

    std::vector<AcfRow> rows(n_lags);
    std::vector<SosField> fields;
    fields.reserve(n_fields);
    for (int i = 0; i < n_fields; ++i)
        fields.emplace_back(derive_seed(seed, static_cast<std::uint64_t>(i)), spec, n_sinusoids);

    Rng rng(derive_seed(seed, 0xACFULL));
    const double box = 64.0 * decorr_m;
    std::vector<Vec3> a(n_fields * pairs_per_field), b(a.size());
    std::vector<double> va(a.size()), vb(a.size());

    for (int lag = 0; lag < n_lags; ++lag)
    {
        const double d = decorr_m * static_cast<double>(lag) / 8.0;
        for (std::size_t i = 0; i < a.size(); ++i)
        {
            a[i] = {rng.uniform(0.0, box), rng.uniform(0.0, box), rng.uniform(0.0, box)};
            const double cz = rng.uniform(-1.0, 1.0);
            const double az = rng.uniform(0.0, two_pi);
            const double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
            b[i] = a[i] + d * Vec3{sz * std::cos(az), sz * std::sin(az), cz};
        }
        for (int i = 0; i < n_fields; ++i)
        {
            const std::size_t off = static_cast<std::size_t>(i) * pairs_per_field;
            fields[static_cast<std::size_t>(i)].evaluate_many(
                std::span<const Vec3>(a).subspan(off, pairs_per_field),
                std::span<double>(va).subspan(off, pairs_per_field));
            fields[static_cast<std::size_t>(i)].evaluate_many(
                std::span<const Vec3>(b).subspan(off, pairs_per_field),
                std::span<double>(vb).subspan(off, pairs_per_field));
        }
        double acc = 0.0;
        for (std::size_t i = 0; i < va.size(); ++i)
            acc += va[i] * vb[i];
        rows[lag] = {d, acc / static_cast<double>(va.size()), acf_target(d, spec)};
    }
    return rows;
}

} // namespace

AcfCheckResult run_acf_check(double delay_decorr_m, double angle_decorr_m, std::uint64_t seed,
                             std::size_t n_sinusoids)
{
    AcfCheckResult r;
    r.delay_rows = acf_rows_for(delay_decorr_m, derive_seed(seed, seed_stream::delay_field),
                                n_sinusoids);
    r.angle_rows = acf_rows_for(angle_decorr_m, derive_seed(seed, seed_stream::azimuth_field_a),
                                n_sinusoids);
    return r;
}

std::string acf_csv(const std::vector<AcfRow> &rows)
{
    std::string csv = "distance_m,empirical_rho,target_rho\n";
    for (const AcfRow &r : rows)
        csv += csv_double(r.distance_m) + "," + csv_double(r.empirical_rho) + "," +
               csv_double(r.target_rho) + "\n";
    return csv;
}

namespace
{

bool endpoint_before(const Vec3 &a, const Vec3 &b)
{
    if (a.x != b.x)
        return a.x < b.x;
    if (a.y != b.y)
        return a.y < b.y;
    return a.z < b.z;
}

} // namespace

GenResult run_gen(const ScenarioFile &scenario, Condition condition, const Vec3 &tx,
                  const Vec3 &rx, std::uint64_t seed)
{
    const ScenarioConfig &cfg = scenario.get(condition);
    const LinkGeometry geom(tx, rx);
    GenResult r;
    r.scenario = scenario.scenario;
    r.condition = condition;
    r.frequencies_ghz = cfg.frequencies_ghz;
    r.tx_pos = tx;
    r.rx_pos = rx;

    // the large-scale draw belongs to the link, not to the calling direction:
    // sample on a canonical endpoint order and exchange roles if the caller's
    // direction is the reverse, so swapped TX/RX calls describe one channel
    const bool canonical = endpoint_before(tx, rx);
    const LinkGeometry canon_geom = canonical ? geom : geom.swapped();
    const std::uint64_t tag = condition == Condition::los ? seed_stream::lsf_los
                                                          : seed_stream::lsf_nlos;
    const LsfSample canon_lsf = sample_lsf(cfg, canon_geom, derive_seed(seed, tag));
    r.lsf = canonical ? canon_lsf : swap_link_roles(canon_lsf);

    const std::uint64_t ftag = condition == Condition::los ? seed_stream::fields_los
                                                           : seed_stream::fields_nlos;
    const FieldSet fields(derive_seed(seed, ftag), cfg.path_count, AcfSpec(cfg.delay_decorr_m),
                          AcfSpec(cfg.angle_decorr_m), cfg.sos_sinusoids);
    r.table = generate_paths(fields, geom, r.lsf, cfg);
    return r;
}

std::string gen_json(const GenResult &result, std::uint64_t seed)
{
    nlohmann::json j;
    j["scenario"] = result.scenario;
    j["condition"] = to_string(result.condition);
    j["seed"] = seed;
    j["frequencies_ghz"] = result.frequencies_ghz;
    j["tx_pos_m"] = {result.tx_pos.x, result.tx_pos.y, result.tx_pos.z};
    j["rx_pos_m"] = {result.rx_pos.x, result.rx_pos.y, result.rx_pos.z};
    j["delays_s"] = result.table.delay_s;
    j["powers"] = result.table.power;
    j["aod_azimuth_rad"] = result.table.aod_az;
    j["aoa_azimuth_rad"] = result.table.aoa_az;
    j["aod_elevation_rad"] = result.table.aod_el;
    j["aoa_elevation_rad"] = result.table.aoa_el;
    j["lsf_input"] = {{"ds_s", result.lsf.ds_s},
                      {"asd_rad", result.lsf.asd_rad},
                      {"asa_rad", result.lsf.asa_rad},
                      {"esd_rad", result.lsf.esd_rad},
                      {"esa_rad", result.lsf.esa_rad},
                      {"kf_linear", result.lsf.kf_linear}};
    return j.dump(2) + "\n";
}

void write_text_file(const std::string &dir, const std::string &name, const std::string &body)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path path = fs::path(dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << body;
    if (!out)
        throw std::runtime_error("write failed for '" + path.string() + "'");
}

} // namespace ssfgen
