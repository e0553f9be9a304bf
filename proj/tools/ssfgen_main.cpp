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

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssfgen/runner.hpp"

namespace
{

struct CommonOpts
{
    std::string config_path;
    ssfgen::RunSpec spec;
};

void add_common(CLI::App *cmd, CommonOpts &o, bool config_required)
{
    auto *cfg = cmd->add_option("--config", o.config_path, "scenario config file (YAML)");
    if (config_required)
        cfg->required();
    cmd->add_option("--seed", o.spec.seed, "master seed")->capture_default_str();
    cmd->add_option("--mts", o.spec.mt_count, "number of mobile terminals")->capture_default_str();
    cmd->add_option("--radius-m", o.spec.radius_m, "cell radius in meters")->capture_default_str();
    cmd->add_option("--bs-height-m", o.spec.bs_height_m, "base station height in meters")
        ->capture_default_str();
    cmd->add_option("--mt-height-m", o.spec.mt_height_m, "mobile terminal height in meters")
        ->capture_default_str();
    cmd->add_option("--out", o.spec.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--threads", o.spec.threads, "worker threads (0: all cores)")
        ->capture_default_str();
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"ssfgen - spatially consistent multi-frequency small-scale fading generator"};
    app.require_subcommand(1);

    CommonOpts eval_o, max_as_o, acf_o, gen_o;

    CLI::App *eval = app.add_subcommand(
        "eval", "input-vs-output distribution run; writes per-parameter and summary CSV files");
    add_common(eval, eval_o, true);

    CLI::App *max_as = app.add_subcommand(
        "max-as", "achieved angular spread versus K-factor; writes max_as.csv");
    add_common(max_as, max_as_o, true);
    double kf_min_db = -30.0, kf_max_db = 30.0, kf_step_db = 2.0, as_deg = 100.0;
    int sweep_seeds = 100;
    max_as->add_option("--kf-min-db", kf_min_db, "grid start")->capture_default_str();
    max_as->add_option("--kf-max-db", kf_max_db, "grid end")->capture_default_str();
    max_as->add_option("--kf-step-db", kf_step_db, "grid step")->capture_default_str();
    max_as->add_option("--as-deg", as_deg, "requested angular spread")->capture_default_str();
    max_as->add_option("--sweep-seeds", sweep_seeds, "realizations per grid point")
        ->capture_default_str();

    CLI::App *acf = app.add_subcommand(
        "acf-check", "empirical vs target field autocorrelation; writes acf_delay.csv and "
                     "acf_angle.csv");
    add_common(acf, acf_o, false);

    CLI::App *gen = app.add_subcommand("gen", "generate one path table; writes paths.json");
    add_common(gen, gen_o, true);
    std::vector<double> tx_pos{0.0, 0.0, 10.0}, rx_pos{100.0, 0.0, 1.5};
    std::string condition_str = "los";
    gen->add_option("--tx", tx_pos, "TX position x y z in meters")->expected(3);
    gen->add_option("--rx", rx_pos, "RX position x y z in meters")->expected(3);
    gen->add_option("--condition", condition_str, "los or nlos")
        ->check(CLI::IsMember({"los", "nlos"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (eval->parsed())
        {
            const ssfgen::ScenarioFile scen = ssfgen::load_config(eval_o.config_path);
            const ssfgen::EvalResult result = ssfgen::run_eval(scen, eval_o.spec);
            for (const auto &[name, body] : ssfgen::eval_csv_tables(result))
                ssfgen::write_text_file(eval_o.spec.out_dir, name + ".csv", body);
            ssfgen::write_text_file(eval_o.spec.out_dir, "summary.csv",
                                    ssfgen::eval_summary_csv(result));
            std::cout << "wrote " << eval_o.spec.out_dir
                      << "/{ds,asd,asa,esd,esa,summary}.csv for " << result.mts.size()
                      << " MTs\n";
        }
        else if (max_as->parsed())
        {
            const ssfgen::ScenarioFile scen = ssfgen::load_config(max_as_o.config_path);
            const ssfgen::MaxAsResult result = ssfgen::run_max_as(
                scen, max_as_o.spec, kf_min_db, kf_max_db, kf_step_db, as_deg, sweep_seeds);
            ssfgen::write_text_file(max_as_o.spec.out_dir, "max_as.csv",
                                    ssfgen::max_as_csv(result));
            std::cout << "wrote " << max_as_o.spec.out_dir << "/max_as.csv\n";
        }
        else if (acf->parsed())
        {
            double delay_dc = 15.0, angle_dc = 15.0;
            std::size_t sinusoids = ssfgen::default_sinusoid_count;
            if (!acf_o.config_path.empty())
            {
                const ssfgen::ScenarioFile scen = ssfgen::load_config(acf_o.config_path);
                delay_dc = scen.los.delay_decorr_m;
                angle_dc = scen.los.angle_decorr_m;
                sinusoids = scen.los.sos_sinusoids;
            }
            const ssfgen::AcfCheckResult result =
                ssfgen::run_acf_check(delay_dc, angle_dc, acf_o.spec.seed, sinusoids);
            ssfgen::write_text_file(acf_o.spec.out_dir, "acf_delay.csv",
                                    ssfgen::acf_csv(result.delay_rows));
            ssfgen::write_text_file(acf_o.spec.out_dir, "acf_angle.csv",
                                    ssfgen::acf_csv(result.angle_rows));
            std::cout << "wrote " << acf_o.spec.out_dir << "/acf_{delay,angle}.csv\n";
        }
        else if (gen->parsed())
        {
            const ssfgen::ScenarioFile scen = ssfgen::load_config(gen_o.config_path);
            const ssfgen::Condition cond = condition_str == "los" ? ssfgen::Condition::los
                                                                  : ssfgen::Condition::nlos;
            const ssfgen::GenResult result =
                ssfgen::run_gen(scen, cond, {tx_pos[0], tx_pos[1], tx_pos[2]},
                                {rx_pos[0], rx_pos[1], rx_pos[2]}, gen_o.spec.seed);
            ssfgen::write_text_file(gen_o.spec.out_dir, "paths.json",
                                    ssfgen::gen_json(result, gen_o.spec.seed));
            std::cout << "wrote " << gen_o.spec.out_dir << "/paths.json\n";
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
