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

#include "ssfgen/lsf.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <yaml-cpp/yaml.h>

#include "ssfgen/rng.hpp"

namespace ssfgen
{

double AffineLogParam::eval(double f_ghz, double d2d_m, double dh_m) const
{
    double v = base + per_log1f * std::log10(1.0 + f_ghz) + per_d2d_km * (d2d_m / 1000.0) +
               per_dh_abs * std::abs(dh_m) + per_dh_pos * std::max(dh_m, 0.0);
    return std::clamp(v, min, max);
}

namespace
{

[[noreturn]] void fail(const std::string &field, const std::string &what)
{
    throw std::invalid_argument("config: " + field + ": " + what);
}

void reject_unknown_keys(const YAML::Node &node, const std::set<std::string> &allowed,
                         const std::string &where)
{
    for (const auto &kv : node)
    {
        const std::string key = kv.first.as<std::string>();
        if (!allowed.count(key))
            fail(where, "unknown key '" + key + "'");
    }
}

double get_scalar(const YAML::Node &node, const std::string &where)
{
    if (!node.IsScalar())
        fail(where, "expected a number");
    try
    {
        return node.as<double>();
    }
    catch (const YAML::Exception &)
    {
        fail(where, "expected a number");
    }
}

AffineLogParam parse_affine(const YAML::Node &node, const std::string &where)
{
    AffineLogParam p;
    if (node.IsScalar())
    {
        p.base = get_scalar(node, where);
        return p;
    }
    if (!node.IsMap())
        fail(where, "expected a number or a map");
    reject_unknown_keys(node,
                        {"base", "per_log1f", "per_d2d_km", "per_dh_abs", "per_dh_pos", "min",
                         "max"},
                        where);
    if (node["base"])
        p.base = get_scalar(node["base"], where + ".base");
    if (node["per_log1f"])
        p.per_log1f = get_scalar(node["per_log1f"], where + ".per_log1f");
    if (node["per_d2d_km"])
        p.per_d2d_km = get_scalar(node["per_d2d_km"], where + ".per_d2d_km");
    if (node["per_dh_abs"])
        p.per_dh_abs = get_scalar(node["per_dh_abs"], where + ".per_dh_abs");
    if (node["per_dh_pos"])
        p.per_dh_pos = get_scalar(node["per_dh_pos"], where + ".per_dh_pos");
    if (node["min"])
        p.min = get_scalar(node["min"], where + ".min");
    if (node["max"])
        p.max = get_scalar(node["max"], where + ".max");
    return p;
}

ParamDistribution parse_distribution(const YAML::Node &node, const std::string &where)
{
    if (!node.IsMap())
        fail(where, "expected a map with 'mu' and 'sigma'");
    reject_unknown_keys(node, {"mu", "sigma"}, where);
    if (!node["mu"])
        fail(where, "missing 'mu'");
    ParamDistribution d;
    d.mu = parse_affine(node["mu"], where + ".mu");
    if (node["sigma"])
        d.sigma = parse_affine(node["sigma"], where + ".sigma");
    return d;
}

ScenarioConfig parse_condition(const YAML::Node &node, const std::string &where)
{
    if (!node.IsMap())
        fail(where, "expected a map");
    reject_unknown_keys(node, {"path_count", "ds", "asd", "asa", "esd", "esa", "kf_db"}, where);
    ScenarioConfig c;
    if (!node["path_count"])
        fail(where + ".path_count", "missing");
    c.path_count = node["path_count"].as<std::size_t>();
    const char *names[6] = {"ds", "asd", "asa", "esd", "esa", "kf_db"};
    ParamDistribution *dists[6] = {&c.ds, &c.asd, &c.asa, &c.esd, &c.esa, &c.kf_db};
    for (int i = 0; i < 6; ++i)
    {
        if (!node[names[i]])
            fail(where + "." + names[i], "missing");
        *dists[i] = parse_distribution(node[names[i]], where + "." + names[i]);
    }
    return c;
}

} // namespace

void ScenarioConfig::validate() const
{
    const std::string where = scenario + "." + to_string(condition);
    if (frequencies_ghz.empty())
        fail(where + ".frequencies_ghz", "at least one frequency required");
    std::set<double> uniq;
    for (double f : frequencies_ghz)
    {
        if (!(f > 0.0) || !std::isfinite(f))
            fail(where + ".frequencies_ghz", "frequencies must be positive");
        if (!uniq.insert(f).second)
            fail(where + ".frequencies_ghz", "frequencies must be distinct");
    }
    if (path_count < 2)
        fail(where + ".path_count", "path_count must be >= 2");
    if (!(delay_decorr_m > 0.0) || !(angle_decorr_m > 0.0))
        fail(where + ".decorrelation_m", "decorrelation distances must be positive");
    if (sos_sinusoids == 0)
        fail(where + ".sos_sinusoids", "must be >= 1");
    const char *names[6] = {"ds", "asd", "asa", "esd", "esa", "kf_db"};
    const ParamDistribution *dists[6] = {&ds, &asd, &asa, &esd, &esa, &kf_db};
    for (int i = 0; i < 6; ++i)
        for (double f : frequencies_ghz)
        {
            // heights/distances only shift mu; sigma must be valid wherever evaluated
            if (dists[i]->sigma.eval(f, 0.0, 0.0) < 0.0)
                fail(where + "." + names[i] + ".sigma", "negative at f=" + std::to_string(f));
        }
}

ScenarioFile load_config(const std::string &path)
{
    YAML::Node root;
    try
    {
        root = YAML::LoadFile(path);
    }
    catch (const YAML::BadFile &)
    {
        throw std::invalid_argument("config: cannot open '" + path + "'");
    }
    catch (const YAML::Exception &e)
    {
        throw std::invalid_argument("config: parse error in '" + path + "': " + e.what());
    }
    if (!root.IsMap())
        throw std::invalid_argument("config: '" + path + "' is empty or not a map");

    reject_unknown_keys(root,
                        {"scenario", "frequencies_ghz", "decorrelation_m", "sos_sinusoids", "los",
                         "nlos"},
                        "top level");

    ScenarioFile file;
    file.scenario = root["scenario"] ? root["scenario"].as<std::string>() : "unnamed";

    if (!root["frequencies_ghz"] || !root["frequencies_ghz"].IsSequence())
        fail("frequencies_ghz", "missing or not a list");
    std::vector<double> freqs;
    for (const auto &f : root["frequencies_ghz"])
        freqs.push_back(get_scalar(f, "frequencies_ghz"));

    double delay_dc = 15.0, angle_dc = 15.0;
    if (root["decorrelation_m"])
    {
        const YAML::Node dc = root["decorrelation_m"];
        reject_unknown_keys(dc, {"delay", "angle"}, "decorrelation_m");
        if (dc["delay"])
            delay_dc = get_scalar(dc["delay"], "decorrelation_m.delay");
        if (dc["angle"])
            angle_dc = get_scalar(dc["angle"], "decorrelation_m.angle");
    }
    std::size_t sinusoids = 500;
    if (root["sos_sinusoids"])
        sinusoids = root["sos_sinusoids"].as<std::size_t>();

    if (!root["los"])
        fail("los", "missing section");
    if (!root["nlos"])
        fail("nlos", "missing section");
    file.los = parse_condition(root["los"], "los");
    file.nlos = parse_condition(root["nlos"], "nlos");

    for (ScenarioConfig *c : {&file.los, &file.nlos})
    {
        c->scenario = file.scenario;
        c->frequencies_ghz = freqs;
        c->delay_decorr_m = delay_dc;
        c->angle_decorr_m = angle_dc;
        c->sos_sinusoids = sinusoids;
    }
    file.los.condition = Condition::los;
    file.nlos.condition = Condition::nlos;
    file.los.validate();
    file.nlos.validate();
    return file;
}

LsfSample sample_lsf(const ScenarioConfig &cfg, const LinkGeometry &geom, std::uint64_t seed)
{
    cfg.validate();
    const double d2d = geom.distance_2d();
    const double dh = geom.rx_pos.z - geom.tx_pos.z;

    Rng rng(seed);
    // one deviate per parameter class, shared across frequencies; draw order is fixed
    const double z_ds = rng.normal();
    const double z_asd = rng.normal();
    const double z_asa = rng.normal();
    const double z_esd = rng.normal();
    const double z_esa = rng.normal();
    const double z_kf = rng.normal();

    const std::size_t nf = cfg.frequencies_ghz.size();
    LsfSample s;
    s.ds_s.resize(nf);
    s.asd_rad.resize(nf);
    s.asa_rad.resize(nf);
    s.esd_rad.resize(nf);
    s.esa_rad.resize(nf);
    s.kf_linear.resize(nf);

    auto log10_normal = [&](const ParamDistribution &p, double f, double z) {
        return std::pow(10.0, p.mu.eval(f, d2d, dh) + p.sigma.eval(f, d2d, dh) * z);
    };
    for (std::size_t i = 0; i < nf; ++i)
    {
        const double f = cfg.frequencies_ghz[i];
        s.ds_s[i] = log10_normal(cfg.ds, f, z_ds);
        s.asd_rad[i] = log10_normal(cfg.asd, f, z_asd) * deg2rad;
        s.asa_rad[i] = log10_normal(cfg.asa, f, z_asa) * deg2rad;
        s.esd_rad[i] = log10_normal(cfg.esd, f, z_esd) * deg2rad;
        s.esa_rad[i] = log10_normal(cfg.esa, f, z_esa) * deg2rad;
        const double kf_db = cfg.kf_db.mu.eval(f, d2d, dh) + cfg.kf_db.sigma.eval(f, d2d, dh) * z_kf;
        s.kf_linear[i] = std::pow(10.0, kf_db / 10.0);
    }
    return s;
}

LsfSample swap_link_roles(const LsfSample &sample)
{
    LsfSample out = sample;
    std::swap(out.asd_rad, out.asa_rad);
    std::swap(out.esd_rad, out.esa_rad);
    return out;
}

} // namespace ssfgen
