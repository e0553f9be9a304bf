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

// Compares the OpenMP kernels against their serial references:
//   - batch field evaluation (evaluate_many vs evaluate_many_serial)
//   - the per-MT evaluation run (threads=N vs threads=1)

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ssfgen/corr_field.hpp"
#include "ssfgen/lsf.hpp"
#include "ssfgen/rng.hpp"
#include "ssfgen/runner.hpp"

using namespace ssfgen;

namespace
{

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ScenarioFile bench_scenario()
{
    ScenarioFile f;
    f.scenario = "bench";
    for (ScenarioConfig *c : {&f.los, &f.nlos})
    {
        c->scenario = f.scenario;
        c->frequencies_ghz = {1.0, 6.0, 60.0};
        c->path_count = 19;
        c->ds.mu.base = -7.0;
        c->ds.sigma.base = 0.3;
        c->asd.mu.base = 1.2;
        c->asd.sigma.base = 0.4;
        c->asa.mu.base = 1.7;
        c->asa.sigma.base = 0.3;
        c->esd.mu.base = -0.2;
        c->esd.sigma.base = 0.35;
        c->esa.mu.base = 0.7;
        c->esa.sigma.base = 0.3;
        c->kf_db.mu.base = 9.0;
        c->kf_db.sigma.base = 5.0;
    }
    f.nlos.condition = Condition::nlos;
    f.nlos.kf_db.mu.base = -30.0;
    f.nlos.kf_db.sigma.base = 0.0;
    return f;
}

} // namespace

int main()
{
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("ssfgen benchmark, %d thread(s)\n\n", threads);

    // batch field evaluation
    {
        const SosField field(42, AcfSpec(15.0));
        const std::size_t n = 200000;
        std::vector<Vec3> pos(n);
        Rng rng(7);
        for (Vec3 &p : pos)
            p = {rng.uniform(0.0, 500.0), rng.uniform(0.0, 500.0), rng.uniform(0.0, 500.0)};
        std::vector<double> out(n);

        auto t0 = std::chrono::steady_clock::now();
        field.evaluate_many_serial(pos, out);
        const double serial = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        field.evaluate_many(pos, out);
        const double parallel = seconds_since(t0);

        std::printf("field evaluation, %zu positions x %zu sinusoids\n", n,
                    field.sinusoid_count());
        std::printf("  serial   %8.1f ms\n", serial * 1e3);
        std::printf("  openmp   %8.1f ms   (speedup %.2fx)\n\n", parallel * 1e3,
                    serial / parallel);
    }

    // evaluation run
    {
        const ScenarioFile scen = bench_scenario();
        RunSpec spec;
        spec.mt_count = 100;

        spec.threads = 1;
        auto t0 = std::chrono::steady_clock::now();
        run_eval(scen, spec);
        const double serial = seconds_since(t0);

        spec.threads = 0;
        t0 = std::chrono::steady_clock::now();
        run_eval(scen, spec);
        const double parallel = seconds_since(t0);

        std::printf("evaluation run, %d MTs, 2 conditions, 3 frequencies\n", spec.mt_count);
        std::printf("  serial   %8.1f ms\n", serial * 1e3);
        std::printf("  openmp   %8.1f ms   (speedup %.2fx)\n", parallel * 1e3, serial / parallel);
    }
    return 0;
}
