// SPDX-License-Identifier: Apache-2.0
//
// mcm-pas: multi-elliptical channel model power angle spectrum simulator
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


// mcm: command-line front end.
//
//   mcm simulate --config scenarios/bs.json --out out/ [--seed N] [--alpha DEG] [--beta DEG] [--svg]
//   mcm sweep    --config scenarios/bs.json --out out/ --alphas 120,135,... --betas -60,-45,...
//   mcm validate [--pdp data/tdl_b.csv]

#include "mcm/config.hpp"
#include "mcm/validate.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>

#ifndef MCM_DEFAULT_TDL_B
#define MCM_DEFAULT_TDL_B "data/tdl_b.csv"
#endif

namespace
{
    struct CommonArgs
    {
        std::string config;
        std::string out_dir = ".";
        std::optional<std::uint64_t> seed;
        std::optional<double> alpha;
        std::optional<double> beta;
        unsigned workers = 1;
    };

    void add_common(CLI::App *cmd, CommonArgs &a)
    {
        cmd->add_option("--config", a.config, "Scenario JSON file")->required()->check(CLI::ExistingFile);
        cmd->add_option("--out", a.out_dir, "Output directory (created if missing)");
        cmd->add_option("--seed", a.seed, "Override the scenario seed (decimal 64-bit)");
        cmd->add_option("--alpha", a.alpha, "Override Tx boresight, degrees");
        cmd->add_option("--beta", a.beta, "Override Rx boresight, degrees");
        cmd->add_option("--workers", a.workers, "Worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
    }

    mcm::ScenarioConfig load(const CommonArgs &a)
    {
        return mcm::load_scenario_config(a.config, {a.seed, a.alpha, a.beta});
    }

    std::string out_path(const CommonArgs &a, const char *name)
    {
        std::filesystem::create_directories(a.out_dir);
        return (std::filesystem::path(a.out_dir) / name).string();
    }

    int cmd_simulate(const CommonArgs &a, bool svg)
    {
        const auto cfg = load(a);
        const auto sim = mcm::simulate(cfg.scenario, a.workers);
        const auto summary = mcm::summarize(sim);

        mcm::write_text_file(out_path(a, "pas.csv"), mcm::curve_csv(sim.pas, cfg, summary));
        mcm::write_text_file(out_path(a, "aoa_pdf.csv"), mcm::curve_csv(sim.aoa_pdf, cfg, summary));
        mcm::write_text_file(out_path(a, "aor_pdf.csv"), mcm::curve_csv(sim.aor_pdf, cfg, summary));
        if (svg)
        {
            char title[160];
            std::snprintf(title, sizeof title, "PAS  alpha=%g deg  beta=%g deg", cfg.scenario.tx.boresight().degrees(),
                          cfg.scenario.rx.boresight().degrees());
            mcm::write_text_file(out_path(a, "pas.svg"), mcm::curve_svg(sim.pas, title));
        }

        std::cout << "output_power " << mcm::format_number(summary.output_power)
                  << "  angular_spread_deg " << mcm::format_number(summary.angular_spread_deg) << "\n";
        return 0;
    }

    int cmd_sweep(const CommonArgs &a, const std::string &alphas_csv, const std::string &betas_csv)
    {
        const auto cfg = load(a);
        std::vector<mcm::WrappedAngle> alphas, betas;
        for (double d : mcm::parse_angle_list(alphas_csv))
            alphas.push_back(mcm::WrappedAngle::from_degrees(d));
        for (double d : mcm::parse_angle_list(betas_csv))
            betas.push_back(mcm::WrappedAngle::from_degrees(d));

        const auto sweep = mcm::orientation_sweep(cfg.scenario, alphas, betas, a.workers);
        mcm::write_text_file(out_path(a, "sweep.csv"), mcm::sweep_csv(sweep, cfg));
        std::cout << "wrote " << sweep.cells.size() << " cells\n";
        return 0;
    }

    int cmd_validate(const std::string &pdp)
    {
        const auto checks = mcm::run_validation(pdp);
        int failed = 0;
        for (const auto &c : checks)
        {
            std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
            failed += c.passed ? 0 : 1;
        }
        std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
        return failed == 0 ? 0 : 1;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Multi-elliptical channel model: power angle spectrum simulator"};
    app.set_version_flag("--version", mcm::tool_version);
    app.require_subcommand(1);

    CommonArgs sim_args, sweep_args;
    bool svg = false;
    auto *sim = app.add_subcommand("simulate", "Write pas.csv, aoa_pdf.csv and aor_pdf.csv for one scenario");
    add_common(sim, sim_args);
    sim->add_flag("--svg", svg, "Also write pas.svg");

    std::string alphas = "120,135,150,165,180,195,210,225,240";
    std::string betas = "-60,-45,-30,-15,0,15,30,45,60";
    auto *sweep = app.add_subcommand("sweep", "Write sweep.csv over a grid of Tx/Rx boresights");
    add_common(sweep, sweep_args);
    sweep->add_option("--alphas", alphas, "Comma-separated Tx boresights, degrees");
    sweep->add_option("--betas", betas, "Comma-separated Rx boresights, degrees");

    std::string pdp = MCM_DEFAULT_TDL_B;
    auto *validate = app.add_subcommand("validate", "Run the built-in invariant checks");
    validate->add_option("--pdp", pdp, "TDL-B table to self-check");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*sim)
            return cmd_simulate(sim_args, svg);
        if (*sweep)
            return cmd_sweep(sweep_args, alphas, betas);
        return cmd_validate(pdp);
    }
    catch (const std::exception &e)
    {
        std::cerr << "mcm: error: " << e.what() << "\n";
        return 2;
    }
}
