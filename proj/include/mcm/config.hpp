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


#ifndef MCM_CONFIG_HPP
#define MCM_CONFIG_HPP

#include "mcm/engine.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mcm
{
    inline constexpr const char *tool_version = "mcm-pas 1.0.0";

    // Command-line values that take precedence over the scenario file.
    struct Overrides
    {
        std::optional<std::uint64_t> seed;
        std::optional<double> alpha_deg;
        std::optional<double> beta_deg;
    };

    struct ScenarioConfig
    {
        nlohmann::json echo; // complete config with defaults and overrides applied
        Scenario scenario;
    };

    // Builds a scenario from a JSON config. Relative pdp_file paths resolve
    // against base_dir. Unknown keys and bad values throw std::invalid_argument.
    ScenarioConfig scenario_from_json(nlohmann::json cfg, const std::string &base_dir, const Overrides &ov = {});

    ScenarioConfig load_scenario_config(const std::string &path, const Overrides &ov = {});

    // Fixed 12-significant-digit rendering used for every number written out.
    std::string format_number(double v);

    struct RunSummary
    {
        double input_power = 0.0;  // P_R
        double output_power = 0.0; // sum p_R,ij
        double angular_spread_deg = 0.0;
        double direct_path_mass = 0.0;
    };

    RunSummary summarize(const Simulation &sim);

    // `#` metadata block followed by `angle_deg,value` rows.
    std::string curve_csv(const PasCurve &curve, const ScenarioConfig &cfg, const RunSummary &summary);

    std::string sweep_csv(const SweepResult &sweep, const ScenarioConfig &cfg);

    // Polyline rendering of a curve (angle on x, value on y).
    std::string curve_svg(const PasCurve &curve, const std::string &title);

    void write_text_file(const std::string &path, const std::string &content);

    std::vector<double> parse_angle_list(const std::string &csv_degrees);
}

#endif
