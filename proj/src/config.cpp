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


#include "mcm/config.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mcm
{
    using nlohmann::json;

    namespace
    {
        const std::set<std::string> known_keys = {
            "d_m", "kappa", "mu", "hpbw_tx_deg", "hpbw_rx_deg", "alpha_deg", "beta_deg",
            "paths_per_cluster", "bin_width_deg", "seed", "pdp_file", "pdp_mode", "ds_ns",
            "normalize_pdp", "pas_scale", "description", "carrier_hz"};

        double number(const json &cfg, const char *key)
        {
            const auto it = cfg.find(key);
            if (it == cfg.end())
                throw std::invalid_argument(std::string("config: missing required key \"") + key + "\"");
            if (!it->is_number())
                throw std::invalid_argument(std::string("config: \"") + key + "\" must be a number");
            return it->get<double>();
        }

        AntennaPattern pattern(const json &cfg, const char *hpbw_key, double boresight_deg)
        {
            const auto it = cfg.find(hpbw_key);
            if (it == cfg.end())
                throw std::invalid_argument(std::string("config: missing required key \"") + hpbw_key + "\"");
            const auto b = WrappedAngle::from_degrees(boresight_deg);
            if (it->is_string() && it->get<std::string>() == "omni")
                return AntennaPattern::omnidirectional(b);
            if (!it->is_number())
                throw std::invalid_argument(std::string("config: \"") + hpbw_key + "\" must be degrees or \"omni\"");
            return AntennaPattern(b, deg_to_rad(it->get<double>()));
        }
    }

    ScenarioConfig scenario_from_json(json cfg, const std::string &base_dir, const Overrides &ov)
    {
        if (!cfg.is_object())
            throw std::invalid_argument("config: top level must be a JSON object");
        for (const auto &[key, _] : cfg.items())
            if (!known_keys.contains(key))
                throw std::invalid_argument("config: unknown key \"" + key + "\"");

        // defaults
        cfg.emplace("kappa", 0.0);
        cfg.emplace("mu", 10.0);
        cfg.emplace("paths_per_cluster", 2000);
        cfg.emplace("bin_width_deg", 1.0);
        cfg.emplace("seed", std::uint64_t{1});
        cfg.emplace("pdp_mode", "normalized");
        cfg.emplace("normalize_pdp", true);
        cfg.emplace("pas_scale", "input_power");

        if (ov.seed)
            cfg["seed"] = *ov.seed;
        if (ov.alpha_deg)
            cfg["alpha_deg"] = *ov.alpha_deg;
        if (ov.beta_deg)
            cfg["beta_deg"] = *ov.beta_deg;

        ScenarioConfig out;
        Scenario &s = out.scenario;
        s.distance_m = number(cfg, "d_m");
        s.kappa = number(cfg, "kappa");
        s.mu = number(cfg, "mu");
        s.tx = pattern(cfg, "hpbw_tx_deg", number(cfg, "alpha_deg"));
        s.rx = pattern(cfg, "hpbw_rx_deg", number(cfg, "beta_deg"));
        s.bin_half_width = deg_to_rad(number(cfg, "bin_width_deg") / 2.0);
        if (cfg.contains("carrier_hz"))
            s.carrier_hz = number(cfg, "carrier_hz");

        const auto &seed = cfg["seed"];
        if (!seed.is_number_integer() || (!seed.is_number_unsigned() && seed.get<std::int64_t>() < 0))
            throw std::invalid_argument("config: \"seed\" must be a non-negative 64-bit integer");
        s.seed = seed.get<std::uint64_t>();

        const auto &ppc = cfg["paths_per_cluster"];
        s.paths_per_cluster.clear();
        auto count = [](const json &v)
        {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
                throw std::invalid_argument("config: \"paths_per_cluster\" entries must be integers >= 1");
            return static_cast<std::size_t>(v.get<std::int64_t>());
        };
        if (ppc.is_array())
            for (const auto &v : ppc)
                s.paths_per_cluster.push_back(count(v));
        else
            s.paths_per_cluster.push_back(count(ppc));

        if (!cfg["pdp_mode"].is_string() || !cfg["pas_scale"].is_string() || !cfg["normalize_pdp"].is_boolean())
            throw std::invalid_argument("config: pdp_mode/pas_scale must be strings and normalize_pdp a boolean");
        const auto mode = parse_pdp_mode(cfg["pdp_mode"].get<std::string>());
        s.pas_scale = parse_pas_scale(cfg["pas_scale"].get<std::string>());

        if (!cfg.contains("pdp_file") || !cfg["pdp_file"].is_string())
            throw std::invalid_argument("config: \"pdp_file\" must name a PDP CSV file");
        std::filesystem::path pdp_path = cfg["pdp_file"].get<std::string>();
        if (pdp_path.is_relative())
            pdp_path = std::filesystem::path(base_dir) / pdp_path;

        std::optional<double> ds;
        if (mode == PdpMode::normalized)
            ds = number(cfg, "ds_ns") * 1e-9;
        s.pdp = load_pdp(pdp_path.string(), mode, ds, cfg["normalize_pdp"].get<bool>());

        s.validate();
        out.echo = std::move(cfg);
        return out;
    }

    ScenarioConfig load_scenario_config(const std::string &path, const Overrides &ov)
    {
        json cfg;
        try
        {
            cfg = json::parse(read_text_file(path));
        }
        catch (const json::parse_error &e)
        {
            throw std::invalid_argument("config " + path + ": " + e.what());
        }
        const auto dir = std::filesystem::path(path).parent_path().string();
        return scenario_from_json(std::move(cfg), dir.empty() ? "." : dir, ov);
    }

    std::string format_number(double v)
    {
        if (v == 0.0)
            v = 0.0; // drop the sign of -0
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return buf;
    }

    RunSummary summarize(const Simulation &sim)
    {
        return {sim.aoa_pdf.total_power, sim.output_power, rad_to_deg(sim.angular_spread), sim.aoa_pdf.discrete_mass};
    }

    namespace
    {
        std::string metadata(const ScenarioConfig &cfg)
        {
            std::string m;
            m += "# tool: " + std::string(tool_version) + "\n";
            m += "# config: " + cfg.echo.dump() + "\n";
            m += "# seed: " + std::to_string(cfg.scenario.seed) + "\n";
            return m;
        }

        std::string_view kind_name(CurveKind k)
        {
            switch (k)
            {
            case CurveKind::aoa_pdf:
                return "aoa_pdf";
            case CurveKind::aor_pdf:
                return "aor_pdf";
            default:
                return "pas";
            }
        }
    }

    std::string curve_csv(const PasCurve &curve, const ScenarioConfig &cfg, const RunSummary &summary)
    {
        std::string out = metadata(cfg);
        out += "# kind: " + std::string(kind_name(curve.kind)) + "\n";
        out += "# value_unit: ";
        out += curve.kind == CurveKind::pas ? "power per radian\n" : "probability per radian\n";
        out += "# bin_width_deg: " + format_number(rad_to_deg(curve.bin_width)) + "\n";
        out += "# curve_total_power: " + format_number(curve.total_power) + "\n";
        out += "# input_power: " + format_number(summary.input_power) + "\n";
        out += "# output_power: " + format_number(summary.output_power) + "\n";
        out += "# angular_spread_deg: " + format_number(summary.angular_spread_deg) + "\n";
        out += "# direct_path_mass: " + format_number(summary.direct_path_mass) + "\n";
        out += "angle_deg,value\n";
        for (std::size_t k = 0; k < curve.values.size(); ++k)
            out += format_number(curve.bin_centers[k].degrees()) + "," + format_number(curve.values[k]) + "\n";
        return out;
    }

    std::string sweep_csv(const SweepResult &sweep, const ScenarioConfig &cfg)
    {
        std::string out = metadata(cfg);
        out += "alpha_deg,beta_deg,output_power,angular_spread_deg\n";
        for (const auto &c : sweep.cells)
            out += format_number(c.alpha.degrees()) + "," + format_number(c.beta.degrees()) + "," +
                   format_number(c.output_power) + "," + format_number(rad_to_deg(c.angular_spread)) + "\n";
        return out;
    }

    std::string curve_svg(const PasCurve &curve, const std::string &title)
    {
        constexpr double width = 720.0, height = 360.0, margin = 40.0;
        double vmax = 0.0;
        for (double v : curve.values)
            vmax = std::max(vmax, v);
        if (!(vmax > 0.0))
            vmax = 1.0;

        std::ostringstream svg;
        svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width + 2 * margin
            << "\" height=\"" << height + 2 * margin << "\">\n";
        svg << "<text x=\"" << margin << "\" y=\"" << margin / 2 << "\" font-family=\"sans-serif\" font-size=\"14\">"
            << title << "</text>\n";
        svg << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << width << "\" height=\"" << height
            << "\" fill=\"none\" stroke=\"#888\"/>\n";
        svg << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
        char buf[64];
        for (std::size_t k = 0; k < curve.values.size(); ++k)
        {
            const double x = margin + (curve.bin_centers[k].degrees() + 180.0) / 360.0 * width;
            const double y = margin + height * (1.0 - curve.values[k] / vmax);
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", x, y);
            svg << buf;
        }
        svg << "\"/>\n";
        for (int deg = -180; deg <= 180; deg += 90)
        {
            const double x = margin + (deg + 180.0) / 360.0 * width;
            svg << "<text x=\"" << x - 10 << "\" y=\"" << height + margin + 16
                << "\" font-family=\"sans-serif\" font-size=\"11\">" << deg << "</text>\n";
        }
        svg << "</svg>\n";
        return svg.str();
    }

    void write_text_file(const std::string &path, const std::string &content)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open for writing: " + path);
        out << content;
        if (!out)
            throw std::runtime_error("write failed: " + path);
    }

    std::vector<double> parse_angle_list(const std::string &csv_degrees)
    {
        std::vector<double> out;
        std::stringstream ss(csv_degrees);
        std::string item;
        while (std::getline(ss, item, ','))
        {
            std::size_t used = 0;
            double v = 0.0;
            try
            {
                v = std::stod(item, &used);
            }
            catch (const std::exception &)
            {
                throw std::invalid_argument("bad angle in list: \"" + item + "\"");
            }
            if (item.find_first_not_of(" \t", used) != std::string::npos)
                throw std::invalid_argument("bad angle in list: \"" + item + "\"");
            out.push_back(v);
        }
        if (out.empty())
            throw std::invalid_argument("angle list is empty");
        return out;
    }
}
