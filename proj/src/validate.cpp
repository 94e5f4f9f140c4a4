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


#include "mcm/validate.hpp"
#include "mcm/engine.hpp"
#include "mcm/pdp.hpp"
#include "mcm/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <tuple>
#include <utility>

namespace mcm
{
    TdlSelfCheck tdl_self_check(const std::string &path)
    {
        const auto raw = parse_pdp_csv(read_text_file(path), PdpMode::normalized);
        double first = HUGE_VAL;
        for (const auto &t : raw.taps)
            first = std::min(first, t.delay);
        return {first, rms_delay_spread(raw), raw.taps.size()};
    }

    namespace
    {
        std::string fmt(const char *f, double v)
        {
            char buf[96];
            std::snprintf(buf, sizeof buf, f, v);
            return buf;
        }

        Scenario toy_scenario()
        {
            Scenario s;
            s.distance_m = 400.0;
            s.tx = AntennaPattern(WrappedAngle::from_degrees(180.0), deg_to_rad(58.0));
            s.rx = AntennaPattern(WrappedAngle::from_degrees(0.0), deg_to_rad(58.0));
            s.pdp = normalize_power(Pdp({{0, 0.0, 1.0}, {1, 500e-9, 0.5}}));
            s.paths_per_cluster = {4000};
            s.seed = 7;
            return s;
        }

        double max_over_grid(const std::function<double(double, double)> &f)
        {
            double worst = 0.0;
            for (int ie = 1; ie <= 19; ++ie)
            {
                const double e = 0.05 * ie;
                for (int k = -720; k <= 720; ++k)
                    worst = std::max(worst, f(e, k * pi / 720.0));
            }
            return worst;
        }
    }

    std::vector<CheckResult> run_validation(const std::string &tdl_b_path)
    {
        std::vector<CheckResult> out;
        auto check = [&](std::string name, auto &&body)
        {
            CheckResult r;
            r.name = std::move(name);
            try
            {
                std::tie(r.passed, r.detail) = body();
            }
            catch (const std::exception &e)
            {
                r.passed = false;
                r.detail = e.what();
            }
            out.push_back(std::move(r));
        };

        check("ellipse map: phi_T = 0 -> 0", [&]
        {
            const double w = max_over_grid([](double e, double) { return std::abs(aoa_from_aod(WrappedAngle(0.0), e).radians()); });
            return std::pair{w <= 1e-12, fmt("max |phi_R| = %.3g", w)};
        });
        check("ellipse map: phi_T = pi -> pi", [&]
        {
            const double w = max_over_grid([](double e, double) { return std::abs(aoa_from_aod(WrappedAngle(pi), e).radians() - pi); });
            return std::pair{w <= 1e-12, fmt("max error = %.3g", w)};
        });
        check("ellipse map: contraction |phi_R| <= |phi_T|", [&]
        {
            const double w = max_over_grid([](double e, double t)
            {
                const WrappedAngle a(t);
                return std::abs(aoa_from_aod(a, e).radians()) - std::abs(a.radians());
            });
            return std::pair{w <= 1e-15, fmt("max excess = %.3g", w)};
        });
        check("ellipse map: inverse round trip", [&]
        {
            const double w = max_over_grid([](double e, double t)
            {
                const WrappedAngle a(t);
                return std::abs((aod_from_aoa(aoa_from_aod(a, e), e) - a).radians());
            });
            return std::pair{w <= 1e-10, fmt("max error = %.3g rad", w)};
        });
        check("ellipse map: Jacobian vs finite difference", [&]
        {
            double worst = 0.0;
            for (int ie = 1; ie <= 9; ++ie)
                for (int k = 1; k < 36; ++k)
                {
                    const double e = 0.1 * ie, t = k * pi / 36.0, h = 1e-6;
                    const double fd = (aoa_from_aod(WrappedAngle(t + h), e).radians() -
                                       aoa_from_aod(WrappedAngle(t - h), e).radians()) / (2 * h);
                    worst = std::max(worst, std::abs(fd - aoa_jacobian(WrappedAngle(t), e)) / std::abs(fd));
                }
            return std::pair{worst < 1e-5, fmt("max relative error = %.3g", worst)};
        });
        check("antenna: half-power gain is 0.5", [&]
        {
            const AntennaPattern p(WrappedAngle::from_degrees(180.0), deg_to_rad(68.0));
            const double g = pattern_gain(p, WrappedAngle::from_degrees(180.0 + 34.0));
            return std::pair{std::abs(g - 0.5) < 1e-15, fmt("g = %.17g", g)};
        });
        check("antenna: AOD norm quadrature vs closed form", [&]
        {
            double worst = 0.0;
            for (double h : {10.0, 58.0, 68.0, 180.0, 360.0})
            {
                const AntennaPattern p(WrappedAngle(0.0), deg_to_rad(h));
                worst = std::max(worst, std::abs(aod_norm_const(p) / aod_norm_const_closed_form(p) - 1.0));
            }
            return std::pair{worst < 1e-10, fmt("max relative gap = %.3g", worst)};
        });
        check("von Mises: density integrates to 1", [&]
        {
            double worst = 0.0;
            for (double mu : {0.0, 1.0, 10.0, 50.0})
            {
                const VonMisesParams p(mu);
                const int n = 20000;
                double sum = 0.0;
                for (int k = 0; k < n; ++k)
                    sum += von_mises_pdf(p, WrappedAngle(-pi + (k + 0.5) * two_pi / n));
                worst = std::max(worst, std::abs(sum * two_pi / n - 1.0));
            }
            return std::pair{worst < 1e-9, fmt("max error = %.3g", worst)};
        });
        check("bessel: I0(1) matches power series", [&]
        {
            double series = 0.0, term = 1.0;
            for (int k = 0; k < 30; ++k)
            {
                series += term;
                term *= 0.25 / ((k + 1.0) * (k + 1.0));
            }
            const double rel = std::abs(bessel_i0(1.0) / series - 1.0);
            return std::pair{rel < 1e-12, fmt("relative error = %.3g", rel)};
        });
        check("pdp: -3 dB parses to 0.501187", [&]
        {
            const auto raw = parse_pdp_csv("tap,delay,power_db\n1,0,-3\n", PdpMode::normalized);
            const double v = raw.taps.at(0).power;
            return std::pair{std::abs(v - 0.501187) < 1e-6, fmt("linear = %.9f", v)};
        });
        const auto tdl = [&] { return tdl_self_check(tdl_b_path); };
        check("TDL-B data: first tap at zero delay", [&]
        {
            const auto r = tdl();
            return std::pair{r.first_delay == 0.0, fmt("first delay = %.6g", r.first_delay)};
        });
        check("TDL-B data: normalised rms delay spread is 1", [&]
        {
            const auto r = tdl();
            return std::pair{std::abs(r.rms_delay_spread - 1.0) < 1e-3, fmt("rms DS = %.6f", r.rms_delay_spread)};
        });
        check("mixture: AOA pdf plus direct-path mass integrates to 1", [&]
        {
            auto s = toy_scenario();
            s.kappa = 1.0;
            const auto paths = generate_paths(s);
            const auto c = estimate_aoa_pdf(s, paths);
            const double err = std::abs(c.integral() + c.discrete_mass - 1.0);
            return std::pair{err < 1e-9, fmt("error = %.3g", err)};
        });
        check("histogram: AOR pdf integrates to 1", [&]
        {
            const auto s = toy_scenario();
            const auto c = estimate_aor_pdf(s, generate_paths(s));
            const double err = std::abs(c.integral() - 1.0);
            return std::pair{err < 1e-9, fmt("error = %.3g", err)};
        });
        check("omnidirectional Rx: AOR histogram equals AOA power histogram", [&]
        {
            auto s = toy_scenario();
            s.rx = AntennaPattern::omnidirectional();
            const auto paths = generate_paths(s);
            const bool same = estimate_aor_pdf(s, paths).values == input_power_histogram(s, paths).values;
            return std::pair{same, std::string(same ? "bit-identical" : "differs")};
        });
        check("determinism: repeated and multi-worker runs agree", [&]
        {
            const auto s = toy_scenario();
            const auto a = simulate(s, 1), b = simulate(s, 1), c = simulate(s, 4);
            const bool same = a.pas.values == b.pas.values && a.pas.values == c.pas.values;
            return std::pair{same, std::string(same ? "bit-identical" : "differs")};
        });
        return out;
    }
}
