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


#include "mcm/antenna.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mcm
{
    AntennaPattern::AntennaPattern(WrappedAngle boresight, double hpbw_rad)
        : boresight_(boresight), hpbw_(hpbw_rad)
    {
        if (!(hpbw_rad > 0.0 && hpbw_rad <= two_pi))
            throw std::invalid_argument("AntennaPattern: HPBW must lie in (0, 2pi]");
    }

    AntennaPattern AntennaPattern::omnidirectional(WrappedAngle boresight)
    {
        AntennaPattern p;
        p.boresight_ = boresight;
        p.omni_ = true;
        return p;
    }

    double AntennaPattern::sigma() const
    {
        return hpbw_ / (4.0 * std::sqrt(std::numbers::ln2));
    }

    double pattern_gain(const AntennaPattern &p, WrappedAngle phi)
    {
        if (p.is_omnidirectional())
            return 1.0;
        const double delta = (phi - p.boresight()).radians();
        return std::exp(-4.0 * std::numbers::ln2 * delta * delta / (p.hpbw() * p.hpbw()));
    }

    double aod_norm_const(const AntennaPattern &p)
    {
        if (p.is_omnidirectional())
            return 1.0 / two_pi;

        // Integrate in the offset variable; the wrapped pattern over one
        // period is the same integral for every boresight.
        const double h2 = p.hpbw() * p.hpbw();
        auto g2 = [h2](double delta)
        { return std::exp(-8.0 * std::numbers::ln2 * delta * delta / h2); };

        double err = 0.0;
        const double area = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            g2, -pi, pi, 15, 1e-14, &err);
        return 1.0 / area;
    }

    double aod_norm_const_closed_form(const AntennaPattern &p)
    {
        if (p.is_omnidirectional())
            return 1.0 / two_pi;
        const double s = p.sigma();
        const double area = s * std::sqrt(two_pi) * std::erf(pi / (s * std::numbers::sqrt2));
        return 1.0 / area;
    }

    AodDensity::AodDensity(AntennaPattern pattern)
        : pattern_(pattern), norm_const_(aod_norm_const(pattern))
    {
    }

    double aod_pdf(const AodDensity &d, WrappedAngle phi_t)
    {
        return d.norm_const() * pattern_power_weight(d.pattern(), phi_t);
    }
}
