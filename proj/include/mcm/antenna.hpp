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


#ifndef MCM_ANTENNA_HPP
#define MCM_ANTENNA_HPP

#include "mcm/angle.hpp"

namespace mcm
{
    // Gaussian main lobe
    //
    //   g(phi) = exp(-4 ln2 * wrap(phi - boresight)^2 / hpbw^2)
    //
    // g is 0.5 at boresight +/- hpbw/2. Path powers and the departure density
    // are weighted with g^2, as in the model equations, so the effective power
    // weight at the half-beamwidth offset is 0.25. Whether g was meant as a
    // field or a power pattern is not stated by the model; it is used as written.
    //
    // The tail is the Gaussian itself (no side-lobe floor). The omnidirectional
    // pattern has g == 1 everywhere.
    class AntennaPattern
    {
    public:
        AntennaPattern(WrappedAngle boresight, double hpbw_rad);

        static AntennaPattern omnidirectional(WrappedAngle boresight = WrappedAngle(0.0));

        WrappedAngle boresight() const { return boresight_; }
        double hpbw() const { return hpbw_; }
        bool is_omnidirectional() const { return omni_; }

        // Gaussian standard deviation of g^2: hpbw / (4 sqrt(ln 2)).
        double sigma() const;

        AntennaPattern with_boresight(WrappedAngle b) const
        {
            AntennaPattern p = *this;
            p.boresight_ = b;
            return p;
        }

    private:
        AntennaPattern() = default;

        WrappedAngle boresight_;
        double hpbw_ = two_pi;
        bool omni_ = false;
    };

    double pattern_gain(const AntennaPattern &p, WrappedAngle phi);

    // g^2, the weight applied to path powers.
    inline double pattern_power_weight(const AntennaPattern &p, WrappedAngle phi)
    {
        const double g = pattern_gain(p, phi);
        return g * g;
    }

    // C_T = 1 / integral_{-pi}^{pi} g^2(x) dx by adaptive Gauss-Kronrod quadrature.
    double aod_norm_const(const AntennaPattern &p);

    // Same constant from the truncated Gaussian integral sigma*sqrt(2 pi)*erf(pi / (sigma sqrt 2)).
    double aod_norm_const_closed_form(const AntennaPattern &p);

    // Departure-angle density C_T * g_T^2(phi_T) on (-pi, pi].
    class AodDensity
    {
    public:
        explicit AodDensity(AntennaPattern pattern);

        const AntennaPattern &pattern() const { return pattern_; }
        double norm_const() const { return norm_const_; }

    private:
        AntennaPattern pattern_;
        double norm_const_;
    };

    double aod_pdf(const AodDensity &d, WrappedAngle phi_t);
}

#endif
