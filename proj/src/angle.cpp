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


#include "mcm/angle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mcm
{
    double wrap_angle_value(double x)
    {
        if (!std::isfinite(x))
            throw std::invalid_argument("wrap_angle: input must be finite");

        double r = std::fmod(pi - x, two_pi); // (-2pi, 2pi)
        if (r < 0.0)
            r += two_pi;
        double out = pi - r; // (-pi, pi]
        if (out <= -pi) // r may round up to exactly 2pi
            out = pi;
        return out;
    }

    double eccentricity(double distance_m, double delay_s)
    {
        if (!(distance_m > 0.0) || !std::isfinite(distance_m))
            throw std::invalid_argument("eccentricity: Tx-Rx distance must be positive");
        if (!(delay_s >= 0.0) || !std::isfinite(delay_s))
            throw std::invalid_argument("eccentricity: delay must be non-negative");
        return distance_m / (distance_m + speed_of_light * delay_s);
    }

    Ellipse make_ellipse(int index, double distance_m, double delay_s)
    {
        if (index < 1)
            throw std::invalid_argument("make_ellipse: delayed clusters start at index 1");
        if (!(delay_s > 0.0))
            throw std::invalid_argument("make_ellipse: delayed cluster needs a positive delay");
        return {index, delay_s, eccentricity(distance_m, delay_s)};
    }

    WrappedAngle aoa_from_aod(WrappedAngle phi_t, double e)
    {
        if (!(e > 0.0 && e <= 1.0))
            throw std::invalid_argument("aoa_from_aod: eccentricity must lie in (0, 1]");

        const double t = phi_t.radians();
        if (t == 0.0)
            return WrappedAngle(0.0);
        if (t == pi)
            return WrappedAngle(pi);
        if (e == 1.0)
            return WrappedAngle(0.0);

        const double c = std::cos(t);
        const double arg = (2.0 * e + (1.0 + e * e) * c) / (1.0 + e * e + 2.0 * e * c);
        const double r = std::acos(std::clamp(arg, -1.0, 1.0));
        return WrappedAngle(t > 0.0 ? r : -r);
    }

    WrappedAngle aod_from_aoa(WrappedAngle phi_r, double e)
    {
        if (!(e > 0.0 && e < 1.0))
            throw std::invalid_argument("aod_from_aoa: eccentricity must lie in (0, 1)");

        const double r = phi_r.radians();
        if (r == 0.0)
            return WrappedAngle(0.0);
        if (r == pi)
            return WrappedAngle(pi);

        // cos(phi_R) = (2e + (1+e^2) c) / (1 + e^2 + 2e c), solved for c = cos(phi_T)
        const double cr = std::cos(r);
        const double q = 1.0 + e * e;
        const double c = (q * cr - 2.0 * e) / (q - 2.0 * e * cr);
        const double t = std::acos(std::clamp(c, -1.0, 1.0));
        return WrappedAngle(r > 0.0 ? t : -t);
    }

    double aoa_jacobian(WrappedAngle phi_t, double e)
    {
        if (!(e > 0.0 && e < 1.0))
            throw std::invalid_argument("aoa_jacobian: eccentricity must lie in (0, 1)");
        return (1.0 - e * e) / (1.0 + e * e + 2.0 * e * std::cos(phi_t.radians()));
    }
}
