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

#ifndef MCM_ANGLE_HPP
#define MCM_ANGLE_HPP

#include <numbers>

// Angular frame used throughout the library
// -----------------------------------------
// All azimuths (Tx boresight alpha, Rx boresight beta, departure angle phi_T,
// arrival angle phi_R) live in one common frame whose 0 axis points from the
// receiver toward the transmitter. In this frame the ellipse map sends
// phi_T = 0 to phi_R = 0 and phi_T = pi to phi_R = pi, a transmitter aimed at
// the receiver has alpha = 180 deg and a receiver aimed at the transmitter has
// beta = 0 deg. The figure-level drawing convention is inferred from those
// two facts, not read from a published drawing.

namespace mcm
{
    inline constexpr double pi = std::numbers::pi;
    inline constexpr double two_pi = 2.0 * std::numbers::pi;
    inline constexpr double speed_of_light = 299792458.0; // m/s

    constexpr double deg_to_rad(double deg) { return deg * (pi / 180.0); }
    constexpr double rad_to_deg(double rad) { return rad * (180.0 / pi); }

    // Wraps any finite real into (-pi, pi]. Throws std::invalid_argument on NaN/inf.
    double wrap_angle_value(double x);

    // Azimuth in radians, always inside (-pi, pi].
    class WrappedAngle
    {
    public:
        constexpr WrappedAngle() = default;
        explicit WrappedAngle(double radians) : value_(wrap_angle_value(radians)) {}

        static WrappedAngle from_degrees(double deg) { return WrappedAngle(deg_to_rad(deg)); }

        constexpr double radians() const { return value_; }
        constexpr double degrees() const { return rad_to_deg(value_); }

        WrappedAngle operator-() const { return WrappedAngle(-value_); }
        friend WrappedAngle operator+(WrappedAngle a, WrappedAngle b) { return WrappedAngle(a.value_ + b.value_); }
        friend WrappedAngle operator-(WrappedAngle a, WrappedAngle b) { return WrappedAngle(a.value_ - b.value_); }
        friend constexpr bool operator==(WrappedAngle, WrappedAngle) = default;

    private:
        double value_ = 0.0;
    };

    inline WrappedAngle wrap_angle(double x) { return WrappedAngle(x); }

    // One confocal ellipse of the model: Tx and Rx sit in the foci, the
    // excess path length c*tau fixes the shape.
    struct Ellipse
    {
        int index = 0;             // cluster index i >= 1
        double delay = 0.0;        // tau_i in seconds, > 0
        double eccentricity = 0.0; // e_i in (0, 1)
    };

    // e = d / (d + c*tau). Requires d > 0 and tau >= 0.
    double eccentricity(double distance_m, double delay_s);

    Ellipse make_ellipse(int index, double distance_m, double delay_s);

    // Departure angle at Tx -> arrival angle at Rx for scatterers on the
    // ellipse with eccentricity e in (0, 1]. e = 1 is the degenerate
    // zero-delay ellipse: every direction collapses onto 0 except phi_T = pi.
    WrappedAngle aoa_from_aod(WrappedAngle phi_t, double e);

    // Closed-form inverse of aoa_from_aod for e in (0, 1).
    WrappedAngle aod_from_aoa(WrappedAngle phi_r, double e);

    // |d phi_R / d phi_T| = (1 - e^2) / (1 + e^2 + 2 e cos phi_T) for e in (0, 1).
    // The expression is smooth through phi_T = 0 and pi, so the endpoints
    // return their one-sided limits.
    double aoa_jacobian(WrappedAngle phi_t, double e);
}

#endif
