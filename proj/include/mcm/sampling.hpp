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


#ifndef MCM_SAMPLING_HPP
#define MCM_SAMPLING_HPP

#include "mcm/angle.hpp"
#include "mcm/antenna.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace mcm
{
    // Seedable random stream. The engine is std::mt19937_64 keyed through
    // std::seed_seq by (seed, stream_id); both are fixed by the C++ standard,
    // so the sequence is the same on every conforming platform. The value
    // transforms below are implemented here because the <random>
    // distributions are implementation-defined.
    class RngStream
    {
    public:
        RngStream(std::uint64_t seed, std::uint64_t stream_id);

        std::uint64_t seed() const { return seed_; }
        std::uint64_t stream_id() const { return stream_id_; }

        std::uint64_t next_u64() { return engine_(); }

        // [0, 1)
        double uniform();

        // (0, 1)
        double uniform_open();

        // Standard normal, Marsaglia polar method.
        double normal();

    private:
        std::uint64_t seed_;
        std::uint64_t stream_id_;
        std::mt19937_64 engine_;
    };

    // Modified Bessel function of the first kind, order zero. x >= 0.
    double bessel_i0(double x);

    // von Mises law with mean direction 0 and concentration mu >= 0.
    struct VonMisesParams
    {
        double concentration = 0.0;

        explicit VonMisesParams(double mu);
    };

    double von_mises_pdf(const VonMisesParams &p, WrappedAngle phi);

    // Draws from C_T g_T^2: zero-mean normal with sigma = hpbw/(4 sqrt ln2),
    // rejected outside [-pi, pi], shifted by the boresight and wrapped.
    // Throws std::runtime_error if any single draw needs more than 1e6 tries.
    std::vector<WrappedAngle> sample_aod(const AodDensity &d, RngStream &rng, std::size_t n);

    // Best-Fisher wrapped-Cauchy envelope rejection; mu = 0 is uniform.
    std::vector<WrappedAngle> sample_local_aoa(const VonMisesParams &p, RngStream &rng, std::size_t n);

    // M i.i.d. draws from Uniform[0, 2P/M).
    std::vector<double> sample_cluster_powers(double cluster_power, std::size_t paths, RngStream &rng);

    // M_0 draws from Uniform[0, 2 P_0 / ((1 + kappa) M_0)). The direct path
    // kappa P_0 / (1 + kappa) is not part of this draw.
    std::vector<double> sample_local_powers(double cluster_power, double kappa, std::size_t paths, RngStream &rng);
}

#endif
