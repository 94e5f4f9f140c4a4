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


#include "mcm/sampling.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mcm
{
    namespace
    {
        std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t stream_id)
        {
            return std::seed_seq{
                static_cast<std::uint32_t>(seed & 0xffffffffu),
                static_cast<std::uint32_t>(seed >> 32),
                static_cast<std::uint32_t>(stream_id & 0xffffffffu),
                static_cast<std::uint32_t>(stream_id >> 32)};
        }

        std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream_id)
        {
            auto seq = make_seed_seq(seed, stream_id);
            return std::mt19937_64(seq);
        }

        constexpr std::size_t max_rejections = 1000000;
    }

    RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id), engine_(make_engine(seed, stream_id))
    {
    }

    double RngStream::uniform()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double RngStream::uniform_open()
    {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double RngStream::normal()
    {
        for (;;)
        {
            const double u = 2.0 * uniform() - 1.0;
            const double v = 2.0 * uniform() - 1.0;
            const double s = u * u + v * v;
            if (s > 0.0 && s < 1.0)
                return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }

    double bessel_i0(double x)
    {
        if (!(x >= 0.0))
            throw std::invalid_argument("bessel_i0: argument must be non-negative");
        return boost::math::cyl_bessel_i(0, x);
    }

    VonMisesParams::VonMisesParams(double mu) : concentration(mu)
    {
        if (!(mu >= 0.0) || !std::isfinite(mu))
            throw std::invalid_argument("VonMisesParams: concentration must be finite and >= 0");
    }

    double von_mises_pdf(const VonMisesParams &p, WrappedAngle phi)
    {
        const double mu = p.concentration;
        if (mu == 0.0)
            return 1.0 / two_pi;
        return std::exp(mu * std::cos(phi.radians()) - std::log(bessel_i0(mu))) / two_pi;
    }

    std::vector<WrappedAngle> sample_aod(const AodDensity &d, RngStream &rng, std::size_t n)
    {
        if (n == 0)
            throw std::invalid_argument("sample_aod: need at least one sample");

        const AntennaPattern &pat = d.pattern();
        std::vector<WrappedAngle> out;
        out.reserve(n);

        if (pat.is_omnidirectional())
        {
            for (std::size_t k = 0; k < n; ++k)
                out.emplace_back(pi - two_pi * rng.uniform());
            return out;
        }

        const double sigma = pat.sigma();
        const double centre = pat.boresight().radians();
        for (std::size_t k = 0; k < n; ++k)
        {
            std::size_t tries = 0;
            double z = 0.0;
            do
            {
                if (++tries > max_rejections)
                    throw std::runtime_error("sample_aod: rejection sampler did not terminate");
                z = sigma * rng.normal();
            } while (std::abs(z) > pi);
            out.emplace_back(centre + z);
        }
        return out;
    }

    std::vector<WrappedAngle> sample_local_aoa(const VonMisesParams &p, RngStream &rng, std::size_t n)
    {
        if (n == 0)
            throw std::invalid_argument("sample_local_aoa: need at least one sample");

        std::vector<WrappedAngle> out;
        out.reserve(n);
        const double mu = p.concentration;

        if (mu == 0.0)
        {
            for (std::size_t k = 0; k < n; ++k)
                out.emplace_back(pi - two_pi * rng.uniform());
            return out;
        }

        const double tau = 1.0 + std::sqrt(1.0 + 4.0 * mu * mu);
        const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * mu);
        const double r = (1.0 + rho * rho) / (2.0 * rho);

        for (std::size_t k = 0; k < n; ++k)
        {
            std::size_t tries = 0;
            double f = 0.0;
            for (;;)
            {
                if (++tries > max_rejections)
                    throw std::runtime_error("sample_local_aoa: rejection sampler did not terminate");
                const double u1 = rng.uniform();
                const double u2 = rng.uniform_open();
                const double z = std::cos(pi * u1);
                f = (1.0 + r * z) / (r + z);
                const double c = mu * (r - f);
                if (c * (2.0 - c) - u2 > 0.0 || std::log(c / u2) + 1.0 - c >= 0.0)
                    break;
            }
            const double theta = std::acos(std::clamp(f, -1.0, 1.0));
            out.emplace_back(rng.uniform() < 0.5 ? -theta : theta);
        }
        return out;
    }

    std::vector<double> sample_cluster_powers(double cluster_power, std::size_t paths, RngStream &rng)
    {
        if (!(cluster_power > 0.0))
            throw std::invalid_argument("sample_cluster_powers: cluster power must be positive");
        if (paths == 0)
            throw std::invalid_argument("sample_cluster_powers: need at least one path");

        const double upper = 2.0 * cluster_power / static_cast<double>(paths);
        std::vector<double> out(paths);
        for (auto &v : out)
            v = upper * rng.uniform();
        return out;
    }

    std::vector<double> sample_local_powers(double cluster_power, double kappa, std::size_t paths, RngStream &rng)
    {
        if (!(kappa >= 0.0) || !std::isfinite(kappa))
            throw std::invalid_argument("sample_local_powers: Rician factor must be finite and >= 0");
        return sample_cluster_powers(cluster_power / (1.0 + kappa), paths, rng);
    }
}
