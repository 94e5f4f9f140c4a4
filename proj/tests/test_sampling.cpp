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


#include <doctest.h>

#include "mcm/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

using namespace mcm;

namespace
{
    double series_i0(double x, int terms)
    {
        double sum = 0.0, term = 1.0;
        const double q = x * x / 4.0;
        for (int k = 0; k < terms; ++k)
        {
            sum += term;
            term *= q / ((k + 1.0) * (k + 1.0));
        }
        return sum;
    }

    // Kolmogorov-Smirnov statistic of samples against a CDF on (-pi, pi].
    template <typename Cdf>
    double ks_statistic(std::vector<double> xs, Cdf cdf)
    {
        std::sort(xs.begin(), xs.end());
        const double n = static_cast<double>(xs.size());
        double d = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i)
        {
            const double f = cdf(xs[i]);
            d = std::max({d, std::abs(f - i / n), std::abs((i + 1) / n - f)});
        }
        return d;
    }

    // Tabulated CDF of a density on (-pi, pi] by cumulative trapezoid on a fine grid.
    struct TabulatedCdf
    {
        std::vector<double> cum;
        double h;

        template <typename Pdf>
        TabulatedCdf(Pdf pdf, int n = 400000) : cum(n + 1, 0.0), h(two_pi / n)
        {
            double prev = pdf(-pi);
            for (int k = 1; k <= n; ++k)
            {
                const double cur = pdf(-pi + k * h);
                cum[k] = cum[k - 1] + 0.5 * h * (prev + cur);
                prev = cur;
            }
            for (auto &c : cum)
                c /= cum.back();
        }

        double operator()(double x) const
        {
            const double pos = (x + pi) / h;
            const auto k = std::min<std::size_t>(static_cast<std::size_t>(pos), cum.size() - 2);
            const double t = pos - k;
            return cum[k] * (1 - t) + cum[k + 1] * t;
        }
    };

    std::vector<double> radians(const std::vector<WrappedAngle> &v)
    {
        std::vector<double> out;
        out.reserve(v.size());
        for (auto a : v)
            out.push_back(a.radians());
        return out;
    }

    const double ks_critical_001 = 1.628; // sqrt(n) * D at alpha = 0.01
}

TEST_CASE("RngStream is deterministic and keyed by (seed, stream)")
{
    RngStream a(42, 3), b(42, 3), c(42, 4), d(43, 3);
    std::vector<std::uint64_t> va, vb, vc, vd;
    for (int k = 0; k < 10; ++k)
    {
        va.push_back(a.next_u64());
        vb.push_back(b.next_u64());
        vc.push_back(c.next_u64());
        vd.push_back(d.next_u64());
    }
    CHECK(va == vb);
    CHECK(va != vc);
    CHECK(va != vd);

    RngStream u(1, 0);
    for (int k = 0; k < 100000; ++k)
    {
        const double x = u.uniform();
        const double y = u.uniform_open();
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
        REQUIRE(y > 0.0);
        REQUIRE(y < 1.0);
    }
}

TEST_CASE("distinct sub-streams are uncorrelated")
{
    RngStream s0(9, 0), s1(9, 1);
    const int n = 100000;
    double sxy = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0;
    for (int k = 0; k < n; ++k)
    {
        const double x = s0.uniform(), y = s1.uniform();
        sx += x, sy += y, sxy += x * y, sxx += x * x, syy += y * y;
    }
    const double cov = sxy / n - (sx / n) * (sy / n);
    const double r = cov / std::sqrt((sxx / n - sx * sx / n / n) * (syy / n - sy * sy / n / n));
    CHECK(std::abs(r) < 4.0 / std::sqrt(n));
}

TEST_CASE("normal draws have unit variance")
{
    RngStream s(5, 0);
    const int n = 200000;
    double m = 0.0, m2 = 0.0;
    for (int k = 0; k < n; ++k)
    {
        const double z = s.normal();
        m += z;
        m2 += z * z;
    }
    m /= n;
    m2 /= n;
    CHECK(std::abs(m) < 4.0 / std::sqrt(n));
    CHECK(std::abs(m2 - 1.0) < 4.0 * std::sqrt(2.0 / n));
}

TEST_CASE("bessel_i0")
{
    CHECK(bessel_i0(0.0) == 1.0);
    CHECK(bessel_i0(1.0) == doctest::Approx(series_i0(1.0, 30)).epsilon(1e-12));
    CHECK(bessel_i0(1.0) == doctest::Approx(1.2660658777520082).epsilon(1e-14));
    CHECK(bessel_i0(10.0) == doctest::Approx(series_i0(10.0, 80)).epsilon(1e-10));
    CHECK(std::abs(bessel_i0(10.0) / series_i0(10.0, 80) - 1.0) < 1e-12);
    CHECK(std::abs(bessel_i0(50.0) / series_i0(50.0, 200) - 1.0) < 1e-12);
    CHECK(std::abs(bessel_i0(50.0) / std::cyl_bessel_i(0.0, 50.0) - 1.0) < 1e-12);
    for (double x = 0.05; x < 40.0; x *= 1.7)
        REQUIRE(std::abs(bessel_i0(x) / series_i0(x, 200) - 1.0) < 1e-12);
    CHECK_THROWS_AS(bessel_i0(-1.0), std::invalid_argument);
}

TEST_CASE("von_mises_pdf")
{
    CHECK(von_mises_pdf(VonMisesParams(0.0), WrappedAngle(1.234)) == 1.0 / two_pi);

    for (double mu : {0.5, 1.0, 10.0, 50.0})
    {
        const VonMisesParams p(mu);
        const double ratio = von_mises_pdf(p, WrappedAngle(0.0)) / von_mises_pdf(p, WrappedAngle(pi));
        CHECK(ratio == doctest::Approx(std::exp(2.0 * mu)).epsilon(1e-10));
    }

    for (double mu : {0.0, 1.0, 10.0, 50.0})
    {
        const VonMisesParams p(mu);
        const int n = 20000;
        const double h = two_pi / n;
        double s = von_mises_pdf(p, WrappedAngle(-pi)) + von_mises_pdf(p, WrappedAngle(pi));
        for (int k = 1; k < n; ++k)
            s += von_mises_pdf(p, WrappedAngle(-pi + k * h)) * (k % 2 ? 4.0 : 2.0);
        CHECK(std::abs(s * h / 3.0 - 1.0) < 1e-9);
    }

    CHECK_THROWS_AS(VonMisesParams(-0.1), std::invalid_argument);
}

TEST_CASE("sample_aod follows the departure density")
{
    const std::size_t n = 100000;
    for (double h : {10.0, 68.0, 200.0})
    {
        const AodDensity d(AntennaPattern(WrappedAngle::from_degrees(150.0), deg_to_rad(h)));
        RngStream rng(17, 1);
        const auto xs = radians(sample_aod(d, rng, n));
        for (double x : xs)
        {
            REQUIRE(x > -pi);
            REQUIRE(x <= pi);
        }

        const TabulatedCdf cdf([&](double x) { return aod_pdf(d, WrappedAngle(x)); });
        CHECK(ks_statistic(xs, cdf) * std::sqrt(static_cast<double>(n)) < ks_critical_001);

        // mean offset from the boresight
        double m = 0.0, m2 = 0.0;
        for (double x : xs)
        {
            const double o = WrappedAngle(x - deg_to_rad(150.0)).radians();
            m += o;
            m2 += o * o;
        }
        m /= n;
        const double sd = std::sqrt(m2 / n - m * m);
        CHECK(std::abs(m) < 3.0 * sd / std::sqrt(static_cast<double>(n)));
    }
}

TEST_CASE("sample_aod with an omnidirectional Tx is uniform")
{
    const AodDensity d(AntennaPattern::omnidirectional());
    RngStream rng(3, 1);
    const std::size_t n = 100000;
    const auto xs = radians(sample_aod(d, rng, n));
    std::vector<double> hist(36, 0.0);
    for (double x : xs)
        hist[std::min<std::size_t>(35, static_cast<std::size_t>((x + pi) / two_pi * 36))] += 1.0;
    const double expect = n / 36.0;
    for (double c : hist)
        CHECK(std::abs(c - expect) < 4.0 * std::sqrt(expect));
    CHECK_THROWS_AS(sample_aod(d, rng, 0), std::invalid_argument);
}

TEST_CASE("sample_local_aoa")
{
    const std::size_t n = 100000;

    SUBCASE("mu = 0 is uniform")
    {
        RngStream rng(21, 0);
        const auto xs = radians(sample_local_aoa(VonMisesParams(0.0), rng, n));
        CHECK(ks_statistic(xs, [](double x) { return (x + pi) / two_pi; }) * std::sqrt(double(n)) < ks_critical_001);
    }

    SUBCASE("KS against the von Mises CDF")
    {
        for (double mu : {0.3, 2.0, 10.0, 50.0})
        {
            RngStream rng(22, 0);
            const VonMisesParams p(mu);
            const auto xs = radians(sample_local_aoa(p, rng, n));
            const TabulatedCdf cdf([&](double x) { return von_mises_pdf(p, WrappedAngle(x)); });
            CHECK(ks_statistic(xs, cdf) * std::sqrt(double(n)) < ks_critical_001);
        }
    }

    SUBCASE("mu = 10 histogram matches the density")
    {
        // 1e6 draws: at 1e5 the expected sampling L1 over 360 bins is already ~0.024
        const std::size_t big = 1000000;
        RngStream rng(23, 0);
        const VonMisesParams p(10.0);
        const auto xs = radians(sample_local_aoa(p, rng, big));
        std::vector<double> hist(360, 0.0);
        for (double x : xs)
            hist[std::min<std::size_t>(359, static_cast<std::size_t>((x + pi) / two_pi * 360))] += 1.0;
        const double w = two_pi / 360;
        double l1 = 0.0;
        for (int b = 0; b < 360; ++b)
        {
            // bin probability by midpoint-refined integration
            double pb = 0.0;
            for (int q = 0; q < 16; ++q)
                pb += von_mises_pdf(p, WrappedAngle(-pi + (b + (q + 0.5) / 16.0) * w)) * w / 16.0;
            l1 += std::abs(hist[b] / big - pb);
        }
        CHECK(l1 < 0.02);
    }

    SUBCASE("fixed seed reproduces the first draws")
    {
        RngStream a(99, 0), b(99, 0);
        const auto xa = sample_local_aoa(VonMisesParams(10.0), a, 10);
        const auto xb = sample_local_aoa(VonMisesParams(10.0), b, 10);
        CHECK(xa == xb);
    }
}

TEST_CASE("sample_cluster_powers")
{
    RngStream rng(4, 2);
    const double p = 0.3;
    const std::size_t m = 50;
    for (double v : sample_cluster_powers(p, m, rng))
    {
        CHECK(v >= 0.0);
        CHECK(v < 2.0 * p / m);
    }

    const int reps = 200;
    double mean = 0.0;
    for (int r = 0; r < reps; ++r)
    {
        double s = 0.0;
        for (double v : sample_cluster_powers(p, m, rng))
            s += v;
        mean += s / reps;
    }
    const double sd = (2.0 * p / m) * std::sqrt(m / 12.0) / std::sqrt(static_cast<double>(reps));
    CHECK(std::abs(mean - p) < 3.0 * sd);

    const auto one = sample_cluster_powers(p, 1, rng);
    REQUIRE(one.size() == 1);
    CHECK(one[0] < 2.0 * p);

    CHECK_THROWS_AS(sample_cluster_powers(0.0, 5, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_cluster_powers(-1.0, 5, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_cluster_powers(1.0, 0, rng), std::invalid_argument);
}

TEST_CASE("sample_local_powers")
{
    const double p0 = 0.8;
    const std::size_t m = 40;

    RngStream a(8, 0), b(8, 0);
    CHECK(sample_local_powers(p0, 0.0, m, a) == sample_cluster_powers(p0, m, b));

    RngStream rng(8, 1);
    for (double v : sample_local_powers(p0, 1.0, m, rng))
        CHECK(v < p0 / m);

    const double kappa = 3.0;
    const int reps = 200;
    double mean = 0.0;
    for (int r = 0; r < reps; ++r)
    {
        double s = 0.0;
        for (double v : sample_local_powers(p0, kappa, m, rng))
            s += v;
        mean += s / reps;
    }
    const double upper = 2.0 * p0 / ((1.0 + kappa) * m);
    const double sd = upper * std::sqrt(m / 12.0) / std::sqrt(static_cast<double>(reps));
    CHECK(std::abs(mean - p0 / (1.0 + kappa)) < 3.0 * sd);

    CHECK_THROWS_AS(sample_local_powers(p0, -1.0, m, rng), std::invalid_argument);
}
