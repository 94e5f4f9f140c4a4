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


#include "mcm/engine.hpp"
#include "mcm/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <cmath>
#include <thread>

namespace mcm
{
    namespace
    {
        // Runs task(0..count-1) on up to `workers` threads. Each index is
        // processed exactly once; results go into per-index slots.
        template <typename Task>
        void parallel_for(std::size_t count, unsigned workers, Task &&task)
        {
            const std::size_t n_threads = std::min<std::size_t>(std::max(1u, workers), count);
            if (n_threads <= 1)
            {
                for (std::size_t i = 0; i < count; ++i)
                    task(i);
                return;
            }
            std::atomic<std::size_t> next{0};
            std::exception_ptr error;
            std::atomic<bool> failed{false};
            {
                std::vector<std::jthread> pool;
                pool.reserve(n_threads);
                for (std::size_t t = 0; t < n_threads; ++t)
                    pool.emplace_back([&]
                    {
                        for (std::size_t i = next++; i < count && !failed; i = next++)
                        {
                            try
                            {
                                task(i);
                            }
                            catch (...)
                            {
                                if (!failed.exchange(true))
                                    error = std::current_exception();
                            }
                        }
                    });
            }
            if (error)
                std::rethrow_exception(error);
        }

        PasCurve empty_curve(const AngularGrid &g, CurveKind kind)
        {
            PasCurve c;
            c.kind = kind;
            c.bin_width = g.width();
            c.values.assign(g.size(), 0.0);
            c.bin_centers.reserve(g.size());
            for (std::size_t k = 0; k < g.size(); ++k)
                c.bin_centers.push_back(g.center(k));
            return c;
        }

        std::vector<Path> generate_cluster(const Scenario &s, std::size_t i)
        {
            const auto &cl = s.pdp[i];
            const std::size_t m = s.paths_in_cluster(i);
            RngStream rng(s.seed, i);
            std::vector<Path> out;

            if (i == 0)
            {
                const auto aoa = sample_local_aoa(VonMisesParams(s.mu), rng, m);
                const auto pw = sample_local_powers(cl.power, s.kappa, m, rng);
                out.reserve(m + 1);
                for (std::size_t j = 0; j < m; ++j)
                    out.push_back({0, PathKind::local, WrappedAngle(), aoa[j], pw[j], 0.0});
                if (s.kappa > 0.0)
                    out.push_back({0, PathKind::direct, WrappedAngle(), WrappedAngle(0.0),
                                   s.kappa * cl.power / (1.0 + s.kappa), 0.0});
            }
            else
            {
                const double e = eccentricity(s.distance_m, cl.delay);
                const auto aod = sample_aod(AodDensity(s.tx), rng, m);
                const auto pw = sample_cluster_powers(cl.power, m, rng);
                out.reserve(m);
                for (std::size_t j = 0; j < m; ++j)
                    out.push_back({static_cast<int>(i), PathKind::delayed, aod[j], aoa_from_aod(aod[j], e), pw[j], 0.0});
            }

            for (auto &p : out)
                p.power_out = p.power_in * pattern_power_weight(s.rx, p.aoa);
            return out;
        }
    }

    PasScale parse_pas_scale(std::string_view s)
    {
        if (s == "input_power")
            return PasScale::input_power;
        if (s == "output_power")
            return PasScale::output_power;
        throw std::invalid_argument("pas_scale must be \"input_power\" or \"output_power\", got \"" + std::string(s) + "\"");
    }

    std::string_view to_string(PasScale s)
    {
        return s == PasScale::input_power ? "input_power" : "output_power";
    }

    AngularGrid::AngularGrid(double bin_half_width)
    {
        if (!(bin_half_width > 0.0) || !std::isfinite(bin_half_width))
            throw std::invalid_argument("AngularGrid: bin half-width must be positive");
        const double bins = two_pi / (2.0 * bin_half_width);
        const double rounded = std::round(bins);
        if (rounded < 1.0 || std::abs(bins - rounded) > 1e-9 * bins)
            throw std::invalid_argument("AngularGrid: bin width must divide 360 deg into a whole number of bins");
        n_ = static_cast<std::size_t>(rounded);
        width_ = two_pi / rounded;
        first_ = -static_cast<long>((n_ - 1) / 2);
    }

    WrappedAngle AngularGrid::center(std::size_t k) const
    {
        return WrappedAngle(static_cast<double>(first_ + static_cast<long>(k)) * width_);
    }

    std::size_t AngularGrid::index_of(WrappedAngle phi) const
    {
        const long m = static_cast<long>(std::ceil(phi.radians() / width_ - 0.5));
        long k = (m - first_) % static_cast<long>(n_);
        if (k < 0)
            k += static_cast<long>(n_);
        return static_cast<std::size_t>(k);
    }

    std::size_t AngularGrid::mirror(std::size_t k) const
    {
        const long m = first_ + static_cast<long>(k);
        long j = (-m - first_) % static_cast<long>(n_);
        if (j < 0)
            j += static_cast<long>(n_);
        return static_cast<std::size_t>(j);
    }

    void Scenario::validate() const
    {
        if (!(distance_m > 0.0) || !std::isfinite(distance_m))
            throw std::invalid_argument("scenario: Tx-Rx distance must be positive");
        if (!(kappa >= 0.0) || !std::isfinite(kappa))
            throw std::invalid_argument("scenario: Rician factor must be >= 0");
        (void)VonMisesParams(mu);
        if (paths_per_cluster.size() != 1 && paths_per_cluster.size() != pdp.size())
            throw std::invalid_argument("scenario: paths_per_cluster needs 1 entry or one per cluster");
        for (auto m : paths_per_cluster)
            if (m < 1)
                throw std::invalid_argument("scenario: every cluster needs at least one path");
        (void)grid();
    }

    std::size_t Scenario::paths_in_cluster(std::size_t i) const
    {
        return paths_per_cluster.size() == 1 ? paths_per_cluster.front() : paths_per_cluster.at(i);
    }

    double PathSet::total_power_in() const
    {
        double t = 0.0;
        for (const auto &p : paths)
            t += p.power_in;
        return t;
    }

    double PathSet::total_power_out() const
    {
        double t = 0.0;
        for (const auto &p : paths)
            t += p.power_out;
        return t;
    }

    PathSet generate_paths(const Scenario &s, unsigned workers)
    {
        s.validate();
        std::vector<std::vector<Path>> per_cluster(s.pdp.size());
        parallel_for(per_cluster.size(), workers, [&](std::size_t i) { per_cluster[i] = generate_cluster(s, i); });

        PathSet set;
        std::size_t total = 0;
        for (const auto &c : per_cluster)
            total += c.size();
        set.paths.reserve(total);
        for (auto &c : per_cluster)
            set.paths.insert(set.paths.end(), c.begin(), c.end());
        return set;
    }

    double PasCurve::integral() const
    {
        double t = 0.0;
        for (double v : values)
            t += v;
        return t * bin_width;
    }

    PasCurve cluster_aoa_pdf(const Scenario &s, const PathSet &paths, std::size_t cluster)
    {
        if (cluster < 1 || cluster >= s.pdp.size())
            throw std::invalid_argument("cluster_aoa_pdf: not a delayed cluster index");
        const auto grid = s.grid();
        PasCurve c = empty_curve(grid, CurveKind::aoa_pdf);
        double mass = 0.0;
        for (const auto &p : paths.paths)
        {
            if (p.kind != PathKind::delayed || p.cluster != static_cast<int>(cluster))
                continue;
            c.values[grid.index_of(p.aoa)] += p.power_in;
            mass += p.power_in;
        }
        if (!(mass > 0.0))
            throw DegenerateResult("cluster_aoa_pdf: delayed cluster " + std::to_string(cluster) + " has no sampled power");
        for (auto &v : c.values)
            v /= mass * grid.width();
        c.total_power = mass;
        return c;
    }

    PasCurve estimate_aoa_pdf(const Scenario &s, const PathSet &paths)
    {
        const auto grid = s.grid();
        const double w = grid.width();
        const double p_total = s.pdp.total_power();
        const std::size_t n_clusters = s.pdp.size();

        // cluster-wise power histograms of the delayed components
        std::vector<std::vector<double>> hist(n_clusters, std::vector<double>(grid.size(), 0.0));
        std::vector<double> mass(n_clusters, 0.0);
        for (const auto &p : paths.paths)
        {
            if (p.kind != PathKind::delayed)
                continue;
            hist[p.cluster][grid.index_of(p.aoa)] += p.power_in;
            mass[p.cluster] += p.power_in;
        }

        PasCurve c = empty_curve(grid, CurveKind::aoa_pdf);
        for (std::size_t i = 1; i < n_clusters; ++i)
        {
            if (!(mass[i] > 0.0))
                throw DegenerateResult("estimate_aoa_pdf: delayed cluster " + std::to_string(i) + " has no sampled power");
            const double weight = s.pdp[i].power / p_total;
            for (std::size_t k = 0; k < grid.size(); ++k)
                c.values[k] += weight * hist[i][k] / (mass[i] * w);
        }

        // local scattering: analytic density sampled on the grid, renormalised
        // to unit grid sum
        const VonMisesParams vm(s.mu);
        std::vector<double> local(grid.size());
        double local_sum = 0.0;
        for (std::size_t k = 0; k < grid.size(); ++k)
        {
            local[k] = von_mises_pdf(vm, c.bin_centers[k]);
            local_sum += local[k];
        }
        const double p0 = s.pdp[0].power;
        const double local_weight = p0 / ((s.kappa + 1.0) * p_total);
        for (std::size_t k = 0; k < grid.size(); ++k)
            c.values[k] += local_weight * local[k] / (local_sum * w);

        c.discrete_mass = s.kappa * p0 / ((s.kappa + 1.0) * p_total);
        c.total_power = p_total;
        return c;
    }

    namespace
    {
        template <typename Weight>
        PasCurve weighted_histogram(const AngularGrid &grid, const PathSet &paths, CurveKind kind, Weight weight)
        {
            PasCurve c = empty_curve(grid, kind);
            double total = 0.0;
            for (const auto &p : paths.paths)
            {
                const double v = weight(p);
                c.values[grid.index_of(p.aoa)] += v;
                total += v;
            }
            if (!(total > 0.0))
                throw DegenerateResult("power histogram: no power reaches the receiver output");
            const double scale = 1.0 / (total * grid.width());
            for (auto &v : c.values)
                v *= scale;
            c.total_power = total;
            return c;
        }
    }

    PasCurve input_power_histogram(const Scenario &s, const PathSet &paths)
    {
        return weighted_histogram(s.grid(), paths, CurveKind::aoa_pdf, [](const Path &p) { return p.power_in; });
    }

    PasCurve estimate_aor_pdf(const Scenario &s, const PathSet &paths)
    {
        return weighted_histogram(s.grid(), paths, CurveKind::aor_pdf, [](const Path &p) { return p.power_out; });
    }

    PasCurve compute_pas(const Scenario &s, const PasCurve &aor)
    {
        if (aor.kind != CurveKind::aor_pdf)
            throw std::invalid_argument("compute_pas: expects an aor_pdf curve");
        const double scale = s.pas_scale == PasScale::input_power ? s.pdp.total_power() : aor.total_power;
        PasCurve c = aor;
        c.kind = CurveKind::pas;
        for (auto &v : c.values)
            v *= scale;
        c.total_power = scale;
        c.discrete_mass = 0.0;
        return c;
    }

    double angular_spread(const PasCurve &curve)
    {
        const std::size_t n = curve.values.size();
        double mass = 0.0;
        for (double v : curve.values)
            mass += v;
        if (!(mass > 0.0))
            throw std::invalid_argument("angular_spread: curve has no mass");

        double best = HUGE_VAL;
        for (std::size_t r = 0; r < n; ++r)
        {
            const WrappedAngle ref = curve.bin_centers[r];
            double m2 = 0.0;
            for (std::size_t k = 0; k < n; ++k)
            {
                if (curve.values[k] == 0.0)
                    continue;
                const double d = (curve.bin_centers[k] - ref).radians();
                m2 += curve.values[k] * d * d;
            }
            best = std::min(best, m2);
        }
        return std::sqrt(best / mass);
    }

    double total_variation(const PasCurve &a, const PasCurve &b)
    {
        if (a.values.size() != b.values.size())
            throw std::invalid_argument("total_variation: curves are on different grids");
        double sa = 0.0, sb = 0.0;
        for (std::size_t k = 0; k < a.values.size(); ++k)
        {
            sa += a.values[k];
            sb += b.values[k];
        }
        if (!(sa > 0.0) || !(sb > 0.0))
            throw std::invalid_argument("total_variation: curve has no mass");
        double l1 = 0.0;
        for (std::size_t k = 0; k < a.values.size(); ++k)
            l1 += std::abs(a.values[k] / sa - b.values[k] / sb);
        return 0.5 * l1;
    }

    PasCurve mirrored(const PasCurve &c)
    {
        const AngularGrid grid(c.bin_width / 2.0);
        PasCurve out = c;
        for (std::size_t k = 0; k < c.values.size(); ++k)
            out.values[grid.mirror(k)] = c.values[k];
        return out;
    }

    Simulation simulate(const Scenario &s, unsigned workers)
    {
        Simulation sim;
        sim.paths = generate_paths(s, workers);
        sim.aoa_pdf = estimate_aoa_pdf(s, sim.paths);
        sim.aor_pdf = estimate_aor_pdf(s, sim.paths);
        sim.pas = compute_pas(s, sim.aor_pdf);
        sim.output_power = sim.aor_pdf.total_power;
        sim.angular_spread = angular_spread(sim.pas);
        return sim;
    }

    Scenario with_orientation(const Scenario &s, WrappedAngle alpha, WrappedAngle beta)
    {
        Scenario out = s;
        out.tx = s.tx.with_boresight(alpha);
        out.rx = s.rx.with_boresight(beta);
        return out;
    }

    SweepResult orientation_sweep(const Scenario &s, const std::vector<WrappedAngle> &alphas,
                                  const std::vector<WrappedAngle> &betas, unsigned workers)
    {
        if (alphas.empty() || betas.empty())
            throw std::invalid_argument("orientation_sweep: angle grids must not be empty");
        s.validate();

        SweepResult res;
        res.alphas = alphas;
        res.betas = betas;
        res.cells.resize(alphas.size() * betas.size());
        parallel_for(res.cells.size(), workers, [&](std::size_t idx)
        {
            const auto a = alphas[idx / betas.size()];
            const auto b = betas[idx % betas.size()];
            const auto sim = simulate(with_orientation(s, a, b), 1);
            res.cells[idx] = {a, b, sim.output_power, sim.angular_spread};
        });
        return res;
    }
}
