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


#ifndef MCM_ENGINE_HPP
#define MCM_ENGINE_HPP

#include "mcm/angle.hpp"
#include "mcm/antenna.hpp"
#include "mcm/pdp.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mcm
{
    // Which total multiplies the Rx-output angular density to form the PAS:
    // the antenna-input total P_R (literal model) or the sampled output total
    // sum p_R,ij (energy-consistent variant).
    enum class PasScale
    {
        input_power,
        output_power
    };

    PasScale parse_pas_scale(std::string_view s);
    std::string_view to_string(PasScale s);

    // Bins of width 2*eps centred on k*width, k in (-N/2, N/2]. Bin k holds
    // (centre - eps, centre + eps]; the bin centred on +pi also holds -pi.
    class AngularGrid
    {
    public:
        explicit AngularGrid(double bin_half_width);

        std::size_t size() const { return n_; }
        double width() const { return width_; }
        double half_width() const { return width_ / 2.0; }
        WrappedAngle center(std::size_t k) const;
        std::size_t index_of(WrappedAngle phi) const;

        // Bin holding -phi for phi at the centre of bin k.
        std::size_t mirror(std::size_t k) const;

    private:
        std::size_t n_;
        double width_;
        long first_; // multiple of width at k = 0
    };

    struct Scenario
    {
        double distance_m = 0.0;
        double kappa = 0.0;
        double mu = 10.0;
        AntennaPattern tx = AntennaPattern::omnidirectional();
        AntennaPattern rx = AntennaPattern::omnidirectional();
        Pdp pdp = Pdp({{0, 0.0, 1.0}, {1, 1e-7, 1.0}});
        std::vector<std::size_t> paths_per_cluster{2000}; // one entry for all clusters, or one per cluster
        double bin_half_width = deg_to_rad(0.5);
        std::uint64_t seed = 1;
        PasScale pas_scale = PasScale::input_power;
        double carrier_hz = 0.0; // informational

        // Throws std::invalid_argument when an invariant fails.
        void validate() const;

        std::size_t paths_in_cluster(std::size_t i) const;
        AngularGrid grid() const { return AngularGrid(bin_half_width); }
    };

    enum class PathKind
    {
        local,
        direct,
        delayed
    };

    struct Path
    {
        int cluster = 0;
        PathKind kind = PathKind::delayed;
        WrappedAngle aod;       // departure angle; delayed paths only
        WrappedAngle aoa;       // phi_R,ij
        double power_in = 0.0;  // p_ij
        double power_out = 0.0; // p_ij * g_R^2(aoa)
    };

    struct PathSet
    {
        std::vector<Path> paths;

        double total_power_in() const;
        double total_power_out() const;
    };

    // Runs the per-cluster Monte Carlo. Cluster i draws from RngStream(seed, i)
    // so the result does not depend on `workers`.
    PathSet generate_paths(const Scenario &s, unsigned workers = 1);

    enum class CurveKind
    {
        aoa_pdf,
        aor_pdf,
        pas
    };

    struct PasCurve
    {
        CurveKind kind = CurveKind::pas;
        std::vector<WrappedAngle> bin_centers;
        std::vector<double> values; // 1/rad for pdfs, power/rad for pas
        double bin_width = 0.0;
        double total_power = 0.0;
        double discrete_mass = 0.0; // direct-path atom not held by `values` (aoa_pdf only)

        // sum(values) * bin_width
        double integral() const;
    };

    // Power-weighted arrival histogram of one delayed cluster (input powers),
    // normalised to unit area.
    PasCurve cluster_aoa_pdf(const Scenario &s, const PathSet &paths, std::size_t cluster);

    // Arrival-angle mixture on the grid. The delayed terms are per-cluster histograms
    // of input powers, the local term is the analytic von Mises density and
    // the direct path is reported in discrete_mass. total_power = P_R.
    PasCurve estimate_aoa_pdf(const Scenario &s, const PathSet &paths);

    // Histogram of input powers over all paths normalised to unit area; what
    // the output-power histogram reduces to for an omnidirectional Rx.
    PasCurve input_power_histogram(const Scenario &s, const PathSet &paths);

    class DegenerateResult : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Power-weighted histogram of output powers, C_R = 1/(2 eps), so the curve
    // integrates to 1. total_power = sum p_R,ij. Throws DegenerateResult when
    // no output power reaches the receiver.
    PasCurve estimate_aor_pdf(const Scenario &s, const PathSet &paths);

    PasCurve compute_pas(const Scenario &s, const PasCurve &aor);

    // Power-weighted circular rms spread, minimised over the reference
    // direction (searched over the bin centres).
    double angular_spread(const PasCurve &curve);

    // Half the L1 distance between the two curves after normalising each to unit mass.
    double total_variation(const PasCurve &a, const PasCurve &b);

    // The curve reflected through phi = 0.
    PasCurve mirrored(const PasCurve &c);

    struct Simulation
    {
        PathSet paths;
        PasCurve aoa_pdf;
        PasCurve aor_pdf;
        PasCurve pas;
        double output_power = 0.0; // sum p_R,ij
        double angular_spread = 0.0;
    };

    Simulation simulate(const Scenario &s, unsigned workers = 1);

    struct SweepCell
    {
        WrappedAngle alpha;
        WrappedAngle beta;
        double output_power = 0.0;
        double angular_spread = 0.0;
    };

    // One simulation per (alpha, beta) with the scenario's seed in every cell.
    // Cells are row-major: cells[ia * betas.size() + ib].
    struct SweepResult
    {
        std::vector<WrappedAngle> alphas;
        std::vector<WrappedAngle> betas;
        std::vector<SweepCell> cells;

        const SweepCell &at(std::size_t ia, std::size_t ib) const { return cells[ia * betas.size() + ib]; }
    };

    SweepResult orientation_sweep(const Scenario &s, const std::vector<WrappedAngle> &alphas,
                                  const std::vector<WrappedAngle> &betas, unsigned workers = 1);

    Scenario with_orientation(const Scenario &s, WrappedAngle alpha, WrappedAngle beta);
}

#endif
