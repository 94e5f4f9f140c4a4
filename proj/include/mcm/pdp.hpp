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


#ifndef MCM_PDP_HPP
#define MCM_PDP_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcm
{
    // Delay column semantics of a PDP file: multiples of the rms delay
    // spread (3GPP TDL tables) or seconds.
    enum class PdpMode
    {
        normalized,
        absolute
    };

    PdpMode parse_pdp_mode(std::string_view s);
    std::string_view to_string(PdpMode m);

    class PdpParseError : public std::runtime_error
    {
    public:
        PdpParseError(std::size_t line, const std::string &what);
        std::size_t line() const { return line_; }

    private:
        std::size_t line_;
    };

    struct RawTap
    {
        int tap = 0;
        double delay = 0.0; // DS multiples or seconds, see PdpMode
        double power = 0.0; // linear
    };

    // Rows in file order; a row whose delay repeats an earlier row is folded
    // into that row by linear power addition.
    struct RawPdp
    {
        PdpMode mode = PdpMode::normalized;
        std::vector<RawTap> taps;
    };

    double db_to_linear(double db);
    double linear_to_db(double lin);

    // CSV with header `tap,delay,power_db`. Lines starting with '#' and blank
    // lines are skipped. Throws PdpParseError naming the 1-based line.
    RawPdp parse_pdp_csv(std::string_view text, PdpMode mode);

    // Inverse of parse_pdp_csv (power in dB, 17 significant digits).
    std::string write_pdp_csv(const RawPdp &raw);

    // Power-weighted rms spread of the delay column, in the column's unit.
    double rms_delay_spread(const RawPdp &raw);

    struct PdpCluster
    {
        int index = 0;      // 0 .. N
        double delay = 0.0; // seconds
        double power = 0.0; // linear
    };

    // Cluster 0 at zero delay followed by strictly increasing delays.
    class Pdp
    {
    public:
        explicit Pdp(std::vector<PdpCluster> clusters);

        const std::vector<PdpCluster> &clusters() const { return clusters_; }
        std::size_t size() const { return clusters_.size(); }
        const PdpCluster &operator[](std::size_t i) const { return clusters_[i]; }
        double total_power() const { return total_power_; }

    private:
        std::vector<PdpCluster> clusters_;
        double total_power_;
    };

    // Converts a raw table to clusters in seconds. Normalized mode multiplies
    // delays by ds_s (required, > 0); absolute mode passes them through.
    // Rows are sorted by delay and equal delays merged.
    Pdp scale_delays(const RawPdp &raw, std::optional<double> ds_s);

    Pdp normalize_power(const Pdp &pdp);

    // Reads a PDP file and runs parse -> scale -> (normalize).
    Pdp load_pdp(const std::string &path, PdpMode mode, std::optional<double> ds_s, bool normalize);

    std::string read_text_file(const std::string &path);
}

#endif
