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


#include "mcm/pdp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mcm
{
    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto ws = " \t\r\n";
            const auto b = s.find_first_not_of(ws);
            if (b == std::string_view::npos)
                return {};
            const auto e = s.find_last_not_of(ws);
            return s.substr(b, e - b + 1);
        }

        std::vector<std::string_view> split(std::string_view s, char sep)
        {
            std::vector<std::string_view> out;
            std::size_t start = 0;
            for (;;)
            {
                const auto pos = s.find(sep, start);
                out.push_back(trim(s.substr(start, pos - start)));
                if (pos == std::string_view::npos)
                    break;
                start = pos + 1;
            }
            return out;
        }

        template <typename T>
        bool parse_number(std::string_view s, T &out)
        {
            if (s.empty())
                return false;
            if (s.front() == '+')
                s.remove_prefix(1);
            const auto *end = s.data() + s.size();
            const auto res = std::from_chars(s.data(), end, out);
            return res.ec == std::errc() && res.ptr == end;
        }
    }

    PdpMode parse_pdp_mode(std::string_view s)
    {
        if (s == "normalized")
            return PdpMode::normalized;
        if (s == "absolute")
            return PdpMode::absolute;
        throw std::invalid_argument("pdp_mode must be \"normalized\" or \"absolute\", got \"" + std::string(s) + "\"");
    }

    std::string_view to_string(PdpMode m)
    {
        return m == PdpMode::normalized ? "normalized" : "absolute";
    }

    PdpParseError::PdpParseError(std::size_t line, const std::string &what)
        : std::runtime_error("PDP line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

    RawPdp parse_pdp_csv(std::string_view text, PdpMode mode)
    {
        RawPdp raw;
        raw.mode = mode;

        bool have_header = false;
        std::optional<int> last_tap;
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size())
        {
            const auto nl = text.find('\n', pos);
            const auto line = trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
            pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
            ++line_no;

            if (line.empty() || line.front() == '#')
                continue;

            const auto fields = split(line, ',');
            if (!have_header)
            {
                if (fields.size() != 3 || fields[0] != "tap" || fields[1] != "delay" || fields[2] != "power_db")
                    throw PdpParseError(line_no, "expected header `tap,delay,power_db`");
                have_header = true;
                continue;
            }

            if (fields.size() != 3)
                throw PdpParseError(line_no, "expected 3 fields, got " + std::to_string(fields.size()));

            RawTap t;
            double power_db = 0.0;
            if (!parse_number(fields[0], t.tap))
                throw PdpParseError(line_no, "malformed tap index `" + std::string(fields[0]) + "`");
            if (!parse_number(fields[1], t.delay) || !std::isfinite(t.delay))
                throw PdpParseError(line_no, "malformed delay `" + std::string(fields[1]) + "`");
            if (!parse_number(fields[2], power_db) || !std::isfinite(power_db))
                throw PdpParseError(line_no, "malformed power `" + std::string(fields[2]) + "`");
            if (t.delay < 0.0)
                throw PdpParseError(line_no, "negative delay");
            if (last_tap && t.tap <= *last_tap)
                throw PdpParseError(line_no, "tap indices must increase strictly");
            last_tap = t.tap;
            t.power = db_to_linear(power_db);

            auto dup = std::find_if(raw.taps.begin(), raw.taps.end(),
                                    [&](const RawTap &r) { return r.delay == t.delay; });
            if (dup != raw.taps.end())
            {
                dup->power += t.power;
                continue;
            }
            raw.taps.push_back(t);
        }

        if (!have_header)
            throw PdpParseError(line_no, "missing header `tap,delay,power_db`");
        if (raw.taps.empty())
            throw PdpParseError(line_no, "no taps");
        return raw;
    }

    std::string write_pdp_csv(const RawPdp &raw)
    {
        std::string out = "# mode: " + std::string(to_string(raw.mode)) + "\ntap,delay,power_db\n";
        char buf[96];
        for (const auto &t : raw.taps)
        {
            std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", t.tap, t.delay, linear_to_db(t.power));
            out += buf;
        }
        return out;
    }

    double rms_delay_spread(const RawPdp &raw)
    {
        double p = 0.0, m1 = 0.0, m2 = 0.0;
        for (const auto &t : raw.taps)
        {
            p += t.power;
            m1 += t.power * t.delay;
            m2 += t.power * t.delay * t.delay;
        }
        if (!(p > 0.0))
            throw std::invalid_argument("rms_delay_spread: total power must be positive");
        m1 /= p;
        return std::sqrt(std::max(0.0, m2 / p - m1 * m1));
    }

    Pdp::Pdp(std::vector<PdpCluster> clusters) : clusters_(std::move(clusters)), total_power_(0.0)
    {
        if (clusters_.size() < 2)
            throw std::invalid_argument("Pdp: need a zero-delay cluster and at least one delayed cluster");
        if (clusters_.front().delay != 0.0)
            throw std::invalid_argument("Pdp: the earliest cluster must have zero delay (local scattering cluster)");
        for (std::size_t i = 0; i < clusters_.size(); ++i)
        {
            auto &c = clusters_[i];
            c.index = static_cast<int>(i);
            if (!(c.power > 0.0) || !std::isfinite(c.power))
                throw std::invalid_argument("Pdp: cluster powers must be positive");
            if (i > 0 && !(c.delay > clusters_[i - 1].delay))
                throw std::invalid_argument("Pdp: cluster delays must increase strictly");
            total_power_ += c.power;
        }
    }

    Pdp scale_delays(const RawPdp &raw, std::optional<double> ds_s)
    {
        double scale = 1.0;
        if (raw.mode == PdpMode::normalized)
        {
            if (!ds_s || !(*ds_s > 0.0) || !std::isfinite(*ds_s))
                throw std::invalid_argument("scale_delays: normalized PDP needs a positive delay spread");
            scale = *ds_s;
        }

        std::vector<PdpCluster> cl;
        cl.reserve(raw.taps.size());
        for (const auto &t : raw.taps)
            cl.push_back({0, t.delay * scale, t.power});
        std::stable_sort(cl.begin(), cl.end(), [](const auto &a, const auto &b) { return a.delay < b.delay; });

        std::vector<PdpCluster> merged;
        for (const auto &c : cl)
        {
            if (!merged.empty() && merged.back().delay == c.delay)
                merged.back().power += c.power;
            else
                merged.push_back(c);
        }
        if (!merged.empty() && merged.front().delay != 0.0)
            throw std::invalid_argument("scale_delays: PDP has no zero-delay tap; the model requires a local scattering cluster at delay 0");
        return Pdp(std::move(merged));
    }

    Pdp normalize_power(const Pdp &pdp)
    {
        auto cl = pdp.clusters();
        const double total = pdp.total_power();
        for (auto &c : cl)
            c.power /= total;
        return Pdp(std::move(cl));
    }

    std::string read_text_file(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::runtime_error("cannot open file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    Pdp load_pdp(const std::string &path, PdpMode mode, std::optional<double> ds_s, bool normalize)
    {
        const auto raw = parse_pdp_csv(read_text_file(path), mode);
        auto pdp = scale_delays(raw, ds_s);
        return normalize ? normalize_power(pdp) : pdp;
    }
}
