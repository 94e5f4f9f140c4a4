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

#include "mcm/pdp.hpp"
#include "mcm/validate.hpp"

#include <cmath>
#include <random>

using namespace mcm;

namespace
{
    const std::string tdl_b_path = std::string(MCM_SOURCE_DIR) + "/data/tdl_b.csv";
}

TEST_CASE("parse_pdp_csv basics")
{
    const auto raw = parse_pdp_csv("# comment\n\ntap,delay,power_db\n1,0.0000,0\n2,0.5,-3\n", PdpMode::normalized);
    REQUIRE(raw.taps.size() == 2);
    CHECK(raw.taps[0].tap == 1);
    CHECK(raw.taps[0].delay == 0.0);
    CHECK(raw.taps[0].power == 1.0);
    CHECK(raw.taps[1].power == doctest::Approx(0.501187).epsilon(1e-6));
    CHECK(std::abs(raw.taps[1].power - 0.501187) < 1e-6);
    CHECK(raw.mode == PdpMode::normalized);
}

TEST_CASE("parse_pdp_csv accepts CRLF and surrounding whitespace")
{
    const auto raw = parse_pdp_csv("tap,delay,power_db\r\n 1 , 0 , 0 \r\n2,1e-7,-10\r\n", PdpMode::absolute);
    REQUIRE(raw.taps.size() == 2);
    CHECK(raw.taps[1].delay == 1e-7);
    CHECK(raw.taps[1].power == doctest::Approx(0.1));
}

TEST_CASE("equal delays merge by linear power")
{
    const double half_db = linear_to_db(0.5);
    const std::string text = "tap,delay,power_db\n1,0,0\n2,0.3," + std::to_string(half_db) + "\n3,0.3," +
                             std::to_string(half_db) + "\n4,0.9,-1\n";
    const auto raw = parse_pdp_csv(text, PdpMode::normalized);
    REQUIRE(raw.taps.size() == 3);
    CHECK(raw.taps[1].power == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(raw.taps[2].tap == 4);
}

TEST_CASE("parse errors name the offending line")
{
    auto line_of = [](const std::string &text)
    {
        try
        {
            parse_pdp_csv(text, PdpMode::normalized);
        }
        catch (const PdpParseError &e)
        {
            return e.line();
        }
        return std::size_t(0);
    };
    CHECK(line_of("tap,delay,power\n1,0,0\n") == 1);
    CHECK(line_of("tap,delay,power_db\n1,0,0\n2,abc,-1\n") == 3);
    CHECK(line_of("tap,delay,power_db\n1,0,0\n2,-0.1,-1\n") == 3);
    CHECK(line_of("# c\ntap,delay,power_db\n2,0,0\n1,0.1,-1\n") == 4);
    CHECK(line_of("tap,delay,power_db\n1,0,0,5\n") == 2);
    CHECK(line_of("tap,delay,power_db\n1,0,\n") == 2);
    CHECK(line_of("tap,delay,power_db\n1,0,0dB\n") == 2);
    CHECK(line_of("# only a comment\n") == 2);
    CHECK(line_of("tap,delay,power_db\n") != 0);
}

TEST_CASE("scale_delays")
{
    const auto raw = parse_pdp_csv("tap,delay,power_db\n1,0,0\n2,1.0,-1\n3,2.5,-2\n", PdpMode::normalized);

    const auto pdp = scale_delays(raw, 363e-9);
    REQUIRE(pdp.size() == 3);
    CHECK(pdp[0].delay == 0.0);
    CHECK(pdp[1].delay == doctest::Approx(363e-9).epsilon(1e-15));

    const auto pdp100 = scale_delays(raw, 100e-9);
    CHECK(pdp100[2].delay == doctest::Approx(250e-9).epsilon(1e-15));

    CHECK_THROWS_AS(scale_delays(raw, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(scale_delays(raw, -1e-9), std::invalid_argument);
    CHECK_THROWS_AS(scale_delays(raw, std::nullopt), std::invalid_argument);

    const auto abs_raw = parse_pdp_csv("tap,delay,power_db\n1,0,0\n2,4e-7,-1\n", PdpMode::absolute);
    CHECK(scale_delays(abs_raw, std::nullopt)[1].delay == 4e-7);
}

TEST_CASE("scale_delays sorts out-of-order taps and indexes clusters")
{
    const auto raw = parse_pdp_csv("tap,delay,power_db\n1,0,0\n2,0.3,-1\n3,0.2,-2\n", PdpMode::normalized);
    CHECK(raw.taps[1].delay == 0.3); // file order kept in the raw table
    const auto pdp = scale_delays(raw, 1e-6);
    CHECK(pdp[1].delay == doctest::Approx(0.2e-6));
    CHECK(pdp[2].delay == doctest::Approx(0.3e-6));
    CHECK(pdp[2].index == 2);
}

TEST_CASE("ingestion requires a zero-delay cluster and a delayed one")
{
    const auto late = parse_pdp_csv("tap,delay,power_db\n1,0.1,0\n2,0.3,-1\n", PdpMode::normalized);
    CHECK_THROWS_WITH_AS(scale_delays(late, 1e-7), doctest::Contains("zero-delay"), std::invalid_argument);

    const auto single = parse_pdp_csv("tap,delay,power_db\n1,0,0\n", PdpMode::normalized);
    CHECK_THROWS_AS(scale_delays(single, 1e-7), std::invalid_argument);
}

TEST_CASE("normalize_power")
{
    const Pdp a({{0, 0.0, 0.5}, {1, 1e-7, 0.5}});
    CHECK(normalize_power(a)[0].power == 0.5);

    const Pdp b({{0, 0.0, 2.0}, {1, 1e-7, 2.0}});
    const auto nb = normalize_power(b);
    CHECK(nb[0].power == 0.5);
    CHECK(nb[1].power == 0.5);
    CHECK(nb.total_power() == 1.0);

    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(1e-4, 50.0);
    for (int rep = 0; rep < 200; ++rep)
    {
        std::vector<PdpCluster> cl;
        const int n = 2 + rep % 30;
        for (int i = 0; i < n; ++i)
            cl.push_back({i, i * 1e-8, u(gen)});
        const auto np = normalize_power(Pdp(cl));
        double s = 0.0;
        for (const auto &c : np.clusters())
            s += c.power;
        REQUIRE(std::abs(s - 1.0) < 1e-12);
        REQUIRE(std::abs(np.total_power() - 1.0) < 1e-12);
    }
}

TEST_CASE("csv round trip property")
{
    std::mt19937_64 gen(77);
    std::uniform_real_distribution<double> delay(0.0, 5.0), db(-30.0, 3.0);
    for (int rep = 0; rep < 100; ++rep)
    {
        RawPdp raw;
        raw.mode = PdpMode::normalized;
        raw.taps.push_back({1, 0.0, db_to_linear(db(gen))});
        for (int k = 2; k < 2 + rep % 20; ++k)
            raw.taps.push_back({k, delay(gen), db_to_linear(db(gen))});

        const auto back = parse_pdp_csv(write_pdp_csv(raw), PdpMode::normalized);
        REQUIRE(back.taps.size() == raw.taps.size());
        for (std::size_t i = 0; i < raw.taps.size(); ++i)
        {
            REQUIRE(back.taps[i].tap == raw.taps[i].tap);
            REQUIRE(std::abs(back.taps[i].delay - raw.taps[i].delay) < 1e-12);
            REQUIRE(std::abs(back.taps[i].power - raw.taps[i].power) < 1e-12);
        }

        const double x = db(gen);
        REQUIRE(std::abs(linear_to_db(db_to_linear(x)) - x) < 1e-10);
    }
}

TEST_CASE("shipped TDL-B table passes its self-check")
{
    const auto r = tdl_self_check(tdl_b_path);
    CHECK(r.taps == 23);
    CHECK(r.first_delay == 0.0);
    CHECK(std::abs(r.rms_delay_spread - 1.0) < 1e-3);

    const auto pdp = load_pdp(tdl_b_path, PdpMode::normalized, 363e-9, true);
    CHECK(pdp.size() == 23);
    CHECK(std::abs(pdp.total_power() - 1.0) < 1e-12);
    CHECK(pdp[0].delay == 0.0);
    CHECK(pdp[22].delay == doctest::Approx(4.7834 * 363e-9));
}
