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


#ifndef MCM_VALIDATE_HPP
#define MCM_VALIDATE_HPP

#include <string>
#include <vector>

namespace mcm
{
    struct CheckResult
    {
        std::string name;
        bool passed = false;
        std::string detail;
    };

    // Built-in invariant suite: ellipse-map fixed points and contraction,
    // pattern and density normalisation, TDL-B data self-check, histogram
    // identities, determinism.
    std::vector<CheckResult> run_validation(const std::string &tdl_b_path);

    // Normalised rms delay spread and first-tap delay of a TDL table file.
    struct TdlSelfCheck
    {
        double first_delay = 0.0;
        double rms_delay_spread = 0.0;
        std::size_t taps = 0;
    };

    TdlSelfCheck tdl_self_check(const std::string &path);
}

#endif
