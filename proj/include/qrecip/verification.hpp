// Copyright 2026 The qrecip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qrecip {

enum class Suite { fast, full };

struct CheckResult {
    std::string name;
    double residual;
    double tolerance;
    bool passed;
};

struct VerificationSummary {
    Suite suite;
    std::uint64_t seed;
    std::vector<CheckResult> checks;
    bool all_passed;
};

/// Runs the property and oracle cross-checks. The fast suite keeps d <= 3 and
/// 10^4 Monte-Carlo samples; the full suite adds d = 4 EA oracle checks and
/// 10^5 samples. Output depends only on (suite, seed).
VerificationSummary run_verification(Suite suite, std::uint64_t seed);

std::string to_json(const VerificationSummary &summary);

}  // namespace qrecip
