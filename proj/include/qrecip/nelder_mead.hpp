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

#include <functional>
#include <span>
#include <vector>

namespace qrecip {

struct SimplexOptions {
    double initial_step = 0.5;
    /// Converged when the spread of objective values over the simplex drops
    /// below this, and a fresh simplex around the best point cannot improve
    /// on it by more than this either.
    double ftol = 1e-8;
    int max_iterations = 20000;
    int max_rebuilds = 8;
};

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Derivative-free minimisation with adaptive Nelder-Mead coefficients.
SimplexResult nelder_mead_minimize(const std::function<double(std::span<const double>)> &objective,
                                   std::vector<double> start, const SimplexOptions &options);

}  // namespace qrecip
