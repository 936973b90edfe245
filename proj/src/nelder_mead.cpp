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

#include "qrecip/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qrecip {

namespace {

struct Vertex {
    std::vector<double> x;
    double f;
};

/// One Nelder-Mead run from a fresh simplex of the given scale.
SimplexResult run_simplex(const std::function<double(std::span<const double>)> &objective,
                          const std::vector<double> &start, double step, double ftol, int max_iterations) {
    const std::size_t n = start.size();
    const double dn = static_cast<double>(n);
    // Gao-Han adaptive coefficients; they keep the method useful for n ~ 30.
    const double alpha = 1.0;
    const double beta = 1.0 + 2.0 / dn;
    const double gamma = 0.75 - 1.0 / (2.0 * dn);
    const double delta = 1.0 - 1.0 / dn;

    std::vector<Vertex> simplex;
    simplex.reserve(n + 1);
    simplex.push_back({start, objective(start)});
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> x = start;
        x[i] += step;
        double f = objective(x);
        simplex.push_back({std::move(x), f});
    }

    auto point = [&](const std::vector<double> &centroid, const std::vector<double> &worst, double coeff) {
        std::vector<double> y(n);
        for (std::size_t k = 0; k < n; ++k) {
            y[k] = centroid[k] + coeff * (worst[k] - centroid[k]);
        }
        return y;
    };

    SimplexResult result;
    std::vector<double> centroid(n);
    int it = 0;
    for (; it < max_iterations; ++it) {
        std::sort(simplex.begin(), simplex.end(), [](const Vertex &a, const Vertex &b) { return a.f < b.f; });
        if (simplex.back().f - simplex.front().f <= ftol) {
            result.converged = true;
            break;
        }
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t k = 0; k < n; ++k) {
                centroid[k] += simplex[v].x[k] / dn;
            }
        }
        Vertex &worst = simplex.back();
        const double f_best = simplex.front().f;
        const double f_second_worst = simplex[n - 1].f;

        std::vector<double> xr = point(centroid, worst.x, -alpha);
        double fr = objective(xr);
        if (fr < f_best) {
            std::vector<double> xe = point(centroid, worst.x, -alpha * beta);
            double fe = objective(xe);
            if (fe < fr) {
                worst = {std::move(xe), fe};
            } else {
                worst = {std::move(xr), fr};
            }
            continue;
        }
        if (fr < f_second_worst) {
            worst = {std::move(xr), fr};
            continue;
        }
        bool outside = fr < worst.f;
        std::vector<double> xc = outside ? point(centroid, worst.x, -alpha * gamma) : point(centroid, worst.x, gamma);
        double fc = objective(xc);
        if (fc < std::min(fr, worst.f)) {
            worst = {std::move(xc), fc};
            continue;
        }
        // Shrink toward the best vertex.
        const std::vector<double> best = simplex.front().x;
        for (std::size_t v = 1; v <= n; ++v) {
            for (std::size_t k = 0; k < n; ++k) {
                simplex[v].x[k] = best[k] + delta * (simplex[v].x[k] - best[k]);
            }
            simplex[v].f = objective(simplex[v].x);
        }
    }
    auto best = std::min_element(simplex.begin(), simplex.end(), [](const Vertex &a, const Vertex &b) {
        return a.f < b.f;
    });
    result.x = best->x;
    result.value = best->f;
    result.iterations = it;
    return result;
}

}  // namespace

SimplexResult nelder_mead_minimize(const std::function<double(std::span<const double>)> &objective,
                                   std::vector<double> start, const SimplexOptions &options) {
    SimplexResult best = run_simplex(objective, start, options.initial_step, options.ftol, options.max_iterations);
    int total_iterations = best.iterations;
    double step = options.initial_step;
    for (int rebuild = 0; rebuild < options.max_rebuilds && total_iterations < options.max_iterations; ++rebuild) {
        // Collapsed simplices can stall away from the optimum; restart around
        // the incumbent until a fresh simplex stops finding improvements.
        step = std::max(step * 0.25, 1e-4);
        SimplexResult next =
            run_simplex(objective, best.x, step, options.ftol, options.max_iterations - total_iterations);
        total_iterations += next.iterations;
        double gain = best.value - next.value;
        if (next.value < best.value) {
            best.x = std::move(next.x);
            best.value = next.value;
        }
        best.converged = gain <= options.ftol && next.converged;
        if (best.converged) {
            break;
        }
    }
    best.iterations = total_iterations;
    return best;
}

}  // namespace qrecip
