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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qrecip/capacities.hpp"

namespace qrecip {

struct ScanRow {
    double lambda;
    double c_ua;
    double c_ea;
};

/// Closed-form UA/EA capacities of D_lambda on `grid` uniform points over
/// [lambda_min(d), 1].
std::vector<ScanRow> capacity_scan(int d, int grid);

struct AsymmetryRow {
    int d;
    double abs_lambda;
    std::optional<double> a_ua;  // empty for d = 2, where it vanishes identically
    double a_ea;
};

/// Rows for each d on |lambda| = |lambda_min(d)| * k / grid, k = 1..grid.
std::vector<AsymmetryRow> asymmetry_table(std::span<const int> dims, int grid);

struct WccGridRow {
    double q1;
    double q2;
    double q3;
    double max_ratio;  // NaN where the ratio is undefined
};

/// EA asymmetry ratio of the mixer pair over Phi_q at the reciprocal bound of
/// q; NaN for the uniform distribution.
double wcc_ratio_at_bound(const ProbabilityVector &q, int d);

/// d = 2 simplex grid: q1, q2, q3 on multiples of 1/(resolution - 1) with
/// q0 = 1 - q1 - q2 - q3 >= 0, ordered q1 outer, q3 inner.
std::vector<WccGridRow> wcc_asymmetry_grid(int resolution);

/// printf("%.12g"), with "nan"/"inf"/"-inf" for non-finite values.
std::string format_number(double v);

std::string scan_csv(const std::vector<ScanRow> &rows);
std::string asymmetry_csv(const std::vector<AsymmetryRow> &rows, std::optional<CapacityKind> only = std::nullopt);
std::string wcc_grid_csv(const std::vector<WccGridRow> &rows);

std::string scan_json(const std::vector<ScanRow> &rows);
std::string asymmetry_json(const std::vector<AsymmetryRow> &rows);
std::string wcc_grid_json(const std::vector<WccGridRow> &rows);

}  // namespace qrecip
