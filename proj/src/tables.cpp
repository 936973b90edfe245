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

#include "qrecip/tables.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace qrecip {

std::vector<ScanRow> capacity_scan(int d, int grid) {
    if (grid < 2) {
        throw Error(Errc::out_of_range, "scan needs at least 2 grid points");
    }
    const double lo = lambda_min_dc(d);
    std::vector<ScanRow> rows;
    rows.reserve(static_cast<std::size_t>(grid));
    for (int k = 0; k < grid; ++k) {
        double lambda = k == grid - 1 ? 1.0 : lo + (1.0 - lo) * k / (grid - 1);
        if (std::abs(lambda) < 1e-15) {
            lambda = 0.0;
        }
        rows.push_back({lambda, c_ua_dc(d, lambda), c_ea_dc(d, lambda)});
    }
    return rows;
}

std::vector<AsymmetryRow> asymmetry_table(std::span<const int> dims, int grid) {
    if (grid < 1) {
        throw Error(Errc::out_of_range, "asymmetry table needs at least 1 grid point");
    }
    std::vector<AsymmetryRow> rows;
    for (int d : dims) {
        if (d < 2 || d > 10) {
            throw Error(Errc::out_of_range, "asymmetry table supports 2 <= d <= 10");
        }
        const double edge = -lambda_min_dc(d);
        for (int k = 1; k <= grid; ++k) {
            double abs_lambda = k == grid ? edge : edge * k / grid;
            AsymmetryRow row{d, abs_lambda, std::nullopt, asymmetry_ratio_dc(d, abs_lambda, CapacityKind::EA)};
            if (d > 2) {
                row.a_ua = asymmetry_ratio_dc(d, abs_lambda, CapacityKind::UA);
            }
            rows.push_back(row);
        }
    }
    return rows;
}

double wcc_ratio_at_bound(const ProbabilityVector &q, int d) {
    CPRange range = cp_range_wcc(q, d);
    if (!std::isfinite(range.reciprocal_bound)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    try {
        return asymmetry_ratio_wcc_ea(q, d, range.reciprocal_bound);
    } catch (const Error &e) {
        if (e.code() == Errc::undefined_ratio) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        throw;
    }
}

std::vector<WccGridRow> wcc_asymmetry_grid(int resolution) {
    if (resolution < 5) {
        throw Error(Errc::out_of_range, "WCC grid resolution must be >= 5");
    }
    const int n = resolution - 1;
    std::vector<WccGridRow> rows;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
            for (int k = 0; i + j + k <= n; ++k) {
                const double q1 = static_cast<double>(i) / n;
                const double q2 = static_cast<double>(j) / n;
                const double q3 = static_cast<double>(k) / n;
                const double q0 = static_cast<double>(n - i - j - k) / n;
                ProbabilityVector q({q0, q1, q2, q3});
                rows.push_back({q1, q2, q3, wcc_ratio_at_bound(q, 2)});
            }
        }
    }
    return rows;
}

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string scan_csv(const std::vector<ScanRow> &rows) {
    std::ostringstream out;
    out << "lambda,c_ua,c_ea\n";
    for (const auto &r : rows) {
        out << format_number(r.lambda) << ',' << format_number(r.c_ua) << ',' << format_number(r.c_ea) << '\n';
    }
    return out.str();
}

std::string asymmetry_csv(const std::vector<AsymmetryRow> &rows, std::optional<CapacityKind> only) {
    std::ostringstream out;
    if (!only) {
        out << "d,abs_lambda,a_ua,a_ea\n";
    } else if (*only == CapacityKind::UA) {
        out << "d,abs_lambda,a_ua\n";
    } else {
        out << "d,abs_lambda,a_ea\n";
    }
    for (const auto &r : rows) {
        if (only && *only == CapacityKind::UA && !r.a_ua) {
            continue;
        }
        out << r.d << ',' << format_number(r.abs_lambda);
        if (!only || *only == CapacityKind::UA) {
            out << ',' << (r.a_ua ? format_number(*r.a_ua) : "");
        }
        if (!only || *only != CapacityKind::UA) {
            out << ',' << format_number(r.a_ea);
        }
        out << '\n';
    }
    return out.str();
}

std::string wcc_grid_csv(const std::vector<WccGridRow> &rows) {
    std::ostringstream out;
    out << "q1,q2,q3,max_ratio\n";
    for (const auto &r : rows) {
        out << format_number(r.q1) << ',' << format_number(r.q2) << ',' << format_number(r.q3) << ','
            << format_number(r.max_ratio) << '\n';
    }
    return out.str();
}

namespace {

nlohmann::json number_or_null(double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

std::string scan_json(const std::vector<ScanRow> &rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : rows) {
        arr.push_back({{"lambda", r.lambda}, {"c_ua", r.c_ua}, {"c_ea", r.c_ea}});
    }
    return arr.dump();
}

std::string asymmetry_json(const std::vector<AsymmetryRow> &rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : rows) {
        nlohmann::json row = {{"d", r.d}, {"abs_lambda", r.abs_lambda}, {"a_ea", r.a_ea}};
        row["a_ua"] = r.a_ua ? nlohmann::json(*r.a_ua) : nlohmann::json(nullptr);
        arr.push_back(row);
    }
    return arr.dump();
}

std::string wcc_grid_json(const std::vector<WccGridRow> &rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : rows) {
        arr.push_back({{"q1", r.q1}, {"q2", r.q2}, {"q3", r.q3}, {"max_ratio", number_or_null(r.max_ratio)}});
    }
    return arr.dump();
}

}  // namespace qrecip
