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

#include "qrecip/capacities.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace qrecip {

namespace {

constexpr double kLambdaSlack = 1e-12;

void require_dim(int d) {
    if (d < 2) {
        throw Error(Errc::dimension_mismatch, "capacity formulas need d >= 2");
    }
}

void require_dc_range(int d, double lambda) {
    require_dim(d);
    if (!(lambda >= lambda_min_dc(d) - kLambdaSlack && lambda <= 1.0 + kLambdaSlack)) {
        std::ostringstream msg;
        msg << "lambda=" << lambda << " outside the CP range [" << lambda_min_dc(d) << ", 1] for d=" << d;
        throw Error(Errc::cp_violation, msg.str());
    }
}

/// H({(1 + (n-1) l)/n, ((1 - l)/n) x (n-1)}) for an n-outcome alphabet.
double dc_output_entropy(int n, double lambda) {
    const double dn = n;
    std::vector<double> p(static_cast<std::size_t>(n), (1.0 - lambda) / dn);
    p[0] = (1.0 + (dn - 1.0) * lambda) / dn;
    return shannon_entropy(ProbabilityVector(std::move(p)));
}

double c_ea_mixer_wcc(const ProbabilityVector &q, int d, double lambda) {
    return 2.0 * std::log2(static_cast<double>(d)) - shannon_entropy(mixer_wcc_distribution(q, d, lambda));
}

}  // namespace

const char *to_string(CapacityKind kind) {
    switch (kind) {
        case CapacityKind::UA:
            return "UA";
        case CapacityKind::EA:
            return "EA";
        case CapacityKind::Q_EA:
            return "Q_EA";
    }
    return "?";
}

const char *to_string(CapacityMethod method) {
    return method == CapacityMethod::closed_form ? "closed_form" : "oracle";
}

double lambda_min_dc(int d) {
    require_dim(d);
    return -1.0 / (static_cast<double>(d) * d - 1.0);
}

double smin_dc(int d, double lambda) {
    require_dc_range(d, lambda);
    return dc_output_entropy(d, lambda);
}

double c_ua_dc(int d, double lambda) {
    return std::log2(static_cast<double>(d)) - smin_dc(d, lambda);
}

double c_ea_dc(int d, double lambda) {
    // C_UA of the d^2-dimensional DC with the same parameter. The range is
    // that of the d-dimensional channel; the d^2-outcome distribution stays
    // a probability vector on all of it.
    require_dc_range(d, lambda);
    return 2.0 * std::log2(static_cast<double>(d)) - dc_output_entropy(d * d, lambda);
}

double c_ea_wcc(const WccSpec &spec) {
    return 2.0 * std::log2(static_cast<double>(spec.d())) - shannon_entropy(spec.p());
}

double q_ea(double c_ea) {
    if (c_ea < 0.0) {
        throw Error(Errc::out_of_range, "entanglement-assisted capacity must be nonnegative");
    }
    return c_ea / 2.0;
}

CPRange cp_range_wcc(const ProbabilityVector &q, int d) {
    require_dim(d);
    if (q.size() != static_cast<std::size_t>(d) * d) {
        throw Error(Errc::invalid_distribution, "CP range: q must have d^2 entries");
    }
    const double d2 = static_cast<double>(d) * d;
    const double inf = std::numeric_limits<double>::infinity();
    double lo = -inf;
    double hi = inf;
    for (double qz : q.weights()) {
        double shifted = d2 * qz;
        if (shifted > 1.0) {
            lo = std::max(lo, 1.0 / (1.0 - shifted));
        } else if (shifted < 1.0) {
            hi = std::min(hi, 1.0 / (1.0 - shifted));
        }
    }
    return CPRange{lo, hi, std::min(std::abs(lo), std::abs(hi))};
}

double asymmetry_ratio_dc(int d, double abs_lambda, CapacityKind kind) {
    require_dim(d);
    if (abs_lambda == 0.0) {
        throw Error(Errc::undefined_ratio, "asymmetry ratio is 0/0 at |lambda| = 0");
    }
    if (!(abs_lambda > 0.0 && abs_lambda <= -lambda_min_dc(d) + kLambdaSlack)) {
        std::ostringstream msg;
        msg << "|lambda|=" << abs_lambda << " outside the reciprocal range (0, " << -lambda_min_dc(d) << "]";
        throw Error(Errc::out_of_range, msg.str());
    }
    double minus = 0.0;
    double plus = 0.0;
    switch (kind) {
        case CapacityKind::UA:
            minus = c_ua_dc(d, -abs_lambda);
            plus = c_ua_dc(d, abs_lambda);
            break;
        case CapacityKind::EA:
            minus = c_ea_dc(d, -abs_lambda);
            plus = c_ea_dc(d, abs_lambda);
            break;
        case CapacityKind::Q_EA:
            minus = q_ea(c_ea_dc(d, -abs_lambda));
            plus = q_ea(c_ea_dc(d, abs_lambda));
            break;
    }
    if (plus <= 1e-300) {
        throw Error(Errc::undefined_ratio, "asymmetry ratio denominator vanishes");
    }
    return (minus - plus) / plus;
}

double asymmetry_ratio_wcc_ea(const ProbabilityVector &q, int d, double abs_lambda) {
    CPRange range = cp_range_wcc(q, d);
    if (abs_lambda == 0.0) {
        throw Error(Errc::undefined_ratio, "asymmetry ratio is 0/0 at |lambda| = 0");
    }
    if (!(abs_lambda > 0.0 && abs_lambda <= range.reciprocal_bound * (1.0 + kLambdaSlack))) {
        std::ostringstream msg;
        msg << "|lambda|=" << abs_lambda << " exceeds the reciprocal bound " << range.reciprocal_bound;
        throw Error(Errc::out_of_range, msg.str());
    }
    double plus = c_ea_mixer_wcc(q, d, abs_lambda);
    if (plus <= 1e-12) {
        throw Error(Errc::undefined_ratio, "asymmetry ratio denominator vanishes (uniform q)");
    }
    double minus = c_ea_mixer_wcc(q, d, -abs_lambda);
    return (minus - plus) / plus;
}

double mover_fidelity(int d, double lambda) {
    require_dc_range(d, lambda);
    return (1.0 + (d - 1.0) * lambda) / d;
}

double superoperator_trace(const ChannelRep &phi) {
    if (phi.d_in() != phi.d_out()) {
        throw Error(Errc::dimension_mismatch, "superoperator trace needs d_in == d_out");
    }
    const int d = phi.d_in();
    Complex acc(0.0);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            acc += phi.choi()(i * d + i, j * d + j);
        }
    }
    return static_cast<double>(d) * acc.real();
}

double avg_output_fidelity(const ChannelRep &phi) {
    if (!phi.is_channel()) {
        throw Error(Errc::not_a_channel, "average fidelity needs a CP trace-preserving map");
    }
    if (phi.d_in() != phi.d_out()) {
        throw Error(Errc::dimension_mismatch, "average fidelity needs d_in == d_out");
    }
    const double d = phi.d_in();
    double sum = 0.0;
    for (const auto &m : kraus_from_choi(phi)) {
        sum += std::norm(m.trace());
    }
    return (sum + d) / (d * (d + 1.0));
}

}  // namespace qrecip
