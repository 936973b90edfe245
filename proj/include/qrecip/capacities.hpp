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

#include <string>

#include "qrecip/channels.hpp"

namespace qrecip {

enum class CapacityKind { UA, EA, Q_EA };
enum class CapacityMethod { closed_form, oracle };

const char *to_string(CapacityKind kind);
const char *to_string(CapacityMethod method);

struct CapacityReport {
    std::string channel_desc;  // serialized channel spec (JSON)
    CapacityKind kind = CapacityKind::EA;
    double value = 0.0;  // bits
    CapacityMethod method = CapacityMethod::closed_form;
};

/// Admissible lambda interval for mixers over a WCC. Bounds are +/- infinity
/// for the uniform distribution, whose mixer is D_0 for every lambda.
struct CPRange {
    double lambda_min;
    double lambda_max;
    double reciprocal_bound;  // min(|lambda_min|, |lambda_max|)
};

/// -1 / (d^2 - 1)
double lambda_min_dc(int d);

double smin_dc(int d, double lambda);
double c_ua_dc(int d, double lambda);
double c_ea_dc(int d, double lambda);
double c_ea_wcc(const WccSpec &spec);
double q_ea(double c_ea);

CPRange cp_range_wcc(const ProbabilityVector &q, int d);

/// (C(D_{-|l|}) - C(D_{|l|})) / C(D_{|l|}) from the closed forms.
double asymmetry_ratio_dc(int d, double abs_lambda, CapacityKind kind);
/// EA asymmetry of the reciprocal pair of mixers over the WCC Phi_q.
double asymmetry_ratio_wcc_ea(const ProbabilityVector &q, int d, double abs_lambda);

/// (1 + (d - 1) lambda) / d
double mover_fidelity(int d, double lambda);

/// Sum of the superoperator eigenvalues, i.e. its trace d * sum_ij <ii|J|jj>.
double superoperator_trace(const ChannelRep &phi);
/// Haar-averaged input-output fidelity, (sum_k |tr M_k|^2 + d) / (d (d + 1)).
double avg_output_fidelity(const ChannelRep &phi);

}  // namespace qrecip
