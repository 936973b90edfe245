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

#include "qrecip/channels.hpp"

namespace qrecip {

struct OptimizerOptions {
    double tol = 1e-8;  // convergence threshold on objective change
    int restarts = 4;   // random starts
    int max_iterations = 40000;
    /// Add one start at 1/d (or |e_0> for pure-state searches).
    bool include_center_start = true;
};

struct OptimizationResult {
    double optimum_value = 0.0;  // bits
    DensityMatrix optimizer_state = DensityMatrix::maximally_mixed(1);
    int iterations = 0;
    bool converged = false;
    int restarts_used = 0;
};

/// S(rho) + S(Phi(rho)) - S((Id (x) Phi)(|rho><rho|)), purification on an
/// ancilla of dimension rank(rho).
double mutual_information(const DensityMatrix &rho, const ChannelRep &phi);

/// max_rho I(rho, Phi) by multi-start simplex ascent over rho = L L^dagger / tr.
OptimizationResult maximize_mutual_information(const ChannelRep &phi, const OptimizerOptions &options, Rng &rng);

/// min over pure inputs of S(Phi(|psi><psi|)).
OptimizationResult min_output_entropy(const ChannelRep &phi, const OptimizerOptions &options, Rng &rng);

/// <psi| Phi(|psi><psi|) |psi>
double pure_state_fidelity(const ChannelRep &phi, const PureState &psi);

struct FidelityEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    double min_sample = 0.0;
    double max_sample = 0.0;
};

/// Sample mean of the pure-state fidelity over `samples` Haar-random inputs.
FidelityEstimate mc_average_fidelity(const ChannelRep &phi, int samples, Rng &rng);

struct TwirlEstimate {
    ChannelRep channel;  // Monte-Carlo average of U^dagger Phi(U . U^dagger) U
    double lambda_hat;   // DC-family coordinate of the averaged Choi matrix
};

/// (d^2 <Omega|J|Omega> - 1) / (d^2 - 1)
double dc_projection_lambda(const ChannelRep &phi);

TwirlEstimate twirl_channel_mc(const ChannelRep &phi, int samples, Rng &rng);

}  // namespace qrecip
