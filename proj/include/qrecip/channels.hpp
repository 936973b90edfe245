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

#include <vector>

#include "qrecip/operator_core.hpp"

namespace qrecip {

namespace tol {
inline constexpr double cp = 1e-9;
inline constexpr double tp = 1e-9;
}  // namespace tol

/// A linear map on operators, stored as its normalized Choi matrix
/// (Id (x) Phi)|Omega><Omega| with the reference (input copy) index outer.
/// Maps that are not completely positive are representable; `is_cp()`
/// records the outcome of the Choi-spectrum check done at construction.
class ChannelRep {
   public:
    ChannelRep(ComplexMatrix choi, int d_in, int d_out);

    const ComplexMatrix &choi() const noexcept {
        return choi_;
    }
    int d_in() const noexcept {
        return d_in_;
    }
    int d_out() const noexcept {
        return d_out_;
    }
    bool is_cp() const noexcept {
        return is_cp_;
    }
    bool is_tp() const noexcept {
        return is_tp_;
    }
    bool is_channel() const noexcept {
        return is_cp_ && is_tp_;
    }
    double min_choi_eigenvalue() const noexcept {
        return min_choi_eigenvalue_;
    }

   private:
    ComplexMatrix choi_;
    int d_in_;
    int d_out_;
    double min_choi_eigenvalue_;
    bool is_cp_;
    bool is_tp_;
};

/// Phase-space point z = (x, y) in Z_d + Z_d.
struct WeylLabel {
    int x = 0;
    int y = 0;

    /// Row-major position, x outer.
    int index(int d) const {
        return x * d + y;
    }
    static WeylLabel from_index(int index, int d) {
        return WeylLabel{index / d, index % d};
    }
};

/// Weyl-covariant channel in canonical form: weights p_z over the d^2 Weyl
/// labels, stored in row-major z order.
class WccSpec {
   public:
    WccSpec(int d, ProbabilityVector p);

    int d() const noexcept {
        return d_;
    }
    const ProbabilityVector &p() const noexcept {
        return p_;
    }
    double weight(WeylLabel z) const {
        return p_[static_cast<std::size_t>(z.index(d_))];
    }

   private:
    int d_;
    ProbabilityVector p_;
};

enum class CpPolicy { enforce, allow_non_cp };

/// U^x V^y with U|e_j> = |e_{j+1 mod d}> and V|e_j> = exp(2 pi i j / d)|e_j>.
ComplexMatrix weyl_operator(int d, WeylLabel z);

/// |Omega> = sum_i |i>|i> / sqrt(d).
ComplexVector maximally_entangled(int d);

ChannelRep identity_channel(int d);
ChannelRep completely_depolarizing(int d);
ChannelRep depolarizing_channel(int d, double lambda, CpPolicy policy = CpPolicy::enforce);
ChannelRep wcc_channel(const WccSpec &spec);
ChannelRep mixer_channel(const ChannelRep &phi, double lambda);
/// -Id + 2 D_0: point inversion through 1/d. Never CP.
ChannelRep inversion_map(int d);

/// Channel from Kraus operators (all d_out x d_in).
ChannelRep channel_from_kraus(const std::vector<ComplexMatrix> &kraus);

ComplexMatrix apply_channel(const ChannelRep &phi, const ComplexMatrix &rho);
ComplexMatrix apply_channel(const ChannelRep &phi, const DensityMatrix &rho);
/// (Id_A (x) Phi)(rho_AB) with the A factor outer.
ComplexMatrix apply_extended(const ChannelRep &phi, const ComplexMatrix &rho_ab, int dim_a);
/// outer o inner.
ChannelRep compose(const ChannelRep &outer, const ChannelRep &inner);
/// Affine combination sum_k w_k Phi_k of maps with equal dimensions.
ChannelRep linear_combination(const std::vector<double> &weights, const std::vector<ChannelRep> &maps);

std::vector<ComplexMatrix> kraus_from_choi(const ChannelRep &phi);

/// Stinespring isometry V|phi> = sum_z sqrt(p_z) W_z|phi> (x) |z>_E of a WCC;
/// rows ordered system outer, environment inner.
ComplexMatrix wcc_stinespring_isometry(const WccSpec &spec);
/// rho -> tr_{traced}[V rho V^dagger] for an isometry V: d_in -> d_sys*d_env.
ChannelRep channel_from_isometry(const ComplexMatrix &isometry, int d_sys, int d_env, Subsystem keep);
/// Channel to the environment of the WCC dilation; output dimension d^2.
ChannelRep complementary_wcc(const WccSpec &spec);

/// Choi eigenvalues, descending.
RealVector cj_spectrum(const ChannelRep &phi);

/// Weights of D_lambda written as a WCC.
ProbabilityVector dc_as_wcc_distribution(int d, double lambda);
/// Weights of the mixer over Phi_q: (1 + (d^2 q_z - 1) lambda) / d^2.
ProbabilityVector mixer_wcc_distribution(const ProbabilityVector &q, int d, double lambda);

}  // namespace qrecip
