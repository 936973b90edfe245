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

#include "qrecip/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qrecip {

namespace {

void require_positive_dim(int d, const char *what) {
    if (d < 2) {
        std::ostringstream msg;
        msg << what << ": dimension must be >= 2, got " << d;
        throw Error(Errc::dimension_mismatch, msg.str());
    }
}

ComplexMatrix omega_projector(int d) {
    ComplexVector omega = maximally_entangled(d);
    return omega * omega.adjoint();
}

/// Choi of lambda*Phi + (1 - lambda)*D_0 given Choi(Phi).
ComplexMatrix mix_with_depolarizer(const ComplexMatrix &choi, double lambda, int d) {
    const double d2 = static_cast<double>(d) * d;
    return lambda * choi + ((1.0 - lambda) / d2) * identity(d * d);
}

}  // namespace

ChannelRep::ChannelRep(ComplexMatrix choi, int d_in, int d_out) : choi_(std::move(choi)), d_in_(d_in), d_out_(d_out) {
    if (d_in < 1 || d_out < 1 || choi_.rows() != d_in * d_out || !is_square(choi_)) {
        throw Error(Errc::dimension_mismatch, "Choi matrix size does not match d_in * d_out");
    }
    min_choi_eigenvalue_ = min_eigenvalue(choi_);
    is_cp_ = is_hermitian(choi_, tol::cp) && min_choi_eigenvalue_ >= -tol::cp;
    ComplexMatrix reduced = partial_trace(choi_, d_in, d_out, Subsystem::A);
    is_tp_ = (reduced - identity(d_in) / static_cast<double>(d_in)).cwiseAbs().maxCoeff() < tol::tp;
}

WccSpec::WccSpec(int d, ProbabilityVector p) : d_(d), p_(std::move(p)) {
    require_positive_dim(d, "WCC");
    if (p_.size() != static_cast<std::size_t>(d) * d) {
        std::ostringstream msg;
        msg << "WCC with d=" << d << " needs " << d * d << " weights, got " << p_.size();
        throw Error(Errc::invalid_distribution, msg.str());
    }
}

ComplexMatrix weyl_operator(int d, WeylLabel z) {
    require_positive_dim(d, "Weyl operator");
    if (z.x < 0 || z.x >= d || z.y < 0 || z.y >= d) {
        std::ostringstream msg;
        msg << "Weyl label (" << z.x << "," << z.y << ") out of range for d=" << d;
        throw Error(Errc::out_of_range, msg.str());
    }
    // (U^x V^y)|e_j> = exp(2 pi i j y / d) |e_{j+x mod d}>
    ComplexMatrix w = ComplexMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>((static_cast<long>(j) * z.y) % d) / d;
        w((j + z.x) % d, j) = std::polar(1.0, angle);
    }
    return w;
}

ComplexVector maximally_entangled(int d) {
    ComplexVector omega = ComplexVector::Zero(d * d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) {
        omega[i * d + i] = amp;
    }
    return omega;
}

ChannelRep identity_channel(int d) {
    require_positive_dim(d, "identity channel");
    return ChannelRep(omega_projector(d), d, d);
}

ChannelRep completely_depolarizing(int d) {
    require_positive_dim(d, "completely depolarizing channel");
    return ChannelRep(identity(d * d) / (static_cast<double>(d) * d), d, d);
}

ChannelRep depolarizing_channel(int d, double lambda, CpPolicy policy) {
    require_positive_dim(d, "depolarizing channel");
    const double lambda_min = -1.0 / (static_cast<double>(d) * d - 1.0);
    if (policy == CpPolicy::enforce && (lambda < lambda_min - 1e-12 || lambda > 1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "depolarizing parameter " << lambda << " outside CP range [" << lambda_min << ", 1] for d=" << d;
        throw Error(Errc::cp_violation, msg.str());
    }
    return ChannelRep(mix_with_depolarizer(omega_projector(d), lambda, d), d, d);
}

ChannelRep channel_from_kraus(const std::vector<ComplexMatrix> &kraus) {
    if (kraus.empty()) {
        throw Error(Errc::dimension_mismatch, "empty Kraus list");
    }
    const int d_out = static_cast<int>(kraus.front().rows());
    const int d_in = static_cast<int>(kraus.front().cols());
    ComplexMatrix choi = ComplexMatrix::Zero(d_in * d_out, d_in * d_out);
    ComplexVector m(d_in * d_out);
    for (const auto &k : kraus) {
        if (k.rows() != d_out || k.cols() != d_in) {
            throw Error(Errc::dimension_mismatch, "Kraus operators of different shapes");
        }
        // |m> = sum_i |i> (x) K|i>
        for (int i = 0; i < d_in; ++i) {
            m.segment(i * d_out, d_out) = k.col(i);
        }
        choi.noalias() += m * m.adjoint();
    }
    choi /= static_cast<double>(d_in);
    return ChannelRep(std::move(choi), d_in, d_out);
}

ChannelRep wcc_channel(const WccSpec &spec) {
    const int d = spec.d();
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(static_cast<std::size_t>(d) * d);
    for (int idx = 0; idx < d * d; ++idx) {
        double p = spec.p()[static_cast<std::size_t>(idx)];
        if (p > 0.0) {
            kraus.push_back(std::sqrt(p) * weyl_operator(d, WeylLabel::from_index(idx, d)));
        }
    }
    return channel_from_kraus(kraus);
}

ChannelRep mixer_channel(const ChannelRep &phi, double lambda) {
    if (phi.d_in() != phi.d_out()) {
        throw Error(Errc::dimension_mismatch, "mixer needs a map with equal input and output dimension");
    }
    if (!phi.is_tp()) {
        throw Error(Errc::not_a_channel, "mixer base map is not trace preserving");
    }
    return ChannelRep(mix_with_depolarizer(phi.choi(), lambda, phi.d_in()), phi.d_in(), phi.d_out());
}

ChannelRep inversion_map(int d) {
    require_positive_dim(d, "inversion map");
    const double d2 = static_cast<double>(d) * d;
    return ChannelRep(-omega_projector(d) + (2.0 / d2) * identity(d * d), d, d);
}

ComplexMatrix apply_channel(const ChannelRep &phi, const ComplexMatrix &rho) {
    const int d_in = phi.d_in();
    const int d_out = phi.d_out();
    if (rho.rows() != d_in || rho.cols() != d_in) {
        std::ostringstream msg;
        msg << "apply: input is " << rho.rows() << "x" << rho.cols() << ", channel expects " << d_in;
        throw Error(Errc::dimension_mismatch, msg.str());
    }
    // Block (i, j) of the Choi matrix is Phi(|i><j|) / d_in.
    ComplexMatrix out = ComplexMatrix::Zero(d_out, d_out);
    for (int i = 0; i < d_in; ++i) {
        for (int j = 0; j < d_in; ++j) {
            if (rho(i, j) != Complex(0.0)) {
                out += rho(i, j) * phi.choi().block(i * d_out, j * d_out, d_out, d_out);
            }
        }
    }
    return out * static_cast<double>(d_in);
}

ComplexMatrix apply_channel(const ChannelRep &phi, const DensityMatrix &rho) {
    return apply_channel(phi, rho.matrix());
}

ComplexMatrix apply_extended(const ChannelRep &phi, const ComplexMatrix &rho_ab, int dim_a) {
    const int d_in = phi.d_in();
    const int d_out = phi.d_out();
    if (dim_a < 1 || rho_ab.rows() != dim_a * d_in || rho_ab.cols() != dim_a * d_in) {
        throw Error(Errc::dimension_mismatch, "apply_extended: input size does not match dim_a * d_in");
    }
    ComplexMatrix out(dim_a * d_out, dim_a * d_out);
    for (int a = 0; a < dim_a; ++a) {
        for (int b = 0; b < dim_a; ++b) {
            out.block(a * d_out, b * d_out, d_out, d_out) = apply_channel(phi, rho_ab.block(a * d_in, b * d_in, d_in, d_in));
        }
    }
    return out;
}

ChannelRep compose(const ChannelRep &outer, const ChannelRep &inner) {
    if (inner.d_out() != outer.d_in()) {
        throw Error(Errc::dimension_mismatch, "compose: inner output dimension differs from outer input");
    }
    return ChannelRep(apply_extended(outer, inner.choi(), inner.d_in()), inner.d_in(), outer.d_out());
}

ChannelRep linear_combination(const std::vector<double> &weights, const std::vector<ChannelRep> &maps) {
    if (weights.size() != maps.size() || maps.empty()) {
        throw Error(Errc::dimension_mismatch, "linear_combination: weights and maps differ in length");
    }
    ComplexMatrix choi = ComplexMatrix::Zero(maps.front().choi().rows(), maps.front().choi().cols());
    for (std::size_t k = 0; k < maps.size(); ++k) {
        if (maps[k].d_in() != maps.front().d_in() || maps[k].d_out() != maps.front().d_out()) {
            throw Error(Errc::dimension_mismatch, "linear_combination: maps of different dimensions");
        }
        choi += weights[k] * maps[k].choi();
    }
    return ChannelRep(std::move(choi), maps.front().d_in(), maps.front().d_out());
}

std::vector<ComplexMatrix> kraus_from_choi(const ChannelRep &phi) {
    if (!phi.is_cp()) {
        throw Error(Errc::not_a_channel, "Kraus decomposition of a non-CP map");
    }
    const int d_in = phi.d_in();
    const int d_out = phi.d_out();
    ComplexMatrix sym = (phi.choi() + phi.choi().adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    std::vector<ComplexMatrix> kraus;
    for (Eigen::Index k = solver.eigenvalues().size() - 1; k >= 0; --k) {
        double mu = solver.eigenvalues()[k];
        if (mu < 1e-10) {
            continue;
        }
        ComplexVector v = solver.eigenvectors().col(k) * std::sqrt(d_in * mu);
        ComplexMatrix m(d_out, d_in);
        for (int i = 0; i < d_in; ++i) {
            m.col(i) = v.segment(i * d_out, d_out);
        }
        kraus.push_back(std::move(m));
    }
    return kraus;
}

ComplexMatrix wcc_stinespring_isometry(const WccSpec &spec) {
    const int d = spec.d();
    const int d_env = d * d;
    ComplexMatrix v = ComplexMatrix::Zero(d * d_env, d);
    for (int z = 0; z < d_env; ++z) {
        double p = spec.p()[static_cast<std::size_t>(z)];
        if (p <= 0.0) {
            continue;
        }
        ComplexMatrix w = std::sqrt(p) * weyl_operator(d, WeylLabel::from_index(z, d));
        for (int s = 0; s < d; ++s) {
            v.row(s * d_env + z) = w.row(s);
        }
    }
    return v;
}

ChannelRep channel_from_isometry(const ComplexMatrix &isometry, int d_sys, int d_env, Subsystem keep) {
    const int d_in = static_cast<int>(isometry.cols());
    if (isometry.rows() != d_sys * d_env) {
        throw Error(Errc::dimension_mismatch, "isometry rows do not match d_sys * d_env");
    }
    // (1 (x) V)|Omega> on R (x) S (x) E, then trace the discarded factor.
    ComplexVector omega = maximally_entangled(d_in);
    const int d_total = d_sys * d_env;
    ComplexVector psi(d_in * d_total);
    for (int r = 0; r < d_in; ++r) {
        psi.segment(r * d_total, d_total) = isometry * omega.segment(r * d_in, d_in);
    }
    if (keep == Subsystem::A) {
        ComplexMatrix full = psi * psi.adjoint();
        return ChannelRep(partial_trace(full, d_in * d_sys, d_env, Subsystem::A), d_in, d_sys);
    }
    // Reorder R S E -> R E S so the system sits last.
    ComplexVector reordered(psi.size());
    for (int r = 0; r < d_in; ++r) {
        for (int s = 0; s < d_sys; ++s) {
            for (int e = 0; e < d_env; ++e) {
                reordered[(r * d_env + e) * d_sys + s] = psi[(r * d_sys + s) * d_env + e];
            }
        }
    }
    ComplexMatrix full = reordered * reordered.adjoint();
    return ChannelRep(partial_trace(full, d_in * d_env, d_sys, Subsystem::A), d_in, d_env);
}

ChannelRep complementary_wcc(const WccSpec &spec) {
    const int d = spec.d();
    return channel_from_isometry(wcc_stinespring_isometry(spec), d, d * d, Subsystem::B);
}

RealVector cj_spectrum(const ChannelRep &phi) {
    RealVector ev = hermitian_eigenvalues(phi.choi());
    return ev.reverse();
}

ProbabilityVector dc_as_wcc_distribution(int d, double lambda) {
    require_positive_dim(d, "DC distribution");
    const double d2 = static_cast<double>(d) * d;
    std::vector<double> p(static_cast<std::size_t>(d) * d, (1.0 - lambda) / d2);
    p[0] = (1.0 + (d2 - 1.0) * lambda) / d2;
    return ProbabilityVector(std::move(p));
}

ProbabilityVector mixer_wcc_distribution(const ProbabilityVector &q, int d, double lambda) {
    const double d2 = static_cast<double>(d) * d;
    if (q.size() != static_cast<std::size_t>(d) * d) {
        throw Error(Errc::invalid_distribution, "mixer distribution: q must have d^2 entries");
    }
    std::vector<double> p(q.size());
    for (std::size_t z = 0; z < q.size(); ++z) {
        p[z] = (1.0 + (d2 * q[z] - 1.0) * lambda) / d2;
    }
    return ProbabilityVector(std::move(p));
}

}  // namespace qrecip
