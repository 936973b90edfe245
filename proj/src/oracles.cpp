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

#include "qrecip/oracles.hpp"

#include <cmath>
#include <limits>

#include "qrecip/nelder_mead.hpp"

namespace qrecip {

namespace {

void require_channel(const ChannelRep &phi, const char *what) {
    if (!phi.is_channel()) {
        throw Error(Errc::not_a_channel, std::string(what) + " needs a CP trace-preserving map");
    }
}

/// Entropy from eigenvalues already known to come from a PSD matrix.
double entropy_of_spectrum(const RealVector &ev) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] > tol::zero_eigenvalue) {
            s -= ev[i] * std::log2(ev[i]);
        }
    }
    return s;
}

double mutual_information_raw(const ComplexMatrix &rho, const ChannelRep &phi) {
    const int d = phi.d_in();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver((rho + rho.adjoint()) * 0.5);
    const RealVector &nu = solver.eigenvalues();
    std::vector<int> support;
    for (int k = 0; k < d; ++k) {
        if (nu[k] > tol::zero_eigenvalue) {
            support.push_back(k);
        }
    }
    const int rank = static_cast<int>(support.size());
    // |rho> = sum_k sqrt(nu_k) |k>_R |e_k>, ancilla outer.
    ComplexVector purification = ComplexVector::Zero(rank * d);
    for (int r = 0; r < rank; ++r) {
        int k = support[static_cast<std::size_t>(r)];
        purification.segment(r * d, d) = std::sqrt(nu[k]) * solver.eigenvectors().col(k);
    }
    ComplexMatrix joint = apply_extended(phi, purification * purification.adjoint(), rank);
    ComplexMatrix output = apply_channel(phi, rho);
    return entropy_of_spectrum(nu) + entropy_of_spectrum(hermitian_eigenvalues(output)) -
           entropy_of_spectrum(hermitian_eigenvalues(joint));
}

ComplexMatrix factor_from_params(std::span<const double> x, int d) {
    ComplexMatrix l(d, d);
    const int n = d * d;
    for (int k = 0; k < n; ++k) {
        l(k / d, k % d) = Complex(x[static_cast<std::size_t>(k)], x[static_cast<std::size_t>(n + k)]);
    }
    return l;
}

std::vector<double> params_from_factor(const ComplexMatrix &l) {
    const int d = static_cast<int>(l.rows());
    const int n = d * d;
    std::vector<double> x(static_cast<std::size_t>(2 * n));
    for (int k = 0; k < n; ++k) {
        x[static_cast<std::size_t>(k)] = l(k / d, k % d).real();
        x[static_cast<std::size_t>(n + k)] = l(k / d, k % d).imag();
    }
    return x;
}

ComplexMatrix state_from_factor(const ComplexMatrix &l) {
    ComplexMatrix rho = l * l.adjoint();
    return rho / rho.trace().real();
}

ComplexVector vector_from_params(std::span<const double> x, int d) {
    ComplexVector v(d);
    for (int k = 0; k < d; ++k) {
        v[k] = Complex(x[static_cast<std::size_t>(k)], x[static_cast<std::size_t>(d + k)]);
    }
    return v;
}

std::vector<double> params_from_vector(const ComplexVector &v) {
    const int d = static_cast<int>(v.size());
    std::vector<double> x(static_cast<std::size_t>(2 * d));
    for (int k = 0; k < d; ++k) {
        x[static_cast<std::size_t>(k)] = v[k].real();
        x[static_cast<std::size_t>(d + k)] = v[k].imag();
    }
    return x;
}

}  // namespace

double mutual_information(const DensityMatrix &rho, const ChannelRep &phi) {
    require_channel(phi, "mutual information");
    if (rho.dim() != phi.d_in()) {
        throw Error(Errc::dimension_mismatch, "mutual information: state and channel dimensions differ");
    }
    return mutual_information_raw(rho.matrix(), phi);
}

OptimizationResult maximize_mutual_information(const ChannelRep &phi, const OptimizerOptions &options, Rng &rng) {
    require_channel(phi, "mutual information maximisation");
    if (options.tol <= 0.0 || options.restarts < 1) {
        throw Error(Errc::out_of_range, "optimizer needs tol > 0 and restarts >= 1");
    }
    const int d = phi.d_in();
    auto objective = [&](std::span<const double> x) {
        ComplexMatrix l = factor_from_params(x, d);
        double norm = l.squaredNorm();
        if (!(norm > 1e-14)) {
            return std::numeric_limits<double>::infinity();
        }
        return -mutual_information_raw(state_from_factor(l), phi);
    };

    std::vector<ComplexMatrix> starts;
    if (options.include_center_start) {
        starts.push_back(identity(d) / std::sqrt(static_cast<double>(d)));
    }
    for (int r = 0; r < options.restarts; ++r) {
        Rng local(rng());
        ComplexMatrix g = ginibre_matrix(d, d, local);
        starts.push_back(g / g.norm());
    }

    SimplexOptions simplex;
    simplex.ftol = options.tol;
    simplex.max_iterations = options.max_iterations;
    simplex.initial_step = 0.25;

    OptimizationResult best;
    best.optimum_value = -std::numeric_limits<double>::infinity();
    for (const auto &l0 : starts) {
        SimplexResult run = nelder_mead_minimize(objective, params_from_factor(l0), simplex);
        best.iterations += run.iterations;
        best.restarts_used += 1;
        if (-run.value > best.optimum_value) {
            best.optimum_value = -run.value;
            best.optimizer_state = DensityMatrix(state_from_factor(factor_from_params(run.x, d)));
            best.converged = run.converged;
        }
    }
    return best;
}

OptimizationResult min_output_entropy(const ChannelRep &phi, const OptimizerOptions &options, Rng &rng) {
    require_channel(phi, "minimum output entropy");
    if (options.tol <= 0.0 || options.restarts < 1) {
        throw Error(Errc::out_of_range, "optimizer needs tol > 0 and restarts >= 1");
    }
    const int d = phi.d_in();
    auto objective = [&](std::span<const double> x) {
        ComplexVector v = vector_from_params(x, d);
        double norm = v.norm();
        if (!(norm > 1e-7)) {
            return std::numeric_limits<double>::infinity();
        }
        v /= norm;
        return entropy_of_spectrum(hermitian_eigenvalues(apply_channel(phi, ComplexMatrix(v * v.adjoint()))));
    };

    std::vector<ComplexVector> starts;
    if (options.include_center_start) {
        starts.push_back(ComplexVector::Unit(d, 0));
    }
    for (int r = 0; r < options.restarts; ++r) {
        Rng local(rng());
        starts.push_back(haar_random_pure(d, local).amplitudes());
    }

    SimplexOptions simplex;
    simplex.ftol = options.tol;
    simplex.max_iterations = options.max_iterations;
    simplex.initial_step = 0.3;

    OptimizationResult best;
    best.optimum_value = std::numeric_limits<double>::infinity();
    for (const auto &v0 : starts) {
        SimplexResult run = nelder_mead_minimize(objective, params_from_vector(v0), simplex);
        best.iterations += run.iterations;
        best.restarts_used += 1;
        if (run.value < best.optimum_value) {
            best.optimum_value = run.value;
            ComplexVector v = vector_from_params(run.x, d).normalized();
            best.optimizer_state = DensityMatrix(v * v.adjoint());
            best.converged = run.converged;
        }
    }
    return best;
}

double pure_state_fidelity(const ChannelRep &phi, const PureState &psi) {
    if (psi.dim() != phi.d_in() || phi.d_in() != phi.d_out()) {
        throw Error(Errc::dimension_mismatch, "fidelity: state and channel dimensions differ");
    }
    const ComplexVector &v = psi.amplitudes();
    return (v.adjoint() * apply_channel(phi, psi.projector()) * v)(0, 0).real();
}

FidelityEstimate mc_average_fidelity(const ChannelRep &phi, int samples, Rng &rng) {
    require_channel(phi, "Monte-Carlo fidelity");
    if (samples < 1000) {
        throw Error(Errc::out_of_range, "Monte-Carlo fidelity needs at least 1000 samples");
    }
    FidelityEstimate est;
    est.min_sample = std::numeric_limits<double>::infinity();
    est.max_sample = -std::numeric_limits<double>::infinity();
    // Welford accumulation.
    double mean = 0.0;
    double m2 = 0.0;
    for (int n = 1; n <= samples; ++n) {
        double f = pure_state_fidelity(phi, haar_random_pure(phi.d_in(), rng));
        est.min_sample = std::min(est.min_sample, f);
        est.max_sample = std::max(est.max_sample, f);
        double delta = f - mean;
        mean += delta / n;
        m2 += delta * (f - mean);
    }
    est.mean = mean;
    double variance = samples > 1 ? m2 / (samples - 1) : 0.0;
    est.standard_error = std::sqrt(std::max(variance, 0.0) / samples);
    return est;
}

double dc_projection_lambda(const ChannelRep &phi) {
    const int d = phi.d_in();
    const double d2 = static_cast<double>(d) * d;
    ComplexVector omega = maximally_entangled(d);
    double overlap = (omega.adjoint() * phi.choi() * omega)(0, 0).real();
    return (d2 * overlap - 1.0) / (d2 - 1.0);
}

TwirlEstimate twirl_channel_mc(const ChannelRep &phi, int samples, Rng &rng) {
    require_channel(phi, "twirling");
    if (samples < 1000) {
        throw Error(Errc::out_of_range, "twirling needs at least 1000 samples");
    }
    if (phi.d_in() != phi.d_out()) {
        throw Error(Errc::dimension_mismatch, "twirling needs d_in == d_out");
    }
    const int d = phi.d_in();
    ComplexMatrix acc = ComplexMatrix::Zero(d * d, d * d);
    for (int n = 0; n < samples; ++n) {
        ComplexMatrix u = haar_random_unitary(d, rng);
        // Choi of U^dagger Phi(U . U^dagger) U is (U^T (x) U^dagger) J (conj(U) (x) U).
        ComplexMatrix left = tensor(ComplexMatrix(u.transpose()), ComplexMatrix(u.adjoint()));
        acc.noalias() += left * phi.choi() * left.adjoint();
    }
    acc /= static_cast<double>(samples);
    ChannelRep twirled(std::move(acc), d, d);
    double lambda_hat = dc_projection_lambda(twirled);
    return TwirlEstimate{std::move(twirled), lambda_hat};
}

}  // namespace qrecip
