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

#include "qrecip/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qrecip {

const char *errc_name(Errc code) {
    switch (code) {
        case Errc::invalid_state:
            return "invalid_state";
        case Errc::invalid_distribution:
            return "invalid_distribution";
        case Errc::dimension_mismatch:
            return "dimension_mismatch";
        case Errc::cp_violation:
            return "cp_violation";
        case Errc::not_a_channel:
            return "not_a_channel";
        case Errc::out_of_range:
            return "out_of_range";
        case Errc::undefined_ratio:
            return "undefined_ratio";
        case Errc::unsupported:
            return "unsupported";
        case Errc::parse_error:
            return "parse_error";
    }
    return "unknown";
}

namespace {

double clean_log_term(double v) {
    if (v < -tol::negative_eigenvalue) {
        std::ostringstream msg;
        msg << "negative eigenvalue " << v << " in entropy argument";
        throw Error(Errc::invalid_state, msg.str());
    }
    if (v < tol::zero_eigenvalue) {
        return 0.0;
    }
    return -v * std::log2(v);
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
    if (!is_square(mat_) || mat_.rows() < 1) {
        throw Error(Errc::invalid_state, "density matrix must be square and non-empty");
    }
    if (!is_hermitian(mat_)) {
        throw Error(Errc::invalid_state, "density matrix is not Hermitian");
    }
    if (std::abs(mat_.trace() - Complex(1.0)) > tol::trace) {
        throw Error(Errc::invalid_state, "density matrix trace differs from 1");
    }
    if (min_eigenvalue(mat_) < -tol::negative_eigenvalue) {
        throw Error(Errc::invalid_state, "density matrix has a negative eigenvalue");
    }
    mat_ = (mat_ + mat_.adjoint()) * 0.5;
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    if (dim < 1) {
        throw Error(Errc::invalid_state, "dimension must be positive");
    }
    return DensityMatrix(identity(dim) / static_cast<double>(dim));
}

PureState::PureState(ComplexVector amplitudes) : amp_(std::move(amplitudes)) {
    if (amp_.size() < 1 || std::abs(amp_.norm() - 1.0) > tol::pure_norm) {
        throw Error(Errc::invalid_state, "pure state must have unit norm");
    }
}

ComplexMatrix PureState::projector() const {
    return amp_ * amp_.adjoint();
}

DensityMatrix PureState::density() const {
    return DensityMatrix(projector());
}

ProbabilityVector::ProbabilityVector(std::vector<double> weights) : w_(std::move(weights)) {
    if (w_.empty()) {
        throw Error(Errc::invalid_distribution, "empty probability vector");
    }
    double sum = 0.0;
    for (double &x : w_) {
        if (!std::isfinite(x) || x < -tol::weight || x > 1.0 + tol::weight) {
            std::ostringstream msg;
            msg << "probability weight " << x << " outside [0, 1]";
            throw Error(Errc::invalid_distribution, msg.str());
        }
        x = std::clamp(x, 0.0, 1.0);
        sum += x;
    }
    if (std::abs(sum - 1.0) > tol::weight_sum) {
        std::ostringstream msg;
        msg << "probability weights sum to " << sum;
        throw Error(Errc::invalid_distribution, msg.str());
    }
}

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
    return ProbabilityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbabilityVector ProbabilityVector::delta(std::size_t n, std::size_t at) {
    std::vector<double> w(n, 0.0);
    w.at(at) = 1.0;
    return ProbabilityVector(std::move(w));
}

bool is_square(const ComplexMatrix &m) {
    return m.rows() == m.cols();
}

bool is_hermitian(const ComplexMatrix &m, double tolerance) {
    if (!is_square(m)) {
        return false;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff() < tolerance;
}

ComplexMatrix identity(int dim) {
    return ComplexMatrix::Identity(dim, dim);
}

RealVector hermitian_eigenvalues(const ComplexMatrix &h) {
    if (!is_square(h)) {
        throw Error(Errc::dimension_mismatch, "eigenvalues of a non-square matrix");
    }
    ComplexMatrix sym = (h + h.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double min_eigenvalue(const ComplexMatrix &h) {
    return hermitian_eigenvalues(h).minCoeff();
}

double von_neumann_entropy(const DensityMatrix &rho) {
    return von_neumann_entropy(rho.matrix());
}

double von_neumann_entropy(const ComplexMatrix &rho) {
    if (!is_hermitian(rho)) {
        throw Error(Errc::invalid_state, "entropy of a non-Hermitian matrix");
    }
    RealVector ev = hermitian_eigenvalues(rho);
    double s = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        s += clean_log_term(ev[i]);
    }
    return s;
}

double shannon_entropy(const ProbabilityVector &p) {
    double s = 0.0;
    for (double x : p.weights()) {
        if (x > 0.0) {
            s -= x * std::log2(x);
        }
    }
    return s;
}

double shannon_entropy(std::span<const double> p) {
    return shannon_entropy(ProbabilityVector(std::vector<double>(p.begin(), p.end())));
}

double trace_norm(const ComplexMatrix &a) {
    if (!is_square(a)) {
        throw Error(Errc::dimension_mismatch, "trace norm of a non-square matrix");
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    return svd.singularValues().sum();
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexVector tensor(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a[i] * b;
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &x, int dim_a, int dim_b, Subsystem keep) {
    if (dim_a < 1 || dim_b < 1 || x.rows() != dim_a * dim_b || x.cols() != dim_a * dim_b) {
        std::ostringstream msg;
        msg << "partial trace: matrix of size " << x.rows() << "x" << x.cols() << " is not " << dim_a << "*"
            << dim_b;
        throw Error(Errc::dimension_mismatch, msg.str());
    }
    if (keep == Subsystem::A) {
        ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
        for (int i = 0; i < dim_a; ++i) {
            for (int j = 0; j < dim_a; ++j) {
                out(i, j) = x.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
            }
        }
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
    for (int i = 0; i < dim_a; ++i) {
        out += x.block(i * dim_b, i * dim_b, dim_b, dim_b);
    }
    return out;
}

ComplexMatrix ginibre_matrix(int rows, int cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix g(rows, cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
            double re = normal(rng);
            double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

PureState haar_random_pure(int dim, Rng &rng) {
    if (dim < 2) {
        throw Error(Errc::dimension_mismatch, "Haar-random pure state needs dimension >= 2");
    }
    ComplexVector v = ginibre_matrix(dim, 1, rng).col(0);
    v.normalize();
    return PureState(std::move(v));
}

ComplexMatrix haar_random_unitary(int dim, Rng &rng) {
    if (dim < 2) {
        throw Error(Errc::dimension_mismatch, "Haar-random unitary needs dimension >= 2");
    }
    ComplexMatrix z = ginibre_matrix(dim, dim, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the column phases so Q is Haar rather than QR-convention biased.
    for (int j = 0; j < dim; ++j) {
        Complex rjj = r(j, j);
        double mag = std::abs(rjj);
        Complex phase = mag > 0.0 ? rjj / mag : Complex(1.0);
        q.col(j) *= phase;
    }
    return q;
}

DensityMatrix random_density_matrix(int dim, Rng &rng) {
    ComplexMatrix g = ginibre_matrix(dim, dim, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(rho);
}

ProbabilityVector random_probability_vector(std::size_t n, Rng &rng) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(n);
    for (double &x : w) {
        x = expo(rng);
    }
    double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (double &x : w) {
        x /= total;
    }
    return ProbabilityVector(std::move(w));
}

const std::array<ComplexMatrix, 3> &pauli_matrices() {
    static const std::array<ComplexMatrix, 3> paulis = [] {
        const Complex i(0.0, 1.0);
        ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
        x << 0.0, 1.0, 1.0, 0.0;
        y << 0.0, -i, i, 0.0;
        z << 1.0, 0.0, 0.0, -1.0;
        return std::array<ComplexMatrix, 3>{x, y, z};
    }();
    return paulis;
}

DensityMatrix bloch_to_density(const std::array<double, 3> &r) {
    double norm = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (norm > 1.0 + 1e-12) {
        throw Error(Errc::invalid_state, "Bloch vector longer than 1");
    }
    double scale = norm > 1.0 ? 1.0 / norm : 1.0;
    const auto &sigma = pauli_matrices();
    ComplexMatrix rho = identity(2);
    for (int k = 0; k < 3; ++k) {
        rho += scale * r[k] * sigma[k];
    }
    return DensityMatrix(rho * 0.5);
}

std::array<double, 3> density_to_bloch(const DensityMatrix &rho) {
    if (rho.dim() != 2) {
        throw Error(Errc::dimension_mismatch, "Bloch vectors are defined for qubits only");
    }
    const auto &sigma = pauli_matrices();
    std::array<double, 3> r{};
    for (int k = 0; k < 3; ++k) {
        r[k] = (rho.matrix() * sigma[k]).trace().real();
    }
    return r;
}

}  // namespace qrecip
