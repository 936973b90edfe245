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

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qrecip/error.hpp"

namespace qrecip {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Explicitly threaded random engine. Every stochastic routine takes one by
/// reference; nothing in the library owns global RNG state.
using Rng = std::mt19937_64;

namespace tol {
inline constexpr double hermitian = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double negative_eigenvalue = 1e-10;
inline constexpr double zero_eigenvalue = 1e-12;
inline constexpr double pure_norm = 1e-12;
inline constexpr double weight = 1e-12;
inline constexpr double weight_sum = 1e-10;
}  // namespace tol

/// Hermitian, positive semidefinite, unit trace. Construction validates.
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix mat);

    static DensityMatrix maximally_mixed(int dim);

    const ComplexMatrix &matrix() const noexcept {
        return mat_;
    }
    int dim() const noexcept {
        return static_cast<int>(mat_.rows());
    }

   private:
    ComplexMatrix mat_;
};

/// Unit-norm state vector.
class PureState {
   public:
    explicit PureState(ComplexVector amplitudes);

    const ComplexVector &amplitudes() const noexcept {
        return amp_;
    }
    int dim() const noexcept {
        return static_cast<int>(amp_.size());
    }
    ComplexMatrix projector() const;
    DensityMatrix density() const;

   private:
    ComplexVector amp_;
};

/// Nonnegative weights summing to one. Weights within 1e-12 of [0, 1] are
/// clamped; anything further out is rejected.
class ProbabilityVector {
   public:
    explicit ProbabilityVector(std::vector<double> weights);

    static ProbabilityVector uniform(std::size_t n);
    static ProbabilityVector delta(std::size_t n, std::size_t at);

    std::span<const double> weights() const noexcept {
        return w_;
    }
    std::size_t size() const noexcept {
        return w_.size();
    }
    double operator[](std::size_t i) const {
        return w_[i];
    }

   private:
    std::vector<double> w_;
};

enum class Subsystem { A, B };

bool is_square(const ComplexMatrix &m);
bool is_hermitian(const ComplexMatrix &m, double tolerance = tol::hermitian);
ComplexMatrix identity(int dim);

/// Eigenvalues of the Hermitian part (H + H^dagger)/2, ascending.
RealVector hermitian_eigenvalues(const ComplexMatrix &h);
double min_eigenvalue(const ComplexMatrix &h);

/// Entropies in bits. Eigenvalues in [-1e-10, 1e-12) count as zero; anything
/// more negative, or a non-Hermitian argument, raises Errc::invalid_state.
double von_neumann_entropy(const DensityMatrix &rho);
double von_neumann_entropy(const ComplexMatrix &rho);
double shannon_entropy(const ProbabilityVector &p);
double shannon_entropy(std::span<const double> p);

/// Schatten-1 norm (sum of singular values).
double trace_norm(const ComplexMatrix &a);

/// Kronecker product, A index outer.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector tensor(const ComplexVector &a, const ComplexVector &b);

ComplexMatrix partial_trace(const ComplexMatrix &x, int dim_a, int dim_b, Subsystem keep);

PureState haar_random_pure(int dim, Rng &rng);
ComplexMatrix haar_random_unitary(int dim, Rng &rng);
/// Matrix of i.i.d. standard complex Gaussians (E|z|^2 = 1).
ComplexMatrix ginibre_matrix(int rows, int cols, Rng &rng);
/// Full-rank mixed state from the Hilbert-Schmidt (induced) measure.
DensityMatrix random_density_matrix(int dim, Rng &rng);
ProbabilityVector random_probability_vector(std::size_t n, Rng &rng);

/// Pauli matrices sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
const std::array<ComplexMatrix, 3> &pauli_matrices();
DensityMatrix bloch_to_density(const std::array<double, 3> &r);
std::array<double, 3> density_to_bloch(const DensityMatrix &rho);

}  // namespace qrecip
