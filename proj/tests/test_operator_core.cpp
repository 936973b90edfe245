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

#include <gtest/gtest.h>

#include <cmath>

#include "qrecip/channels.hpp"
#include "qrecip/operator_core.hpp"

using namespace qrecip;

namespace {

ComplexMatrix diag(std::initializer_list<double> v) {
    RealVector d(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) {
        d[i++] = x;
    }
    return d.cast<Complex>().asDiagonal();
}

// H(1/4, 3/8, 3/8) = 1/2 + (3/4) log2(8/3), evaluated in extended precision.
constexpr double kEntropyQuarterThreeEighths = 1.5612781244591328;

/// Per-entry sample mean and standard error of a matrix-valued statistic.
struct MatrixMoments {
    ComplexMatrix sum;
    Eigen::MatrixXd sum_sq_re;
    Eigen::MatrixXd sum_sq_im;
    int n = 0;

    explicit MatrixMoments(int d)
        : sum(ComplexMatrix::Zero(d, d)), sum_sq_re(Eigen::MatrixXd::Zero(d, d)), sum_sq_im(Eigen::MatrixXd::Zero(d, d)) {}

    void add(const ComplexMatrix &x) {
        sum += x;
        sum_sq_re += x.real().cwiseAbs2();
        sum_sq_im += x.imag().cwiseAbs2();
        ++n;
    }

    /// Largest |mean - target| in units of the per-component standard error.
    double max_sigma(const ComplexMatrix &target) const {
        double worst = 0.0;
        for (Eigen::Index i = 0; i < sum.rows(); ++i) {
            for (Eigen::Index j = 0; j < sum.cols(); ++j) {
                auto score = [&](double mean, double sq, double want) {
                    double var = (sq / n - mean * mean) * n / (n - 1.0);
                    double se = std::sqrt(std::max(var, 0.0) / n);
                    double gap = std::abs(mean - want);
                    return se > 0.0 ? gap / se : (gap < 1e-12 ? 0.0 : INFINITY);
                };
                Complex mean = sum(i, j) / static_cast<double>(n);
                worst = std::max(worst, score(mean.real(), sum_sq_re(i, j), target(i, j).real()));
                worst = std::max(worst, score(mean.imag(), sum_sq_im(i, j), target(i, j).imag()));
            }
        }
        return worst;
    }
};

}  // namespace

TEST(DensityMatrix, RejectsInvalidInput) {
    EXPECT_THROW(DensityMatrix(diag({0.7, 0.7})), Error);
    EXPECT_THROW(DensityMatrix(diag({1.5, -0.5})), Error);
    ComplexMatrix nonherm = diag({0.5, 0.5});
    nonherm(0, 1) = 0.3;
    EXPECT_THROW(DensityMatrix{nonherm}, Error);
    EXPECT_THROW(DensityMatrix(ComplexMatrix::Identity(2, 3)), Error);
    EXPECT_NO_THROW(DensityMatrix(diag({1.0 + 5e-11, -5e-11})));
}

TEST(DensityMatrix, MaximallyMixed) {
    DensityMatrix rho = DensityMatrix::maximally_mixed(4);
    EXPECT_EQ(rho.dim(), 4);
    EXPECT_NEAR((rho.matrix() - identity(4) / 4.0).norm(), 0.0, 1e-15);
}

TEST(PureState, NormChecked) {
    ComplexVector v(2);
    v << 1.0, 0.0;
    EXPECT_NO_THROW(PureState{v});
    v << 1.0, 1e-3;
    EXPECT_THROW(PureState{v}, Error);
    v << Complex(0, 1) / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    PureState psi(v);
    EXPECT_NEAR(std::abs(psi.projector().trace() - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(psi.density()), 0.0, 1e-12);
}

TEST(ProbabilityVector, ClampsAndValidates) {
    ProbabilityVector p({1.0 + 5e-13, -5e-13});
    EXPECT_EQ(p[0], 1.0);
    EXPECT_EQ(p[1], 0.0);
    EXPECT_THROW(ProbabilityVector({1.1, -0.1}), Error);
    EXPECT_THROW(ProbabilityVector({0.5, 0.4}), Error);
    EXPECT_THROW(ProbabilityVector(std::vector<double>{}), Error);
    try {
        ProbabilityVector({0.6, 0.6});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::invalid_distribution);
    }
    EXPECT_NEAR(ProbabilityVector::uniform(4)[3], 0.25, 0.0);
    EXPECT_EQ(ProbabilityVector::delta(3, 2)[2], 1.0);
}

TEST(Entropy, VonNeumannExamples) {
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(3)), std::log2(3.0), 1e-12);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(diag({0.25, 0.375, 0.375}))), kEntropyQuarterThreeEighths, 1e-12);
    Rng rng(11);
    EXPECT_NEAR(von_neumann_entropy(haar_random_pure(4, rng).density()), 0.0, 1e-10);
}

TEST(Entropy, VonNeumannRejectsNegativeAndNonHermitian) {
    try {
        von_neumann_entropy(ComplexMatrix(diag({1.1, -0.1})));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::invalid_state);
    }
    ComplexMatrix m = diag({0.5, 0.5});
    m(0, 1) = Complex(0.0, 0.2);
    EXPECT_THROW(von_neumann_entropy(m), Error);
    EXPECT_NEAR(von_neumann_entropy(ComplexMatrix(diag({1.0, -5e-11}))), 0.0, 1e-9);
}

TEST(Entropy, ShannonExamples) {
    EXPECT_NEAR(shannon_entropy(ProbabilityVector({1.0, 0.0, 0.0})), 0.0, 0.0);
    EXPECT_NEAR(shannon_entropy(ProbabilityVector::uniform(4)), 2.0, 1e-15);
    EXPECT_NEAR(shannon_entropy(ProbabilityVector({0.25, 0.375, 0.375})), kEntropyQuarterThreeEighths, 1e-14);
}

TEST(Entropy, BoundedByLogDimension) {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        int d = 2 + trial % 4;
        double s = von_neumann_entropy(random_density_matrix(d, rng));
        EXPECT_GE(s, -1e-12);
        EXPECT_LE(s, std::log2(static_cast<double>(d)) + 1e-12);
    }
}

TEST(TraceNorm, Examples) {
    EXPECT_NEAR(trace_norm(identity(3)), 3.0, 1e-12);
    EXPECT_NEAR(trace_norm(diag({0.5, -0.5})), 1.0, 1e-12);
    EXPECT_NEAR(trace_norm(diag({1, 0}) - diag({0, 1})), 2.0, 1e-12);
}

TEST(TraceNorm, NormAxioms) {
    Rng rng(5);
    std::uniform_real_distribution<double> scale(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        ComplexMatrix a = ginibre_matrix(3, 3, rng);
        ComplexMatrix b = ginibre_matrix(3, 3, rng);
        EXPECT_LE(trace_norm(a + b), trace_norm(a) + trace_norm(b) + 1e-9);
        double c = scale(rng);
        EXPECT_NEAR(trace_norm(c * a), std::abs(c) * trace_norm(a), 1e-9);
    }
}

TEST(Tensor, Examples) {
    EXPECT_NEAR((tensor(identity(2), identity(2)) - identity(4)).norm(), 0.0, 0.0);
    EXPECT_NEAR((tensor(diag({1, 0}), diag({0, 1})) - diag({0, 1, 0, 0})).norm(), 0.0, 0.0);
    Rng rng(7);
    ComplexMatrix a = ginibre_matrix(2, 2, rng), b = ginibre_matrix(2, 2, rng);
    ComplexMatrix c = ginibre_matrix(2, 2, rng), e = ginibre_matrix(2, 2, rng);
    EXPECT_NEAR((tensor(a, b) * tensor(c, e) - tensor(ComplexMatrix(a * c), ComplexMatrix(b * e))).norm(), 0.0, 1e-12);
}

TEST(PartialTrace, Examples) {
    Rng rng(9);
    DensityMatrix ra = random_density_matrix(2, rng);
    DensityMatrix rb = random_density_matrix(3, rng);
    ComplexMatrix ab = tensor(ra.matrix(), rb.matrix());
    EXPECT_NEAR((partial_trace(ab, 2, 3, Subsystem::A) - ra.matrix()).norm(), 0.0, 1e-12);
    EXPECT_NEAR((partial_trace(ab, 2, 3, Subsystem::B) - rb.matrix()).norm(), 0.0, 1e-12);

    ComplexVector omega = maximally_entangled(2);
    ComplexMatrix proj = omega * omega.adjoint();
    EXPECT_NEAR((partial_trace(proj, 2, 2, Subsystem::B) - identity(2) / 2.0).norm(), 0.0, 1e-12);

    for (int trial = 0; trial < 20; ++trial) {
        ComplexMatrix x = ginibre_matrix(6, 6, rng);
        EXPECT_NEAR(std::abs(partial_trace(x, 3, 2, Subsystem::A).trace() - x.trace()), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(partial_trace(x, 3, 2, Subsystem::B).trace() - x.trace()), 0.0, 1e-12);
    }
    EXPECT_THROW(partial_trace(identity(5), 2, 3, Subsystem::A), Error);
}

TEST(Eigen, HermitianSpectrumIsRealAndSorted) {
    Rng rng(13);
    ComplexMatrix g = ginibre_matrix(4, 4, rng);
    ComplexMatrix h = g + g.adjoint();
    RealVector ev = hermitian_eigenvalues(h);
    for (Eigen::Index i = 1; i < ev.size(); ++i) {
        EXPECT_LE(ev[i - 1], ev[i]);
    }
    EXPECT_NEAR(ev.sum(), h.trace().real(), 1e-10);
    EXPECT_EQ(min_eigenvalue(h), ev[0]);
}

TEST(Haar, PureStateBasics) {
    Rng a(42), b(42);
    PureState x = haar_random_pure(5, a);
    PureState y = haar_random_pure(5, b);
    EXPECT_NEAR(x.amplitudes().norm(), 1.0, 1e-12);
    EXPECT_EQ((x.amplitudes() - y.amplitudes()).norm(), 0.0);
    EXPECT_THROW(haar_random_pure(1, a), Error);
}

TEST(Haar, PureStateFirstMoment) {
    Rng rng(2024);
    MatrixMoments m(2);
    for (int n = 0; n < 100000; ++n) {
        m.add(haar_random_pure(2, rng).projector());
    }
    EXPECT_LT(m.max_sigma(identity(2) / 2.0), 3.0);
}

TEST(Haar, UnitaryBasics) {
    Rng rng(17);
    for (int d = 2; d <= 6; ++d) {
        ComplexMatrix u = haar_random_unitary(d, rng);
        EXPECT_NEAR((u.adjoint() * u - identity(d)).norm(), 0.0, 1e-10);
        EXPECT_NEAR(std::abs(u.determinant()), 1.0, 1e-10);
    }
    EXPECT_THROW(haar_random_unitary(1, rng), Error);
}

TEST(Haar, UnitaryTwirlOfOperator) {
    Rng rng(2025);
    ComplexMatrix x(2, 2);
    x << 0.8, Complex(0.3, -0.1), Complex(0.2, 0.4), 0.5;
    MatrixMoments m(2);
    for (int n = 0; n < 100000; ++n) {
        ComplexMatrix u = haar_random_unitary(2, rng);
        m.add(u * x * u.adjoint());
    }
    EXPECT_LT(m.max_sigma(x.trace() * identity(2) / 2.0), 3.0);
}

TEST(Random, DensityAndDistribution) {
    Rng rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        DensityMatrix r = random_density_matrix(3, rng);
        EXPECT_GT(min_eigenvalue(r.matrix()), 0.0);
        ProbabilityVector p = random_probability_vector(9, rng);
        double total = 0.0;
        for (double w : p.weights()) {
            EXPECT_GE(w, 0.0);
            total += w;
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(Bloch, Examples) {
    EXPECT_NEAR((bloch_to_density({0, 0, 0}).matrix() - identity(2) / 2.0).norm(), 0.0, 1e-15);
    EXPECT_NEAR((bloch_to_density({0, 0, 1}).matrix() - diag({1, 0})).norm(), 0.0, 1e-15);
    EXPECT_THROW(bloch_to_density({0, 0.8, 0.8}), Error);
    EXPECT_NO_THROW(bloch_to_density({0, 0, 1.0 + 5e-13}));

    const auto &s = pauli_matrices();
    EXPECT_NEAR((s[0] * s[1] - Complex(0, 1) * s[2]).norm(), 0.0, 1e-15);
}

TEST(Bloch, RoundTripAndDepolarizingContraction) {
    Rng rng(23);
    std::uniform_real_distribution<double> lam(-1.0 / 3.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        DensityMatrix rho = random_density_matrix(2, rng);
        auto r = density_to_bloch(rho);
        EXPECT_NEAR((bloch_to_density(r).matrix() - rho.matrix()).norm(), 0.0, 1e-12);
        double l = lam(rng);
        auto out = density_to_bloch(DensityMatrix(apply_channel(depolarizing_channel(2, l), rho)));
        for (int k = 0; k < 3; ++k) {
            EXPECT_NEAR(out[k], l * r[k], 1e-12);
        }
    }
}
