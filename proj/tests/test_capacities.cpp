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
#include <functional>
#include <limits>

#include "qrecip/capacities.hpp"

using namespace qrecip;

namespace {

Errc code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return Errc::invalid_state;
}

// Reference values from a 30-digit evaluation of the same closed forms.
constexpr double kSminD3Edge = 1.5612781244591328;
constexpr double kCuaD3Minus = 0.023684376262023318;
constexpr double kCuaD3Plus = 0.021760410736670041;
constexpr double kCeaD2Minus = 0.41503749927884382;
constexpr double kCeaD2Plus = 0.20751874963942191;
constexpr double kAuaD4Edge = 0.093830146815958345;
constexpr double kAeaEdge[] = {1.0,
                               1.3474466699005120,
                               1.4563051433871816,
                               1.5048887474823727,
                               1.5308353977489409,
                               1.5463343907787204,
                               1.5563361952891517,
                               1.5631675042319285,
                               1.5680410824674669};

double capacity(CapacityKind kind, int d, double l) {
    return kind == CapacityKind::UA ? c_ua_dc(d, l) : c_ea_dc(d, l);
}

std::vector<double> lambda_grid(int d, int n) {
    std::vector<double> out;
    double lm = lambda_min_dc(d);
    for (int k = 0; k < n; ++k) {
        out.push_back(lm + (1.0 - lm) * k / (n - 1.0));
    }
    return out;
}

}  // namespace

TEST(LambdaMin, Values) {
    EXPECT_DOUBLE_EQ(lambda_min_dc(2), -1.0 / 3.0);
    EXPECT_DOUBLE_EQ(lambda_min_dc(3), -1.0 / 8.0);
    EXPECT_DOUBLE_EQ(lambda_min_dc(10), -1.0 / 99.0);
    EXPECT_EQ(code_of([] { lambda_min_dc(1); }), Errc::dimension_mismatch);
}

TEST(Smin, Examples) {
    for (int d = 2; d <= 6; ++d) {
        EXPECT_NEAR(smin_dc(d, 1.0), 0.0, 1e-15);
        EXPECT_NEAR(smin_dc(d, 0.0), std::log2(static_cast<double>(d)), 1e-14);
    }
    EXPECT_NEAR(smin_dc(3, -0.125), kSminD3Edge, 1e-14);
    EXPECT_EQ(code_of([] { smin_dc(3, -0.13); }), Errc::cp_violation);
}

TEST(Cua, Examples) {
    for (int d = 2; d <= 6; ++d) {
        EXPECT_NEAR(c_ua_dc(d, 1.0), std::log2(static_cast<double>(d)), 1e-14);
        EXPECT_NEAR(c_ua_dc(d, 0.0), 0.0, 1e-14);
    }
    EXPECT_NEAR(c_ua_dc(3, -0.125), kCuaD3Minus, 1e-14);
    EXPECT_NEAR(c_ua_dc(3, 0.125), kCuaD3Plus, 1e-14);
    EXPECT_GT(c_ua_dc(3, -0.125), c_ua_dc(3, 0.125));
    EXPECT_EQ(code_of([] { c_ua_dc(2, 1.2); }), Errc::cp_violation);
}

TEST(Cea, Examples) {
    for (int d = 2; d <= 6; ++d) {
        EXPECT_NEAR(c_ea_dc(d, 1.0), 2.0 * std::log2(static_cast<double>(d)), 1e-14);
        EXPECT_NEAR(c_ea_dc(d, 0.0), 0.0, 1e-14);
    }
    EXPECT_NEAR(c_ea_dc(2, -1.0 / 3.0), kCeaD2Minus, 1e-14);
    EXPECT_NEAR(c_ea_dc(2, 1.0 / 3.0), kCeaD2Plus, 1e-14);
    EXPECT_GT(c_ea_dc(2, -1.0 / 3.0), c_ea_dc(2, 1.0 / 3.0));
    // Range follows the d-dimensional channel, not the d^2 formula it borrows.
    EXPECT_EQ(code_of([] { c_ea_dc(2, -0.34); }), Errc::cp_violation);
}

TEST(Cea, WccForms) {
    for (int d = 2; d <= 5; ++d) {
        std::size_t n = static_cast<std::size_t>(d) * d;
        EXPECT_NEAR(c_ea_wcc(WccSpec(d, ProbabilityVector::delta(n, 0))), 2.0 * std::log2(static_cast<double>(d)),
                    1e-14);
        EXPECT_NEAR(c_ea_wcc(WccSpec(d, ProbabilityVector::uniform(n))), 0.0, 1e-13);
        for (double l : {lambda_min_dc(d), -0.002, 0.3, 0.9}) {
            EXPECT_NEAR(c_ea_wcc(WccSpec(d, dc_as_wcc_distribution(d, l))), c_ea_dc(d, l), 1e-12);
        }
    }
}

TEST(Qea, Halves) {
    EXPECT_NEAR(q_ea(2.0 * std::log2(3.0)), std::log2(3.0), 1e-15);
    EXPECT_EQ(q_ea(0.0), 0.0);
    EXPECT_EQ(q_ea(c_ea_dc(3, -0.125)), c_ea_dc(3, -0.125) / 2.0);
    EXPECT_EQ(code_of([] { q_ea(-0.1); }), Errc::out_of_range);
}

TEST(CpRange, IdentityChannel) {
    for (int d = 2; d <= 5; ++d) {
        CPRange r = cp_range_wcc(dc_as_wcc_distribution(d, 1.0), d);
        EXPECT_NEAR(r.lambda_min, lambda_min_dc(d), 1e-14);
        EXPECT_NEAR(r.lambda_max, 1.0, 1e-14);
        EXPECT_NEAR(r.reciprocal_bound, -lambda_min_dc(d), 1e-14);
    }
}

TEST(CpRange, UniformIsUnbounded) {
    CPRange r = cp_range_wcc(ProbabilityVector::uniform(9), 3);
    EXPECT_EQ(r.lambda_min, -std::numeric_limits<double>::infinity());
    EXPECT_EQ(r.lambda_max, std::numeric_limits<double>::infinity());
    EXPECT_EQ(r.reciprocal_bound, std::numeric_limits<double>::infinity());
    EXPECT_EQ(code_of([] { cp_range_wcc(ProbabilityVector::uniform(8), 3); }), Errc::invalid_distribution);
}

TEST(CpRange, InvariantsOnRandomDistributions) {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 2 + trial % 3;
        CPRange r = cp_range_wcc(random_probability_vector(static_cast<std::size_t>(d) * d, rng), d);
        EXPECT_LT(r.lambda_min, 0.0);
        EXPECT_GT(r.lambda_max, 0.0);
        EXPECT_GT(r.reciprocal_bound, 0.0);
        EXPECT_EQ(r.reciprocal_bound, std::min(-r.lambda_min, r.lambda_max));
    }
}

TEST(AsymmetryDc, QubitUnassistedVanishes) {
    for (int k = 1; k <= 50; ++k) {
        EXPECT_NEAR(asymmetry_ratio_dc(2, k / 150.0, CapacityKind::UA), 0.0, 1e-12);
    }
}

TEST(AsymmetryDc, Landmarks) {
    EXPECT_NEAR(asymmetry_ratio_dc(4, 1.0 / 15.0, CapacityKind::UA), kAuaD4Edge, 1e-12);
    EXPECT_NEAR(asymmetry_ratio_dc(4, 1.0 / 15.0, CapacityKind::UA), 0.094, 5e-3);
    for (int d = 2; d <= 10; ++d) {
        EXPECT_NEAR(asymmetry_ratio_dc(d, -lambda_min_dc(d), CapacityKind::EA), kAeaEdge[d - 2], 1e-11) << "d=" << d;
        if (d > 2) {
            EXPECT_GT(kAeaEdge[d - 2], kAeaEdge[d - 3]);
        }
    }
}

TEST(AsymmetryDc, QuantumAssistedMatchesClassicalAssisted) {
    for (int d = 2; d <= 6; ++d) {
        double a = -lambda_min_dc(d) * 0.6;
        EXPECT_NEAR(asymmetry_ratio_dc(d, a, CapacityKind::Q_EA), asymmetry_ratio_dc(d, a, CapacityKind::EA), 1e-13);
    }
}

TEST(AsymmetryDc, NonnegativeAndEdgeMaximal) {
    for (CapacityKind kind : {CapacityKind::UA, CapacityKind::EA}) {
        for (int d = 2; d <= 10; ++d) {
            double edge = -lambda_min_dc(d);
            double at_edge = asymmetry_ratio_dc(d, edge, kind);
            for (int k = 1; k <= 50; ++k) {
                double a = asymmetry_ratio_dc(d, edge * k / 50.0, kind);
                EXPECT_GE(a, -1e-12);
                EXPECT_LE(a, at_edge + 1e-12);
            }
        }
    }
}

TEST(AsymmetryDc, Errors) {
    EXPECT_EQ(code_of([] { asymmetry_ratio_dc(3, 0.0, CapacityKind::EA); }), Errc::undefined_ratio);
    EXPECT_EQ(code_of([] { asymmetry_ratio_dc(3, 0.2, CapacityKind::EA); }), Errc::out_of_range);
    EXPECT_EQ(code_of([] { asymmetry_ratio_dc(3, -0.1, CapacityKind::UA); }), Errc::out_of_range);
}

TEST(AsymmetryWcc, ReducesToDepolarizing) {
    for (int d = 2; d <= 4; ++d) {
        std::size_t n = static_cast<std::size_t>(d) * d;
        double edge = -lambda_min_dc(d);
        EXPECT_NEAR(asymmetry_ratio_wcc_ea(ProbabilityVector::delta(n, 0), d, edge),
                    asymmetry_ratio_dc(d, edge, CapacityKind::EA), 1e-12);
    }
    EXPECT_NEAR(asymmetry_ratio_wcc_ea(ProbabilityVector::delta(4, 0), 2, 1.0 / 3.0), 1.0, 1e-12);
}

TEST(AsymmetryWcc, NegativeBaseFlipsSign) {
    // Mixer over D_{l1} is D_{l l1}; for l1 < 0 the roles of +|l| and -|l| swap.
    for (int d = 2; d <= 4; ++d) {
        double l1 = lambda_min_dc(d) * 0.8;
        ProbabilityVector q = dc_as_wcc_distribution(d, l1);
        double a = cp_range_wcc(q, d).reciprocal_bound * 0.5;
        double at_minus = c_ea_dc(d, -a * l1), at_plus = c_ea_dc(d, a * l1);
        double want = (at_minus - at_plus) / at_plus;
        EXPECT_NEAR(asymmetry_ratio_wcc_ea(q, d, a), want, 1e-12);
        EXPECT_LT(asymmetry_ratio_wcc_ea(q, d, a), 0.0);
    }
}

TEST(AsymmetryWcc, Errors) {
    EXPECT_EQ(code_of([] { asymmetry_ratio_wcc_ea(ProbabilityVector::uniform(4), 2, 0.1); }), Errc::undefined_ratio);
    EXPECT_EQ(code_of([] { asymmetry_ratio_wcc_ea(ProbabilityVector::delta(4, 0), 2, 0.4); }), Errc::out_of_range);
    EXPECT_EQ(code_of([] { asymmetry_ratio_wcc_ea(ProbabilityVector::delta(4, 0), 2, 0.0); }), Errc::undefined_ratio);
}

TEST(MoverFidelity, Examples) {
    for (int d = 2; d <= 8; ++d) {
        EXPECT_NEAR(mover_fidelity(d, 1.0), 1.0, 1e-15);
        EXPECT_NEAR(mover_fidelity(d, lambda_min_dc(d)), 1.0 / (d + 1.0), 1e-15);
        double prev = -1.0;
        for (double l : lambda_grid(d, 40)) {
            double f = mover_fidelity(d, l);
            EXPECT_GT(f, prev);
            prev = f;
        }
    }
    EXPECT_NEAR(mover_fidelity(3, -0.125), 0.25, 1e-15);
    EXPECT_EQ(code_of([] { mover_fidelity(3, -0.2); }), Errc::cp_violation);
}

TEST(AvgFidelity, Examples) {
    EXPECT_NEAR(avg_output_fidelity(identity_channel(3)), 1.0, 1e-12);
    for (int d = 2; d <= 4; ++d) {
        std::vector<double> w(static_cast<std::size_t>(d) * d, 1.0 / (d * d - 1.0));
        w[0] = 0.0;
        EXPECT_NEAR(avg_output_fidelity(wcc_channel(WccSpec(d, ProbabilityVector(w)))), 1.0 / (d + 1.0), 1e-12);
        for (double l : lambda_grid(d, 7)) {
            EXPECT_NEAR(avg_output_fidelity(depolarizing_channel(d, l)), mover_fidelity(d, l), 1e-12);
        }
    }
    EXPECT_EQ(code_of([] { avg_output_fidelity(inversion_map(2)); }), Errc::not_a_channel);
}

TEST(AvgFidelity, WccClosedFormAndSuperoperatorTrace) {
    Rng rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        int d = 2 + trial % 3;
        WccSpec spec(d, random_probability_vector(static_cast<std::size_t>(d) * d, rng));
        ChannelRep phi = wcc_channel(spec);
        double f = avg_output_fidelity(phi);
        EXPECT_NEAR(f, (d * spec.p()[0] + 1.0) / (d + 1.0), 1e-12);
        EXPECT_NEAR(f, (superoperator_trace(phi) + d) / (d * (d + 1.0)), 1e-12);
    }
}

TEST(Capacities, EaDominatesUa) {
    for (int d = 2; d <= 10; ++d) {
        for (double l : lambda_grid(d, 60)) {
            EXPECT_GE(c_ea_dc(d, l), c_ua_dc(d, l) - 1e-9);
            EXPECT_GE(c_ua_dc(d, l), -1e-12);
            EXPECT_LE(c_ua_dc(d, l), std::log2(static_cast<double>(d)) + 1e-9);
            EXPECT_LE(c_ea_dc(d, l), 2.0 * std::log2(static_cast<double>(d)) + 1e-9);
        }
    }
}

TEST(Capacities, CompositionDoesNotIncrease) {
    for (CapacityKind kind : {CapacityKind::UA, CapacityKind::EA}) {
        for (int d = 2; d <= 6; ++d) {
            auto grid = lambda_grid(d, 15);
            for (double l1 : grid) {
                for (double l2 : grid) {
                    double composed = capacity(kind, d, l1 * l2);
                    EXPECT_LE(composed, std::min(capacity(kind, d, l1), capacity(kind, d, l2)) + 1e-9);
                }
            }
        }
    }
}

TEST(Capacities, ConvexInLambda) {
    for (CapacityKind kind : {CapacityKind::UA, CapacityKind::EA}) {
        for (int d = 2; d <= 6; ++d) {
            auto grid = lambda_grid(d, 12);
            for (double l1 : grid) {
                for (double l2 : grid) {
                    for (double p : {0.1, 0.5, 0.8}) {
                        double mid = capacity(kind, d, p * l1 + (1.0 - p) * l2);
                        EXPECT_LE(mid, p * capacity(kind, d, l1) + (1.0 - p) * capacity(kind, d, l2) + 1e-9);
                    }
                }
            }
        }
    }
}

TEST(Capacities, MixerOverWccMonotone) {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 2 + trial % 3;
        ProbabilityVector q = random_probability_vector(static_cast<std::size_t>(d) * d, rng);
        CPRange r = cp_range_wcc(q, d);
        for (int i = 0; i <= 8; ++i) {
            double l1 = r.lambda_min + (r.lambda_max - r.lambda_min) * i / 8.0;
            double base = c_ea_wcc(WccSpec(d, mixer_wcc_distribution(q, d, l1)));
            for (double l : lambda_grid(d, 9)) {
                double inner = c_ea_wcc(WccSpec(d, mixer_wcc_distribution(q, d, l * l1)));
                EXPECT_LE(inner, base + 1e-9);
            }
        }
    }
}
